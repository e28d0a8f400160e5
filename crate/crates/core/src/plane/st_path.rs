//! Plane Hamiltonian `s`-`t` paths by splitting along a bad edge.
//!
//! With `t` as star vertex, a path without bad edges walks the rotation of
//! `t` from `s` and finishes with a star edge. Otherwise a bad edge
//! `b = {a, b'}` separates the witnesses (the non-convex side of the
//! triangle on `b` and `t`) from the rest, and the path is assembled from
//! two smaller instances on the induced subsets.
//!
//! Subproblems are vertex subsets of the input drawing; crossings are always
//! queried on the original drawing. An explicit stack replaces recursion.

use crate::drawing::SimpleDrawing;
use crate::edge::Vertex;
use crate::plane::star::raw_bad_edges;

enum Task {
    /// Append a Hamiltonian path of `members` from `s` (already emitted) to `t`.
    Path {
        members: Vec<Vertex>,
        s: Vertex,
        t: Vertex,
    },
    Visit(Vertex),
}

/// Picks the bad edge with most witnesses, the earliest position on ties.
pub(crate) fn choose_bad_edge(bad: &[super::star::RawBadEdge]) -> Option<&super::star::RawBadEdge> {
    bad.iter()
        .fold(None, |best: Option<&super::star::RawBadEdge>, b| match best {
            Some(c) if c.witnesses.len() >= b.witnesses.len() => Some(c),
            _ => Some(b),
        })
}

/// Hamiltonian path of the subdrawing on `members` from `s` to `t`.
///
/// `members` must contain `s` and `t`, which must differ. The result is
/// plane whenever the subdrawing is convex.
pub(crate) fn st_path_in<D: SimpleDrawing + ?Sized>(d: &D, members: Vec<Vertex>, s: Vertex, t: Vertex) -> Vec<Vertex> {
    let n = d.n();
    let mut stamp = vec![0usize; n + 1];
    let mut epoch = 0;
    let mut out = vec![s];
    let mut stack = vec![Task::Path { members, s, t }];
    while let Some(task) = stack.pop() {
        let (members, s, t) = match task {
            Task::Visit(v) => {
                out.push(v);
                continue;
            }
            Task::Path { members, s, t } => (members, s, t),
        };
        match members.len() {
            2 => {
                out.push(t);
                continue;
            }
            3 => {
                let other = members
                    .iter()
                    .copied()
                    .find(|&v| v != s && v != t)
                    .expect("three members");
                out.extend([other, t]);
                continue;
            }
            _ => {}
        }
        epoch += 1;
        for &v in &members {
            stamp[v] = epoch;
        }
        let cyc: Vec<Vertex> = d.rotation(t).iter().copied().filter(|&v| stamp[v] == epoch).collect();
        let len = cyc.len();
        let bad = raw_bad_edges(d, t, &cyc);
        let Some(b) = choose_bad_edge(&bad) else {
            let p = cyc.iter().position(|&v| v == s).expect("s is a member");
            out.extend((1..len).map(|k| cyc[(p + k) % len]));
            out.push(t);
            continue;
        };
        let (a, b2) = (cyc[b.pos], cyc[(b.pos + 1) % len]);
        let mut is_witness = vec![false; len];
        for &w in &b.witnesses {
            is_witness[w] = true;
        }
        let v_n: Vec<Vertex> = b.witnesses.iter().map(|&p| cyc[p]).collect();
        let v_c: Vec<Vertex> = (0..len)
            .filter(|&p| !is_witness[p] && p != b.pos && p != (b.pos + 1) % len)
            .map(|p| cyc[p])
            .collect();
        let with = |base: &[Vertex], extra: &[Vertex]| -> Vec<Vertex> { base.iter().chain(extra).copied().collect() };
        if v_c.contains(&s) {
            // s, .., a through the convex side; a, .., b' through the witnesses; then t
            stack.push(Task::Visit(t));
            stack.push(Task::Path {
                members: with(&v_n, &[a, b2]),
                s: a,
                t: b2,
            });
            stack.push(Task::Path {
                members: with(&v_c, &[a]),
                s,
                t: a,
            });
        } else {
            let x = if s == a { b2 } else { a };
            stack.push(Task::Path {
                members: with(&v_c, &[t, x]),
                s: x,
                t,
            });
            stack.push(Task::Path {
                members: with(&v_n, &[a, b2]),
                s,
                t: x,
            });
        }
    }
    out
}
