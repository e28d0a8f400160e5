//! Brute-force checks, independent of the constructions.
//!
//! Nothing here calls into [`crate::plane`] or [`crate::subdrawings`].

use serde::Serialize;

use crate::certificate::{Certificate, Kind};
use crate::drawing::SimpleDrawing;
use crate::edge::{all_edges, Edge, Vertex};
use crate::error::{Error, Result};

/// Default vertex cap of [`brute_hamiltonian`].
pub const DEFAULT_MAX_BRUTE_N: usize = 12;

/// Vertex cap of [`exact_max_plane`].
pub const MAX_EXACT_N: usize = 8;

/// Environment variable overriding [`DEFAULT_MAX_BRUTE_N`].
pub const MAX_BRUTE_ENV: &str = "CONVEXHAM_MAX_BRUTE_N";

/// Current cap of [`brute_hamiltonian`]; at most 16 since edges are kept in
/// a 128-bit set.
pub fn max_brute_n() -> usize {
    std::env::var(MAX_BRUTE_ENV)
        .ok()
        .and_then(|v| v.parse().ok())
        .unwrap_or(DEFAULT_MAX_BRUTE_N)
        .min(16)
}

/// First crossing pair among `edges`, if any.
pub fn find_crossing<D: SimpleDrawing + ?Sized>(d: &D, edges: &[Edge]) -> Option<(Edge, Edge)> {
    for (i, &e) in edges.iter().enumerate() {
        for &f in &edges[i + 1..] {
            if d.crosses(e, f) {
                return Some((e, f));
            }
        }
    }
    None
}

pub fn is_plane<D: SimpleDrawing + ?Sized>(d: &D, edges: &[Edge]) -> bool {
    find_crossing(d, edges).is_none()
}

/// Off-cycle vertices split by a plane cycle.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CycleSides {
    pub cycle: Vec<Vertex>,
    /// Side holding the smallest off-cycle vertex.
    pub side_a: Vec<Vertex>,
    pub side_b: Vec<Vertex>,
}

impl CycleSides {
    pub fn has_empty_side(&self) -> bool {
        self.side_a.is_empty() || self.side_b.is_empty()
    }
}

fn cycle_edges(cycle: &[Vertex]) -> Vec<Edge> {
    let k = cycle.len();
    (0..k).map(|i| Edge::new(cycle[i], cycle[(i + 1) % k])).collect()
}

/// Sides of a plane cycle: two off-cycle vertices are on the same side iff
/// the edge joining them crosses the cycle an even number of times.
pub fn cycle_sides<D: SimpleDrawing + ?Sized>(d: &D, cycle: &[Vertex]) -> Result<CycleSides> {
    let n = d.n();
    let mut on_cycle = vec![false; n + 1];
    for &v in cycle {
        if v == 0 || v > n {
            return Err(Error::VertexOutOfRange { vertex: v, n });
        }
        if std::mem::replace(&mut on_cycle[v], true) {
            return Err(Error::InvalidCycle(format!("vertex {v} repeats")));
        }
    }
    if cycle.len() < 3 {
        return Err(Error::InvalidCycle(format!("length {} < 3", cycle.len())));
    }
    let edges = cycle_edges(cycle);
    if let Some((e, f)) = find_crossing(d, &edges) {
        return Err(Error::CycleNotPlane(e, f));
    }
    let odd = |w: Vertex, x: Vertex| edges.iter().filter(|&&c| d.crosses(Edge::new(w, x), c)).count() % 2 == 1;
    let off: Vec<Vertex> = (1..=n).filter(|&v| !on_cycle[v]).collect();
    let mut far = vec![false; n + 1];
    if let Some(&r) = off.first() {
        for &w in &off[1..] {
            far[w] = odd(r, w);
        }
        for (i, &w) in off.iter().enumerate().skip(1) {
            for &x in &off[i + 1..] {
                if odd(w, x) != (far[w] != far[x]) {
                    return Err(Error::SideInconsistency {
                        triangle: cycle.to_vec(),
                        vertices: vec![r, w, x],
                    });
                }
            }
        }
    }
    Ok(CycleSides {
        cycle: cycle.to_vec(),
        side_a: off.iter().copied().filter(|&w| !far[w]).collect(),
        side_b: off.iter().copied().filter(|&w| far[w]).collect(),
    })
}

/// What [`brute_hamiltonian`] enumerates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Mode {
    /// Plane Hamiltonian cycles, each listed once starting at 1 with the
    /// smaller neighbour second.
    Cycle,
    /// Plane Hamiltonian paths from `s` to `t`.
    Path { s: Vertex, t: Vertex },
    /// Plane Hamiltonian cycles no edge of which crosses an edge at the vertex.
    StarAvoiding(Vertex),
    /// Plane Hamiltonian paths through all given edges, each listed once
    /// with the smaller end first.
    Contains(Vec<Edge>),
}

struct Search {
    n: usize,
    index: Vec<Vec<usize>>,
    conflicts: Vec<u128>,
    allowed: u128,
}

impl Search {
    fn new<D: SimpleDrawing + ?Sized>(d: &D) -> Self {
        let n = d.n();
        let edges: Vec<Edge> = all_edges(n).collect();
        let mut index = vec![vec![usize::MAX; n + 1]; n + 1];
        for (i, e) in edges.iter().enumerate() {
            index[e.u()][e.v()] = i;
            index[e.v()][e.u()] = i;
        }
        let mut conflicts = vec![0u128; edges.len()];
        for (i, &e) in edges.iter().enumerate() {
            for (j, &f) in edges.iter().enumerate().skip(i + 1) {
                if d.crosses(e, f) {
                    conflicts[i] |= 1 << j;
                    conflicts[j] |= 1 << i;
                }
            }
        }
        let allowed = if edges.len() == 128 {
            u128::MAX
        } else {
            (1u128 << edges.len()) - 1
        };
        Self {
            n,
            index,
            conflicts,
            allowed,
        }
    }

    fn edge(&self, a: Vertex, b: Vertex) -> usize {
        self.index[a][b]
    }
}

/// Exhaustive enumeration of plane Hamiltonian structures.
///
/// Extends vertex sequences one vertex at a time and drops a branch as soon
/// as the new edge crosses an edge already used.
pub fn brute_hamiltonian<D: SimpleDrawing + ?Sized>(d: &D, mode: &Mode) -> Result<Vec<Vec<Vertex>>> {
    let n = d.n();
    let cap = max_brute_n();
    if n > cap {
        return Err(Error::TooLarge { n, cap });
    }
    let check = |v: Vertex| {
        if v == 0 || v > n {
            Err(Error::VertexOutOfRange { vertex: v, n })
        } else {
            Ok(())
        }
    };
    let mut search = Search::new(d);
    let mut required = 0u128;
    let start = match mode {
        Mode::Cycle => vec![1],
        Mode::StarAvoiding(v) => {
            check(*v)?;
            for w in (1..=n).filter(|w| w != v) {
                search.allowed &= !search.conflicts[search.edge(*v, w)];
            }
            vec![1]
        }
        Mode::Path { s, t } => {
            check(*s)?;
            check(*t)?;
            if s == t {
                return Err(Error::SameVertex(*s));
            }
            vec![*s]
        }
        Mode::Contains(edges) => {
            for e in edges {
                check(e.u())?;
                check(e.v())?;
                let i = search.edge(e.u(), e.v());
                required |= 1 << i;
                search.allowed &= !search.conflicts[i];
            }
            (1..=n).collect()
        }
    };
    let mut out = Vec::new();
    for s in start {
        let mut seq = vec![s];
        let mut used = vec![false; n + 1];
        used[s] = true;
        extend(&search, mode, required, &mut seq, &mut used, 0, 0, &mut out);
    }
    Ok(out)
}

#[allow(clippy::too_many_arguments)]
fn extend(
    sr: &Search,
    mode: &Mode,
    required: u128,
    seq: &mut Vec<Vertex>,
    used: &mut [bool],
    taken: u128,
    blocked: u128,
    out: &mut Vec<Vec<Vertex>>,
) {
    let n = sr.n;
    let last = *seq.last().expect("non-empty");
    if seq.len() == n {
        let first = seq[0];
        match mode {
            Mode::Cycle | Mode::StarAvoiding(_) => {
                let e = sr.edge(last, first);
                if n >= 3 && seq[1] < last && sr.allowed >> e & 1 == 1 && blocked >> e & 1 == 0 {
                    out.push(seq.clone());
                }
            }
            Mode::Path { t, .. } => {
                if last == *t {
                    out.push(seq.clone());
                }
            }
            Mode::Contains(_) => {
                if first < last && taken & required == required {
                    out.push(seq.clone());
                }
            }
        }
        return;
    }
    for v in 1..=n {
        if used[v] {
            continue;
        }
        if let Mode::Path { t, .. } = mode {
            if v == *t && seq.len() + 1 < n {
                continue;
            }
        }
        let e = sr.edge(last, v);
        if sr.allowed >> e & 1 == 0 || blocked >> e & 1 == 1 {
            continue;
        }
        used[v] = true;
        seq.push(v);
        extend(
            sr,
            mode,
            required,
            seq,
            used,
            taken | 1 << e,
            blocked | sr.conflicts[e],
            out,
        );
        seq.pop();
        used[v] = false;
    }
}

/// Size of a maximum plane edge set, by branch and bound on the conflict
/// graph of the edges.
pub fn exact_max_plane<D: SimpleDrawing + ?Sized>(d: &D) -> Result<usize> {
    let n = d.n();
    if n > MAX_EXACT_N {
        return Err(Error::TooLarge { n, cap: MAX_EXACT_N });
    }
    let edges: Vec<Edge> = all_edges(n).collect();
    let mut conf = vec![0u64; edges.len()];
    for (i, &e) in edges.iter().enumerate() {
        for (j, &f) in edges.iter().enumerate().skip(i + 1) {
            if d.crosses(e, f) {
                conf[i] |= 1 << j;
                conf[j] |= 1 << i;
            }
        }
    }
    fn go(conf: &[u64], cand: u64, size: usize, best: &mut usize) {
        if cand == 0 {
            *best = (*best).max(size);
            return;
        }
        if size + cand.count_ones() as usize <= *best {
            return;
        }
        let v = cand.trailing_zeros() as usize;
        let rest = cand & !(1 << v);
        go(conf, rest & !conf[v], size + 1, best);
        if conf[v] & rest != 0 {
            go(conf, rest, size, best);
        }
    }
    let all = if edges.len() == 64 {
        u64::MAX
    } else {
        (1u64 << edges.len()) - 1
    };
    let mut best = 0;
    go(&conf, all, 0, &mut best);
    Ok(best)
}

/// Triangles with a side containing no vertex.
pub fn count_empty_triangles<D: SimpleDrawing + ?Sized>(d: &D) -> usize {
    let n = d.n();
    let mut count = 0;
    for a in 1..=n {
        for b in a + 1..=n {
            for c in b + 1..=n {
                let tri = [Edge::new(a, b), Edge::new(b, c), Edge::new(a, c)];
                let mut off = (1..=n).filter(|&v| v != a && v != b && v != c);
                let empty = match off.next() {
                    None => true,
                    Some(r) => off.all(|w| tri.iter().filter(|&&t| d.crosses(Edge::new(r, w), t)).count() % 2 == 0),
                };
                count += empty as usize;
            }
        }
    }
    count
}

/// Outcome of checking a certificate against a drawing.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Diagnosis {
    pub ok: bool,
    pub failures: Vec<String>,
}

/// Checks the structure of `cert` and every claim it makes.
pub fn verify<D: SimpleDrawing + ?Sized>(d: &D, cert: &Certificate) -> Diagnosis {
    let failures = check(d, cert);
    Diagnosis {
        ok: failures.is_empty(),
        failures,
    }
}

fn check<D: SimpleDrawing + ?Sized>(d: &D, cert: &Certificate) -> Vec<String> {
    let n = d.n();
    let mut fails = Vec::new();
    for e in &cert.edges {
        if e.v() > n || e.u() == 0 {
            fails.push(format!("edge {e} is not an edge of K{n}"));
        }
    }
    for &v in &cert.vertices {
        if v == 0 || v > n {
            fails.push(format!("vertex {v} is outside 1..={n}"));
        }
    }
    if !fails.is_empty() {
        return fails;
    }
    let mut seen = vec![false; n + 1];
    for &v in &cert.vertices {
        if std::mem::replace(&mut seen[v], true) {
            fails.push(format!("vertex {v} repeats"));
        }
    }
    let expected: Option<Vec<Edge>> = match cert.kind {
        Kind::Cycle if cert.vertices.len() < 3 => {
            fails.push("a cycle needs at least 3 vertices".into());
            None
        }
        Kind::Cycle => Some(cycle_edges(&cert.vertices)),
        Kind::Path => Some(cert.vertices.windows(2).map(|w| Edge::new(w[0], w[1])).collect()),
        Kind::Subdrawing => None,
    };
    if let Some(mut exp) = expected {
        let mut got = cert.edges.clone();
        exp.sort_unstable();
        got.sort_unstable();
        if exp != got {
            fails.push("edge list does not match the vertex sequence".into());
        }
    }
    let mut dedup = cert.edges.clone();
    dedup.sort_unstable();
    dedup.dedup();
    if dedup.len() != cert.edges.len() {
        fails.push("edge list repeats an edge".into());
    }
    if !fails.is_empty() {
        return fails;
    }
    let claims = &cert.claims;
    if claims.plane {
        if let Some((e, f)) = find_crossing(d, &cert.edges) {
            fails.push(format!("not plane: {e} crosses {f}"));
        }
    }
    if claims.hamiltonian {
        if cert.kind == Kind::Subdrawing {
            fails.push("a subdrawing cannot claim to be Hamiltonian".into());
        } else if cert.vertices.len() != n {
            fails.push(format!("visits {} of {n} vertices", cert.vertices.len()));
        }
    }
    if let Some(v) = claims.star_avoiding {
        if v == 0 || v > n {
            fails.push(format!("star vertex {v} is outside 1..={n}"));
        } else {
            'edges: for &e in &cert.edges {
                for w in (1..=n).filter(|&w| w != v) {
                    let s = Edge::new(v, w);
                    if d.crosses(e, s) {
                        fails.push(format!("{e} crosses star edge {s}"));
                        break 'edges;
                    }
                }
            }
        }
    }
    if claims.empty_side {
        if cert.kind != Kind::Cycle {
            fails.push("only cycles have sides".into());
        } else {
            match cycle_sides(d, &cert.vertices) {
                Ok(sides) if sides.has_empty_side() => {}
                Ok(sides) => fails.push(format!(
                    "both sides occupied: {:?} and {:?}",
                    sides.side_a, sides.side_b
                )),
                Err(e) => fails.push(format!("sides undefined: {e}")),
            }
        }
    }
    for e in &claims.contains {
        if !cert.edges.contains(e) {
            fails.push(format!("does not contain {e}"));
        }
    }
    if let Some((s, t)) = claims.endpoints {
        if cert.kind != Kind::Path || cert.vertices.first() != Some(&s) || cert.vertices.last() != Some(&t) {
            fails.push(format!("is not a path from {s} to {t}"));
        }
    }
    if claims.maximal {
        let present: std::collections::HashSet<Edge> = cert.edges.iter().copied().collect();
        for f in all_edges(n).filter(|f| !present.contains(f)) {
            if !cert.edges.iter().any(|&e| d.crosses(e, f)) {
                fails.push(format!("not maximal: {f} can be added"));
                break;
            }
        }
    }
    fails
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::certificate::Claims;
    use crate::generators::{convex_position, twisted};

    fn e(u: Vertex, v: Vertex) -> Edge {
        Edge::new(u, v)
    }

    #[test]
    fn planarity() {
        let d = convex_position(6);
        let hull: Vec<Edge> = (1..=6).map(|i| e(i, i % 6 + 1)).collect();
        assert!(is_plane(&d, &hull));
        assert!(!is_plane(&convex_position(5), &[e(1, 3), e(2, 4)]));
        assert!(is_plane(&d, &[e(1, 4)]));
    }

    #[test]
    fn sides_in_convex_position() {
        let d = convex_position(5);
        let s = cycle_sides(&d, &[5, 1, 2]).unwrap();
        assert_eq!(s.side_a, vec![3, 4]);
        assert!(s.side_b.is_empty());
        let s = cycle_sides(&convex_position(6), &[1, 2, 3]).unwrap();
        assert_eq!((s.side_a.len(), s.side_b.len()), (3, 0));
        let s = cycle_sides(&d, &[1, 2, 3, 4, 5]).unwrap();
        assert!(s.side_a.is_empty() && s.side_b.is_empty());
        assert!(matches!(cycle_sides(&d, &[1, 3, 2, 4]), Err(Error::CycleNotPlane(..))));
    }

    #[test]
    fn hull_is_the_only_plane_cycle_in_convex_position() {
        let sols = brute_hamiltonian(&convex_position(7), &Mode::Cycle).unwrap();
        assert_eq!(sols, vec![vec![1, 2, 3, 4, 5, 6, 7]]);
    }

    #[test]
    fn paths_in_convex_position() {
        // in convex position the visited vertices of a plane path always form
        // an arc of the hull, so a path ending at a hull neighbour is unique
        let sols = brute_hamiltonian(&convex_position(5), &Mode::Path { s: 1, t: 2 }).unwrap();
        assert_eq!(sols, vec![vec![1, 5, 4, 3, 2]]);
        let sols = brute_hamiltonian(&convex_position(6), &Mode::Path { s: 1, t: 4 }).unwrap();
        assert!(!sols.is_empty());
        assert!(matches!(
            brute_hamiltonian(&convex_position(5), &Mode::Path { s: 2, t: 2 }),
            Err(Error::SameVertex(2))
        ));
    }

    #[test]
    fn star_avoiding_and_contains() {
        let d = convex_position(5);
        let sols = brute_hamiltonian(&d, &Mode::StarAvoiding(5)).unwrap();
        assert_eq!(sols, vec![vec![1, 2, 3, 4, 5]]);
        let sols = brute_hamiltonian(&d, &Mode::Contains(vec![e(1, 3)])).unwrap();
        assert!(sols.iter().all(|p| p.windows(2).any(|w| e(w[0], w[1]) == e(1, 3))));
        assert!(!sols.is_empty());
    }

    #[test]
    fn size_cap() {
        let d = convex_position(13);
        assert!(matches!(
            brute_hamiltonian(&d, &Mode::Cycle),
            Err(Error::TooLarge { n: 13, cap: 12 })
        ));
        assert!(matches!(
            exact_max_plane(&convex_position(9)),
            Err(Error::TooLarge { .. })
        ));
    }

    #[test]
    fn exact_maximum_in_convex_position() {
        for n in 3..=8 {
            assert_eq!(exact_max_plane(&convex_position(n)).unwrap(), 2 * n - 3);
        }
    }

    #[test]
    fn empty_triangles() {
        assert_eq!(count_empty_triangles(&convex_position(5)), 10);
        assert_eq!(count_empty_triangles(&convex_position(3)), 1);
        // in the twisted drawing the empty triangles number 2n - 4
        assert_eq!(count_empty_triangles(&twisted(7)), 10);
    }

    #[test]
    fn verify_reports_each_failed_claim() {
        let d = convex_position(5);
        let claims = Claims {
            plane: true,
            hamiltonian: true,
            ..Claims::default()
        };
        assert!(verify(&d, &Certificate::cycle(vec![1, 2, 3, 4, 5], claims.clone())).ok);
        let bad = verify(&d, &Certificate::cycle(vec![1, 3, 2, 4, 5], claims.clone()));
        assert!(!bad.ok);
        assert!(bad.failures[0].starts_with("not plane"));
        let short = verify(&d, &Certificate::cycle(vec![1, 2, 3], claims));
        assert!(short.failures.iter().any(|f| f.contains("visits 3 of 5")));
        let mut forged = Certificate::path(vec![1, 2, 3], Claims::default());
        forged.edges.push(e(3, 4));
        assert!(!verify(&d, &forged).ok);
    }
}
