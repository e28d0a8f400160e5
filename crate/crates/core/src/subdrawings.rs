//! Maximal plane subdrawings.

use std::collections::HashSet;

use serde::Serialize;

use crate::convexity::find_non_convex_triangle;
use crate::drawing::SimpleDrawing;
use crate::edge::{all_edges, Edge, Vertex};
use crate::error::{Error, Result};
use crate::oracle::find_crossing;

/// A crossing-free edge set of a host drawing.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PlaneSubdrawing {
    /// Sorted lexicographically.
    pub edges: Vec<Edge>,
    pub maximal: bool,
}

impl PlaneSubdrawing {
    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn contains(&self, e: Edge) -> bool {
        self.edges.binary_search(&e).is_ok()
    }
}

/// All edges sorted by number of crossings, then lexicographically.
pub fn default_order<D: SimpleDrawing + ?Sized>(d: &D) -> Vec<Edge> {
    let edges: Vec<Edge> = all_edges(d.n()).collect();
    let mut degree = vec![0usize; edges.len()];
    for i in 0..edges.len() {
        for j in i + 1..edges.len() {
            if d.crosses(edges[i], edges[j]) {
                degree[i] += 1;
                degree[j] += 1;
            }
        }
    }
    let mut idx: Vec<usize> = (0..edges.len()).collect();
    idx.sort_by_key(|&i| (degree[i], edges[i]));
    idx.into_iter().map(|i| edges[i]).collect()
}

/// Greedy extension of `seed`: edges are taken in `order` (edges it misses
/// follow in lexicographic order) and kept when they cross nothing kept so
/// far. The result is maximal.
pub fn greedy_maximal_plane<D: SimpleDrawing + ?Sized>(
    d: &D,
    seed: &[Edge],
    order: &[Edge],
) -> Result<PlaneSubdrawing> {
    let n = d.n();
    for e in seed.iter().chain(order) {
        if e.v() > n {
            return Err(Error::VertexOutOfRange { vertex: e.v(), n });
        }
    }
    if let Some((e, f)) = find_crossing(d, seed) {
        return Err(Error::SeedNotPlane(e, f));
    }
    let mut kept: Vec<Edge> = Vec::new();
    let mut present = HashSet::new();
    for &e in seed {
        if present.insert(e) {
            kept.push(e);
        }
    }
    let listed: HashSet<Edge> = order.iter().copied().collect();
    let rest: Vec<Edge> = all_edges(n).filter(|e| !listed.contains(e)).collect();
    for &e in order.iter().chain(&rest) {
        if !present.contains(&e) && !kept.iter().any(|&f| d.crosses(e, f)) {
            present.insert(e);
            kept.push(e);
        }
    }
    kept.sort_unstable();
    Ok(PlaneSubdrawing {
        edges: kept,
        maximal: true,
    })
}

fn require_convex<D: SimpleDrawing + ?Sized>(d: &D) -> Result<()> {
    match find_non_convex_triangle(d)? {
        Some(t) => Err(Error::NotConvex(t.triangle)),
        None => Ok(()),
    }
}

/// Size of every maximal plane subdrawing of a convex drawing, from one
/// greedy run. Non-convex input is refused.
pub fn max_plane_size<D: SimpleDrawing + ?Sized>(d: &D) -> Result<usize> {
    require_convex(d)?;
    Ok(greedy_maximal_plane(d, &[], &default_order(d))?.len())
}

/// Maximal plane subdrawing containing the Hamiltonian cycle `cycle`.
pub fn extend_cycle<D: SimpleDrawing + ?Sized>(d: &D, cycle: &[Vertex]) -> Result<PlaneSubdrawing> {
    let n = d.n();
    let mut seen = vec![false; n + 1];
    for &v in cycle {
        if v == 0 || v > n {
            return Err(Error::VertexOutOfRange { vertex: v, n });
        }
        if std::mem::replace(&mut seen[v], true) {
            return Err(Error::InvalidCycle(format!("vertex {v} repeats")));
        }
    }
    if cycle.len() != n || n < 3 {
        return Err(Error::InvalidCycle(format!("visits {} of {n} vertices", cycle.len())));
    }
    let edges: Vec<Edge> = (0..n).map(|i| Edge::new(cycle[i], cycle[(i + 1) % n])).collect();
    greedy_maximal_plane(d, &edges, &default_order(d))
}

/// Face boundary walks of a connected plane subdrawing, using the host
/// rotations restricted to `edges`.
///
/// Each directed edge `(a, b)` is followed by `(b, c)` where `c` comes
/// right after `a` in the restricted rotation at `b`.
pub fn faces<D: SimpleDrawing + ?Sized>(d: &D, edges: &[Edge]) -> Vec<Vec<Vertex>> {
    let n = d.n();
    let set: HashSet<Edge> = edges.iter().copied().collect();
    let rot: Vec<Vec<Vertex>> = (0..=n)
        .map(|v| {
            if v == 0 {
                return Vec::new();
            }
            d.rotation(v)
                .iter()
                .copied()
                .filter(|&w| set.contains(&Edge::new(v, w)))
                .collect()
        })
        .collect();
    let pos = |v: Vertex, w: Vertex| rot[v].iter().position(|&x| x == w).expect("neighbour");
    let mut used = HashSet::new();
    let mut out = Vec::new();
    for &e in edges {
        for (a, b) in [(e.u(), e.v()), (e.v(), e.u())] {
            if used.contains(&(a, b)) {
                continue;
            }
            let mut face = Vec::new();
            let (mut x, mut y) = (a, b);
            while used.insert((x, y)) {
                face.push(x);
                let r = &rot[y];
                let z = r[(pos(y, x) + 1) % r.len()];
                x = y;
                y = z;
            }
            out.push(face);
        }
    }
    out
}

/// Boundary walks of length at least 4 that have an edge crossed by some
/// edge of the host drawing.
pub fn crossed_large_faces<D: SimpleDrawing + ?Sized>(d: &D, edges: &[Edge]) -> Vec<Vec<Vertex>> {
    let all: Vec<Edge> = all_edges(d.n()).collect();
    faces(d, edges)
        .into_iter()
        .filter(|f| f.len() >= 4)
        .filter(|f| {
            (0..f.len()).any(|i| {
                let e = Edge::new(f[i], f[(i + 1) % f.len()]);
                all.iter().any(|&g| d.crosses(e, g))
            })
        })
        .collect()
}
