//! Convexity deciders and the `K_5` classifier.
//!
//! Two drawings of `K_5` are weakly isomorphic when a relabeling maps the
//! crossing pairs of one onto the other. A pattern is encoded as a 15-bit
//! mask over the independent edge pairs of `K_5`; its canonical form is the
//! smallest mask over all 120 relabelings.

use std::collections::HashMap;
use std::fmt;
use std::sync::OnceLock;

use serde::{Serialize, Serializer};

use crate::drawing::{triangle_sides, SimpleDrawing, TrianglePartition};
use crate::edge::{Edge, Vertex};
use crate::error::{Error, Result};

/// Weak-isomorphism class of a drawing of `K_5`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum K5Class {
    I,
    II,
    III,
    /// Not geometric and not the twisted pattern.
    IvOrV,
    /// The twisted pattern.
    V,
}

impl K5Class {
    pub fn name(self) -> &'static str {
        match self {
            K5Class::I => "I",
            K5Class::II => "II",
            K5Class::III => "III",
            K5Class::IvOrV => "IV_or_V",
            K5Class::V => "V",
        }
    }

    /// Types I to III are exactly the patterns of 5-point sets.
    pub fn is_geometric(self) -> bool {
        matches!(self, K5Class::I | K5Class::II | K5Class::III)
    }
}

impl fmt::Display for K5Class {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl Serialize for K5Class {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.name())
    }
}

/// Canonical masks of the geometric patterns: convex pentagon, quadrilateral
/// with one inner point, triangle with two inner points.
pub const GEOMETRIC_K5_CATALOG: [(K5Class, u16); 3] = [
    (K5Class::I, CANON_I),
    (K5Class::II, CANON_II),
    (K5Class::III, CANON_III),
];

const CANON_I: u16 = 0b001_0000_1111_0000;
const CANON_II: u16 = 0b000_0000_0010_0101;
const CANON_III: u16 = 0b000_0000_0000_0001;

/// Canonical mask of the twisted `K_5`.
pub const CANON_V: u16 = 0b001_0000_0010_1110;

/// The 15 independent edge pairs of `K_5` in lexicographic order.
pub fn k5_pairs() -> &'static [(Edge, Edge); 15] {
    static PAIRS: OnceLock<[(Edge, Edge); 15]> = OnceLock::new();
    PAIRS.get_or_init(|| {
        let edges: Vec<Edge> = crate::edge::all_edges(5).collect();
        let mut out = Vec::with_capacity(15);
        for (i, &e) in edges.iter().enumerate() {
            for &f in &edges[i + 1..] {
                if !e.shares_vertex(f) {
                    out.push((e, f));
                }
            }
        }
        out.try_into().expect("K5 has 15 independent edge pairs")
    })
}

fn pair_index(e: Edge, f: Edge) -> usize {
    let key = crate::edge::canonical_pair(e, f);
    k5_pairs().iter().position(|&p| p == key).expect("independent pair")
}

/// Crossing mask of the subdrawing on `q` (vertex `q[i]` plays label `i+1`).
pub fn k5_mask<D: SimpleDrawing + ?Sized>(d: &D, q: [Vertex; 5]) -> u16 {
    let mut mask = 0;
    for (i, &(e, f)) in k5_pairs().iter().enumerate() {
        let m = |x: Vertex| q[x - 1];
        if d.crosses(Edge::new(m(e.u()), m(e.v())), Edge::new(m(f.u()), m(f.v()))) {
            mask |= 1 << i;
        }
    }
    mask
}

fn permutations5() -> Vec<[Vertex; 5]> {
    let mut out = Vec::with_capacity(120);
    let mut p = [1, 2, 3, 4, 5];
    fn rec(k: usize, p: &mut [Vertex; 5], out: &mut Vec<[Vertex; 5]>) {
        if k == 5 {
            out.push(*p);
            return;
        }
        for i in k..5 {
            p.swap(k, i);
            rec(k + 1, p, out);
            p.swap(k, i);
        }
    }
    rec(0, &mut p, &mut out);
    out
}

/// Mask after renaming label `i` to `perm[i - 1]`.
fn relabel_mask(mask: u16, perm: &[Vertex; 5]) -> u16 {
    let mut out = 0;
    for (i, &(e, f)) in k5_pairs().iter().enumerate() {
        if mask >> i & 1 == 1 {
            let m = |x: Vertex| perm[x - 1];
            out |= 1 << pair_index(Edge::new(m(e.u()), m(e.v())), Edge::new(m(f.u()), m(f.v())));
        }
    }
    out
}

/// All masks weakly isomorphic to `mask`.
pub fn orbit(mask: u16) -> Vec<u16> {
    let mut out: Vec<u16> = permutations5().iter().map(|p| relabel_mask(mask, p)).collect();
    out.sort_unstable();
    out.dedup();
    out
}

/// Smallest mask over all relabelings.
pub fn canonical_mask(mask: u16) -> u16 {
    orbit(mask)[0]
}

fn lookup() -> &'static HashMap<u16, K5Class> {
    static TABLE: OnceLock<HashMap<u16, K5Class>> = OnceLock::new();
    TABLE.get_or_init(|| {
        let mut table = HashMap::new();
        for (class, canon) in GEOMETRIC_K5_CATALOG {
            for m in orbit(canon) {
                table.insert(m, class);
            }
        }
        for m in orbit(CANON_V) {
            table.entry(m).or_insert(K5Class::V);
        }
        table
    })
}

/// Class of a crossing mask.
pub fn classify_mask(mask: u16) -> K5Class {
    lookup().get(&mask).copied().unwrap_or(K5Class::IvOrV)
}

/// Class of a drawing of `K_5`.
pub fn classify_k5<D: SimpleDrawing + ?Sized>(d: &D) -> Result<K5Class> {
    if d.n() != 5 {
        return Err(Error::NotK5(d.n()));
    }
    Ok(classify_mask(k5_mask(d, [1, 2, 3, 4, 5])))
}

/// Class of the subdrawing induced by five vertices.
pub fn classify_subset<D: SimpleDrawing + ?Sized>(d: &D, q: [Vertex; 5]) -> K5Class {
    classify_mask(k5_mask(d, q))
}

/// First triangle, in lexicographic order, without a convex side.
pub fn find_non_convex_triangle<D: SimpleDrawing + ?Sized>(d: &D) -> Result<Option<TrianglePartition>> {
    let n = d.n();
    for a in 1..=n {
        for b in a + 1..=n {
            for c in b + 1..=n {
                let t = triangle_sides(d, a, b, c)?;
                if !t.has_convex_side() {
                    return Ok(Some(t));
                }
            }
        }
    }
    Ok(None)
}

pub fn is_convex_by_triangles<D: SimpleDrawing + ?Sized>(d: &D) -> Result<bool> {
    Ok(find_non_convex_triangle(d)?.is_none())
}

/// First 5-subset, in lexicographic order, of a non-geometric class.
pub fn find_non_geometric_k5<D: SimpleDrawing + ?Sized>(d: &D) -> Option<([Vertex; 5], K5Class)> {
    let n = d.n();
    for a in 1..=n {
        for b in a + 1..=n {
            for c in b + 1..=n {
                for x in c + 1..=n {
                    for y in x + 1..=n {
                        let q = [a, b, c, x, y];
                        let class = classify_subset(d, q);
                        if !class.is_geometric() {
                            return Some((q, class));
                        }
                    }
                }
            }
        }
    }
    None
}

/// For `n < 5` this falls back to [`is_convex_by_triangles`].
pub fn is_convex_by_k5<D: SimpleDrawing + ?Sized>(d: &D) -> Result<bool> {
    if d.n() < 5 {
        return is_convex_by_triangles(d);
    }
    Ok(find_non_geometric_k5(d).is_none())
}
