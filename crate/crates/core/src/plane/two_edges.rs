//! Plane Hamiltonian paths through two prescribed edges of a point set.
//!
//! For segments `e = uv` and `e' = u'v'` with lines `ℓ` and `ℓ'`, where `e`
//! lies on one side of `ℓ'`: the half-plane of `ℓ'` holding `e` is cut by
//! `ℓ` into `R_1` and `R_2` (the part on the side of `u'`), and `R_3` is the
//! other half-plane. Paths inside the three convex regions are joined by
//! `e` and `e'`. In general position no point other than the endpoints lies
//! on either line.

use crate::certificate::{Certificate, Claims};
use crate::drawing::Drawing;
use crate::edge::{Edge, Vertex};
use crate::error::{Error, Result};
use crate::geometry::{orient, Point};
use crate::plane::{certify, st_path::st_path_in};

fn side(a: Point, b: Point, p: Point) -> i128 {
    orient(a, b, p).signum()
}

/// Path over `members` ending at `end` (when given) and starting at `start`
/// (when given); at least one of the two is set.
fn region_path(d: &Drawing, mut members: Vec<Vertex>, start: Option<Vertex>, end: Option<Vertex>) -> Vec<Vertex> {
    members.sort_unstable();
    if members.len() == 1 {
        return members;
    }
    match (start, end) {
        (Some(s), Some(t)) => st_path_in(d, members, s, t),
        (Some(s), None) => {
            let t = *members.iter().rev().find(|&&v| v != s).expect("two members");
            st_path_in(d, members, s, t)
        }
        (None, Some(t)) => {
            let s = *members.iter().find(|&&v| v != t).expect("two members");
            st_path_in(d, members, s, t)
        }
        (None, None) => unreachable!("region paths are anchored"),
    }
}

/// Plane Hamiltonian path through `e` and `e'`, unverified.
pub fn geometric_path_with_two_edges_vertices(d: &Drawing, e: Edge, e2: Edge) -> Result<Vec<Vertex>> {
    let points = d.points().ok_or(Error::NoCoordinates)?;
    let n = d.n();
    for v in e.endpoints().into_iter().chain(e2.endpoints()) {
        if v > n {
            return Err(Error::VertexOutOfRange { vertex: v, n });
        }
    }
    if e.shares_vertex(e2) || d.crosses(e, e2) {
        return Err(Error::EdgesCrossOrAdjacent(e, e2));
    }
    let p = |v: Vertex| points.points()[v - 1];
    let (mut e, mut e2) = (e, e2);
    if side(p(e2.u()), p(e2.v()), p(e.u())) != side(p(e2.u()), p(e2.v()), p(e.v())) {
        std::mem::swap(&mut e, &mut e2);
    }
    let (u, v) = (e.u(), e.v());
    let (u2, v2) = (e2.u(), e2.v());
    let (a2, b2) = (p(u2), p(v2));
    let half = side(a2, b2, p(u));
    if half != side(a2, b2, p(v)) {
        // disjoint segments: at least one misses the other's line
        return Err(Error::EdgesCrossOrAdjacent(e, e2));
    }
    let (a, b) = (p(u), p(v));
    let r2_side = side(a, b, p(u2));
    let mut r1 = Vec::new();
    let mut r2 = Vec::new();
    let mut r3 = Vec::new();
    for w in (1..=n).filter(|&w| w != u && w != v && w != u2 && w != v2) {
        let q = p(w);
        if side(a2, b2, q) != half {
            r3.push(w);
        } else if side(a, b, q) == r2_side {
            r2.push(w);
        } else {
            r1.push(w);
        }
    }
    r1.push(u);
    r2.extend([v, u2]);
    r3.push(v2);
    let mut path = region_path(d, r1, None, Some(u));
    path.extend(region_path(d, r2, Some(v), Some(u2)));
    path.extend(region_path(d, r3, Some(v2), None));
    Ok(path)
}

/// Plane Hamiltonian path of a geometric drawing through two independent,
/// non-crossing edges.
pub fn geometric_path_with_two_edges(d: &Drawing, e: Edge, e2: Edge) -> Result<Certificate> {
    let path = geometric_path_with_two_edges_vertices(d, e, e2)?;
    let claims = Claims {
        plane: true,
        hamiltonian: true,
        contains: vec![e, e2],
        ..Claims::default()
    };
    certify(d, Certificate::path(path, claims))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{convex_position, geometric, twisted};

    #[test]
    fn convex_hexagon() {
        let d = convex_position(6);
        let c = geometric_path_with_two_edges(&d, Edge::new(1, 2), Edge::new(4, 5)).unwrap();
        assert!(c.oracle_verified);
    }

    #[test]
    fn square_with_two_inner_points() {
        let pts = [(0, 0), (10, 0), (10, 10), (0, 10), (3, 4), (7, 5)];
        let d = geometric(pts.iter().map(|&(x, y)| Point::new(x, y)).collect()).unwrap();
        let edges: Vec<Edge> = crate::edge::all_edges(6).collect();
        let mut tried = 0;
        for (i, &e) in edges.iter().enumerate() {
            for &f in &edges[i + 1..] {
                if !e.shares_vertex(f) && !d.crosses(e, f) {
                    geometric_path_with_two_edges(&d, e, f).unwrap();
                    tried += 1;
                }
            }
        }
        assert!(tried > 10);
    }

    #[test]
    fn rejects_bad_input() {
        let d = convex_position(6);
        assert!(matches!(
            geometric_path_with_two_edges(&d, Edge::new(1, 4), Edge::new(2, 5)),
            Err(Error::EdgesCrossOrAdjacent(..))
        ));
        assert!(matches!(
            geometric_path_with_two_edges(&d, Edge::new(1, 2), Edge::new(2, 5)),
            Err(Error::EdgesCrossOrAdjacent(..))
        ));
        assert!(matches!(
            geometric_path_with_two_edges(&twisted(6), Edge::new(1, 2), Edge::new(4, 5)),
            Err(Error::NoCoordinates)
        ));
    }
}
