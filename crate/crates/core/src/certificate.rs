//! Checkable descriptions of constructed structures.

use serde::{Deserialize, Serialize};

use crate::edge::{Edge, Vertex};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Kind {
    Cycle,
    Path,
    Subdrawing,
}

/// Properties a certificate asserts. Every set field is checked by
/// [`crate::oracle::verify`].
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Claims {
    #[serde(default)]
    pub plane: bool,
    #[serde(default)]
    pub hamiltonian: bool,
    /// No edge crosses an edge incident to this vertex.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub star_avoiding: Option<Vertex>,
    /// One side of the cycle has no vertex in its interior.
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    pub empty_side: bool,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub contains: Vec<Edge>,
    /// First and last vertex of a path.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub endpoints: Option<(Vertex, Vertex)>,
    /// No edge of the drawing can be added without a crossing.
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    pub maximal: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    pub kind: Kind,
    /// Vertex sequence of a cycle or path; empty for subdrawings.
    #[serde(default)]
    pub vertices: Vec<Vertex>,
    pub edges: Vec<Edge>,
    pub claims: Claims,
    #[serde(default)]
    pub oracle_verified: bool,
}

impl Certificate {
    /// Closed walk through `vertices`; the closing edge is implied.
    pub fn cycle(vertices: Vec<Vertex>, claims: Claims) -> Self {
        let k = vertices.len();
        let edges = (0..k)
            .filter_map(|i| Edge::try_new(vertices[i], vertices[(i + 1) % k]))
            .collect();
        Self {
            kind: Kind::Cycle,
            vertices,
            edges,
            claims,
            oracle_verified: false,
        }
    }

    pub fn path(vertices: Vec<Vertex>, claims: Claims) -> Self {
        let edges = vertices.windows(2).filter_map(|w| Edge::try_new(w[0], w[1])).collect();
        Self {
            kind: Kind::Path,
            vertices,
            edges,
            claims,
            oracle_verified: false,
        }
    }

    pub fn subdrawing(mut edges: Vec<Edge>, claims: Claims) -> Self {
        edges.sort_unstable();
        Self {
            kind: Kind::Subdrawing,
            vertices: Vec::new(),
            edges,
            claims,
            oracle_verified: false,
        }
    }
}

/// Rotates a cycle to start at its smallest vertex, continuing towards the
/// smaller of its two neighbours.
pub fn canonical_cycle(cycle: &[Vertex]) -> Vec<Vertex> {
    let k = cycle.len();
    if k == 0 {
        return Vec::new();
    }
    let p = (0..k).min_by_key(|&i| cycle[i]).expect("non-empty");
    let fwd: Vec<Vertex> = (0..k).map(|i| cycle[(p + i) % k]).collect();
    if k > 2 && fwd[k - 1] < fwd[1] {
        std::iter::once(fwd[0]).chain(fwd[1..].iter().rev().copied()).collect()
    } else {
        fwd
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cycle_edges_include_closing_edge() {
        let c = Certificate::cycle(vec![1, 2, 3, 4], Claims::default());
        assert_eq!(c.edges.len(), 4);
        assert!(c.edges.contains(&Edge::new(4, 1)));
        let p = Certificate::path(vec![3, 1, 2], Claims::default());
        assert_eq!(p.edges, vec![Edge::new(1, 3), Edge::new(1, 2)]);
    }

    #[test]
    fn canonical_rotation() {
        assert_eq!(canonical_cycle(&[3, 4, 1, 2]), vec![1, 2, 3, 4]);
        assert_eq!(canonical_cycle(&[3, 2, 1, 4]), vec![1, 2, 3, 4]);
        assert_eq!(canonical_cycle(&[5, 1, 4, 2, 3]), vec![1, 4, 2, 3, 5]);
    }

    #[test]
    fn json_shape() {
        let claims = Claims {
            plane: true,
            hamiltonian: true,
            star_avoiding: Some(3),
            ..Claims::default()
        };
        let c = Certificate::cycle(vec![1, 2, 3], claims);
        let v: serde_json::Value = serde_json::to_value(&c).unwrap();
        assert_eq!(v["kind"], "cycle");
        assert_eq!(v["edges"][0], serde_json::json!([1, 2]));
        assert_eq!(v["claims"]["star_avoiding"], 3);
        assert!(v["claims"].get("empty_side").is_none());
        let back: Certificate = serde_json::from_value(v).unwrap();
        assert_eq!(back, c);
    }
}
