use std::fmt;

use serde::{Deserialize, Serialize};

/// A vertex label, 1-based.
pub type Vertex = usize;

/// An unordered vertex pair stored canonically with `u < v`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(into = "[Vertex; 2]", try_from = "[Vertex; 2]")]
pub struct Edge {
    u: Vertex,
    v: Vertex,
}

impl Edge {
    /// Panics if `a == b`.
    pub fn new(a: Vertex, b: Vertex) -> Self {
        Self::try_new(a, b).expect("an edge needs two distinct endpoints")
    }

    pub fn try_new(a: Vertex, b: Vertex) -> Option<Self> {
        match a.cmp(&b) {
            std::cmp::Ordering::Less => Some(Self { u: a, v: b }),
            std::cmp::Ordering::Greater => Some(Self { u: b, v: a }),
            std::cmp::Ordering::Equal => None,
        }
    }

    pub fn u(self) -> Vertex {
        self.u
    }

    pub fn v(self) -> Vertex {
        self.v
    }

    pub fn endpoints(self) -> [Vertex; 2] {
        [self.u, self.v]
    }

    pub fn contains(self, x: Vertex) -> bool {
        self.u == x || self.v == x
    }

    pub fn shares_vertex(self, other: Edge) -> bool {
        self.contains(other.u) || self.contains(other.v)
    }

    /// The endpoint opposite to `x`, if `x` is an endpoint.
    pub fn other(self, x: Vertex) -> Option<Vertex> {
        if x == self.u {
            Some(self.v)
        } else if x == self.v {
            Some(self.u)
        } else {
            None
        }
    }

    /// Applies a vertex map to both endpoints.
    pub fn map(self, f: impl Fn(Vertex) -> Vertex) -> Edge {
        Edge::new(f(self.u), f(self.v))
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{},{}}}", self.u, self.v)
    }
}

impl From<Edge> for [Vertex; 2] {
    fn from(e: Edge) -> Self {
        [e.u, e.v]
    }
}

impl TryFrom<[Vertex; 2]> for Edge {
    type Error = String;

    fn try_from([a, b]: [Vertex; 2]) -> Result<Self, Self::Error> {
        Edge::try_new(a, b).ok_or_else(|| format!("degenerate edge [{a},{b}]"))
    }
}

/// Orders an edge pair lexicographically.
pub fn canonical_pair(e: Edge, f: Edge) -> (Edge, Edge) {
    if e <= f {
        (e, f)
    } else {
        (f, e)
    }
}

/// All edges of `K_n` in lexicographic order.
pub fn all_edges(n: usize) -> impl Iterator<Item = Edge> {
    (1..=n).flat_map(move |u| (u + 1..=n).map(move |v| Edge { u, v }))
}
