use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::edge::{Edge, Vertex};

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Structural property of convex drawings whose failure was observed.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Lemma {
    /// Bad-edge vertices and witnesses do not split into two blocks around the star vertex.
    TwoBlocks,
    /// A witness does not precede its bad edge after relabeling.
    Sidedness,
    /// Witness ranges of two bad edges are not nested oppositely.
    Nestedness,
    /// An edge that must avoid every star edge crosses one.
    NonStarCrossing,
    /// The wrap edge `{1, n-1}` of the star frame is not good.
    WrapEdge,
    /// A path prefix stopped being an interval around the star vertex.
    Interval,
    /// A triangle without a convex side.
    NoConvexSide,
    /// The oracle rejected a constructed structure.
    Certificate,
}

impl Lemma {
    pub fn name(self) -> &'static str {
        match self {
            Lemma::TwoBlocks => "two-blocks",
            Lemma::Sidedness => "sidedness",
            Lemma::Nestedness => "nestedness",
            Lemma::NonStarCrossing => "non-star-crossing",
            Lemma::WrapEdge => "wrap-edge",
            Lemma::Interval => "interval",
            Lemma::NoConvexSide => "no-convex-side",
            Lemma::Certificate => "certificate",
        }
    }
}

impl fmt::Display for Lemma {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A concrete reason why the input cannot be a convex drawing.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NotConvexEvidence {
    pub lemma: Lemma,
    /// Drawing vertices involved in the violation.
    pub vertices: Vec<Vertex>,
    pub detail: String,
}

impl NotConvexEvidence {
    pub fn new(lemma: Lemma, vertices: Vec<Vertex>, detail: impl Into<String>) -> Self {
        Self {
            lemma,
            vertices,
            detail: detail.into(),
        }
    }
}

impl fmt::Display for NotConvexEvidence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} violated at {:?}: {}", self.lemma, self.vertices, self.detail)
    }
}

#[derive(Debug, Error)]
pub enum Error {
    #[error("a drawing needs at least 3 vertices, got {0}")]
    TooFewVertices(usize),
    #[error("vertex {vertex} is outside 1..={n}")]
    VertexOutOfRange { vertex: Vertex, n: usize },
    #[error("rotation of vertex {vertex} is invalid: {reason}")]
    InvalidRotation { vertex: Vertex, reason: String },
    #[error("adjacent edges {0} and {1} are listed as crossing")]
    AdjacentCrossing(Edge, Edge),
    #[error("the K4 on {0:?} has more than one crossing")]
    K4Violation([Vertex; 4]),
    #[error("same-side relation of triangle {triangle:?} is not a two-class equivalence (vertices {vertices:?})")]
    SideInconsistency {
        triangle: Vec<Vertex>,
        vertices: Vec<Vertex>,
    },
    #[error("not a permutation of 1..={0}")]
    NotAPermutation(usize),
    #[error("degenerate point set: points {0:?} coincide or are collinear")]
    DegeneratePointSet(Vec<usize>),
    #[error("coordinate {0} exceeds the supported magnitude")]
    CoordinateOutOfRange(i64),
    #[error("no general-position point set found after {0} resamples")]
    ExhaustedRejection(usize),
    #[error("expected a drawing of K5, got K{0}")]
    NotK5(usize),
    #[error("not a convex drawing: {0}")]
    NotConvexEvidence(NotConvexEvidence),
    #[error("not a convex drawing: triangle {0:?} has no convex side")]
    NotConvex([Vertex; 3]),
    #[error("start and end vertex coincide ({0})")]
    SameVertex(Vertex),
    #[error("k = {k} outside 3..={n}")]
    KOutOfRange { k: usize, n: usize },
    #[error("edges {0} and {1} are adjacent or cross")]
    EdgesCrossOrAdjacent(Edge, Edge),
    #[error("seed edges {0} and {1} cross")]
    SeedNotPlane(Edge, Edge),
    #[error("cycle edges {0} and {1} cross")]
    CycleNotPlane(Edge, Edge),
    #[error("invalid cycle: {0}")]
    InvalidCycle(String),
    #[error("n = {n} exceeds the enumeration cap {cap}")]
    TooLarge { n: usize, cap: usize },
    #[error("drawing has no coordinates")]
    NoCoordinates,
    #[error("drawing data inconsistent: {0}")]
    Inconsistent(String),
    #[error("invalid JSON: {0}")]
    Json(#[from] serde_json::Error),
}

impl From<NotConvexEvidence> for Error {
    fn from(e: NotConvexEvidence) -> Self {
        Error::NotConvexEvidence(e)
    }
}
