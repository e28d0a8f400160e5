//! Plane Hamiltonian structures in convex simple drawings of complete graphs.
//!
//! A [`Drawing`] is the combinatorial description of a simple drawing of
//! `K_n`: a rotation system together with a crossing predicate on pairs of
//! independent edges. On top of it the crate provides
//!
//! - [`generators`]: geometric drawings from integer point sets, convex
//!   position, twisted drawings and seeded random instances,
//! - [`convexity`]: two independent convexity deciders and the `K_5`
//!   weak-isomorphism classifier,
//! - [`plane`]: constructions of plane Hamiltonian paths and cycles, the
//!   star-avoiding Hamiltonian cycle, empty `k`-cycles and paths through
//!   prescribed edges,
//! - [`subdrawings`]: greedy maximal plane subdrawings,
//! - [`oracle`]: brute-force verification used to certify every
//!   construction.
//!
//! Vertices are 1-based throughout.

pub mod certificate;
pub mod convexity;
pub mod drawing;
pub mod edge;
pub mod error;
pub mod generators;
pub mod geometry;
pub mod io;
pub mod oracle;
pub mod plane;
pub mod subdrawings;

pub use certificate::{Certificate, Claims, Kind};
pub use drawing::{Drawing, SimpleDrawing, TrianglePartition};
pub use edge::{Edge, Vertex};
pub use error::{Error, Lemma, NotConvexEvidence, Result};
pub use generators::PointSet;

/// Version of this library.
pub const VERSION: &str = env!("CARGO_PKG_VERSION");
