//! Canonical circular-arc representations: recognition, canonization and
//! isomorphism of circular-arc graphs, with brute-force oracles for
//! cross-checking on small instances.

pub mod candidates;
pub mod canonizer;
pub mod enumerate;
pub mod error;
pub mod graph;
pub mod graphfile;
pub mod intersection;
pub mod interval;
pub mod model;
pub mod oracle;
pub mod svg;

pub use canonizer::{
    canonical_representation, canonical_string, isomorphic, recognize, CanonOutcome, Verdict,
    DEFAULT_K_MAX,
};
pub use error::{Error, Result};
pub use graph::{Graph, Vertex};
pub use intersection::{neighborhood_matrix, IntersectionMatrix, IntersectionType};
pub use model::{ArcModel, Representation};
