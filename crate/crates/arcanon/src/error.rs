use thiserror::Error;

use crate::graph::Vertex;

/// Errors produced by the library.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("unknown vertex id {0}")]
    UnknownVertex(Vertex),

    #[error("vertex set must be non-empty")]
    EmptySet,

    #[error("{0} is not a subset of {1}")]
    NotSubset(String, String),

    #[error("invalid intersection type for this operation: {0}")]
    InvalidType(&'static str),

    #[error("arc pair has an impossible endpoint pattern (shared endpoints?)")]
    BadArcPair,

    #[error("triple is not an ov-triangle")]
    NotOvTriangle,

    #[error("ordered triple is not in Delta_G")]
    NotInDelta,

    #[error("precondition violated: {0}")]
    Precondition(&'static str),

    #[error("|K_G| = {k} exceeds the subset-enumeration budget k_max = {k_max}")]
    BudgetExceeded { k: usize, k_max: usize },

    #[error("graph with {n} vertices exceeds the oracle size limit {limit}")]
    SizeLimit { n: usize, limit: usize },

    #[error("reduction record inconsistent with representation: {0}")]
    InconsistentRecord(String),

    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("input graph is not a circular-arc graph")]
    NotCircularArc,
}

pub type Result<T> = std::result::Result<T, Error>;
