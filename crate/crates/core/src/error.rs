//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("not 2-step nilpotent: [[e{i}, e{j}], e{k}] != 0")]
    NotTwoStep { i: usize, j: usize, k: usize },

    #[error("basis index {index} out of range for dimension {dim}")]
    BadIndex { index: usize, dim: usize },

    #[error("bracket [e{i}, e{j}] requires i < j")]
    BadBracketOrder { i: usize, j: usize },

    #[error("duplicate bracket entry for (e{i}, e{j})")]
    DuplicateBracket { i: usize, j: usize },

    #[error("metric is not symmetric positive-definite")]
    DegenerateMetric,

    #[error("vector does not lie in the center")]
    VectorNotInCenter,

    #[error("map is not an orthogonal automorphism")]
    NotAutomorphism,

    #[error("Pfaffian undefined in odd dimension {0}")]
    OddDimension(usize),

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("matrix is not skew-symmetric")]
    NotSkew,

    #[error("unknown catalog name {0:?}")]
    UnknownName(String),

    #[error("graph edge ({i}, {l}) is a self-loop")]
    SelfLoop { i: usize, l: usize },

    #[error("duplicate graph edge between vertices {i} and {l}")]
    DuplicateEdge { i: usize, l: usize },

    #[error("graph has no edges")]
    NoEdges,

    #[error("graph vertex index {index} out of range 1..={count}")]
    BadVertex { index: usize, count: usize },

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
