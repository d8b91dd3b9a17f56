use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("n = {n} exceeds the cap {cap}")]
    Capacity { n: u64, cap: u64 },

    #[error("vertex index {i} outside 1..={n}")]
    InvalidVertexIndex { i: u64, n: u64 },

    #[error("cardinality k must be at least 1")]
    ZeroCardinality,

    #[error("sequence index m must be at least 1")]
    ZeroSequenceIndex,

    #[error("bitstring lengths differ: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
