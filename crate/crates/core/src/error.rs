use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("partitions have different weights ({left} vs {right})")]
    UnequalWeights { left: usize, right: usize },

    #[error("expected a polynomial in basis {expected}, got {found}")]
    WrongBasis {
        expected: &'static str,
        found: &'static str,
    },

    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },

    #[error("coefficient of {partition} is not divisible by {divisor}")]
    NotIntegral { partition: String, divisor: String },

    #[error("{what} has {actual} vertices, limit is {limit}")]
    ResourceLimit {
        what: &'static str,
        limit: usize,
        actual: usize,
    },

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("unknown pattern {0:?}")]
    UnknownPattern(String),

    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("{0}")]
    Domain(String),

    #[error("input is not {predicate}: witness {witness:?}")]
    Precondition {
        predicate: &'static str,
        witness: Vec<usize>,
    },

    #[error("internal consistency check failed: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
