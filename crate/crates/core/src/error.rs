//! Error type shared across the crate.

use thiserror::Error;

/// Everything that can go wrong while building or checking a decomposition.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A projective point must have at least one nonzero coordinate.
    #[error("invalid projective point{}: all coordinates are zero", fmt_index(.index))]
    InvalidPoint { index: Option<usize> },

    /// Structural problem with an instance (length mismatch, empty support, ...).
    #[error("invalid instance: {0}")]
    InvalidInstance(String),

    /// Two support points coincide after canonicalization.
    #[error("duplicate point: points[{first}] and points[{second}] coincide")]
    DuplicatePoint { first: usize, second: usize },

    /// Vector/matrix shapes do not match.
    #[error("dimension mismatch: got length {got}, expected {expected}")]
    DimensionError { got: usize, expected: usize },

    /// A reshaping partition must have positive parts summing to the degree.
    #[error("invalid partition ({0}, {1}, {2}) of degree {3}: parts must be >= 1 and sum to the degree")]
    InvalidPartition(usize, usize, usize, usize),

    /// The pipeline only accepts even degrees d = 8, 10, 12, ...
    #[error("unsupported degree {0}: expected an even degree >= 8")]
    UnsupportedDegree(usize),

    /// Decomposition length exceeds the certified range for its degree.
    #[error("length {r} out of range: degree {degree} admits at most {bound} summands")]
    LengthOutOfRange { r: usize, bound: usize, degree: usize },

    /// All coefficients of a decomposition must be nonzero.
    #[error("coefficients[{index}] is zero")]
    ZeroCoefficient { index: usize },

    /// A generator or fixture request that cannot be satisfied.
    #[error("invalid request: {0}")]
    InvalidRequest(String),

    /// Instance file could not be parsed.
    #[error("parse error at {location}: {message}")]
    Parse { location: String, message: String },
}

fn fmt_index(index: &Option<usize>) -> String {
    match index {
        Some(i) => format!(" (points[{i}])"),
        None => String::new(),
    }
}

pub type Result<T> = std::result::Result<T, Error>;
