use thiserror::Error;

use crate::exactpoly::Rational;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("base must be at least 2, got {0}")]
    InvalidBase(u32),

    #[error("depth must be at least 1, got {0}")]
    InvalidDepth(u32),

    #[error("dimension {base}^{depth} exceeds the configured cap of {cap}")]
    DimensionCap { base: u32, depth: u32, cap: usize },

    #[error("digit {digit} is outside 1..={max}")]
    DigitOutOfRange { digit: u32, max: u32 },

    #[error("index ({row}, {col}) is out of range for dimension {dim}")]
    IndexOutOfRange { row: usize, col: usize, dim: usize },

    #[error("dimension mismatch: expected {expected}, got {actual}")]
    DimensionMismatch { expected: usize, actual: usize },

    #[error("matrix is not strictly lower-triangular: nonzero entry at ({row}, {col})")]
    NotStrictlyLowerTriangular { row: usize, col: usize },

    #[error("entries sum to {0}, expected 0")]
    NotZeroSum(Rational),

    #[error("{0}")]
    InvalidArgument(String),
}

pub type Result<T> = std::result::Result<T, Error>;
