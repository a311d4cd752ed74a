use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("division is not exact: remainder has leading term {coeff} q^{exp}")]
    NonExactDivision { exp: i64, coeff: String },

    #[error("division by the zero polynomial")]
    DivisionByZero,

    #[error("numerator has negative minimal exponent {min_exp}; clear it before expanding")]
    NegativeMinExponent { min_exp: i64 },

    #[error("constraint vector is empty")]
    EmptyVector,

    #[error("sum of entries is {s}, not 1; use the general engine")]
    SumNotOne { s: i64 },

    #[error("sum of entries is {s} <= 0; only the brute-force oracle applies")]
    SumNotPositive { s: i64 },

    #[error("prefix sum through position {j} is {prefix} > 0; only the brute-force oracle applies")]
    PositivePrefix { j: usize, prefix: i64 },

    #[error("n = {n} exceeds the guard limit {guard}")]
    GuardExceeded { n: usize, guard: usize },

    #[error("parallelepiped bounding box holds more than {cap} candidate points")]
    PointCapExceeded { cap: u64 },

    #[error("parallelepiped point count {found} does not match det(A) = {expected}")]
    PointCountMismatch { found: u64, expected: String },

    #[error("dimension mismatch: composition has {lambda_len} parts, constraint vector has {a_len}")]
    DimensionMismatch { lambda_len: usize, a_len: usize },

    #[error("invalid example parameters: {0}")]
    InvalidParams(String),
}

pub type Result<T> = std::result::Result<T, Error>;
