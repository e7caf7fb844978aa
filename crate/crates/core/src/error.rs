use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// The divisor of a [`QFraction`](crate::QFraction) does not divide its numerator.
    #[error("non-exact division: {0}")]
    NonExactDivision(String),

    #[error("zero denominator")]
    ZeroDenominator,

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("shape violation: {0}")]
    ShapeViolation(String),

    #[error("index {index} out of range 1..={max}")]
    IndexOutOfRange { index: usize, max: usize },

    #[error("invalid top-row key: {0}")]
    InvalidKey(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// Interpolation through the first nodes disagrees with a later node.
    #[error("degree bound {bound} exceeded: value at k = {node} is {found}, interpolant gives {expected}")]
    DegreeExceeded {
        bound: usize,
        node: i64,
        found: String,
        expected: String,
    },

    #[error("half-integer exponent {numerator}/2")]
    HalfIntegerExponent { numerator: i64 },
}
