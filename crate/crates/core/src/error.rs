use thiserror::Error;

/// Errors reported by every fallible operation in the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("q = {0} is not a prime power")]
    NotPrimePower(i64),

    #[error("q = {0} is outside the supported range 2..={max}", max = crate::tower::MAX_Q)]
    QOutOfRange(i64),

    #[error("tower level must be at least 1, got {0}")]
    LevelOutOfRange(i64),

    #[error("{what} index {index} out of range {lo}..={hi}")]
    IndexOutOfRange {
        what: &'static str,
        index: i64,
        lo: i64,
        hi: i64,
    },

    #[error("integer overflow while computing {0}")]
    Overflow(&'static str),

    #[error("division by non-positive divisor {0}")]
    NonPositiveDivisor(i64),

    #[error("expected a vector of length {expected}, got {got}")]
    LengthMismatch { expected: usize, got: usize },

    #[error("divisor is for q = {got}, expected q = {expected}")]
    QMismatch { expected: i64, got: i64 },

    #[error("coefficient {name} = {value} must be non-negative")]
    NegativeCoefficient { name: &'static str, value: i64 },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("unsupported divisor shape: {0}")]
    UnsupportedDivisor(String),

    #[error("scan box too small: a point was found on the boundary of coordinate {0}")]
    BoxTooSmall(&'static str),

    #[error("invalid place name {0:?}")]
    InvalidPlace(String),
}

pub type Result<T> = std::result::Result<T, Error>;
