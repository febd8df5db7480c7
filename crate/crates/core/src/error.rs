use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not a prime")]
    NotPrime(u64),
    #[error("prime mismatch: {0} vs {1}")]
    PrimeMismatch(u64, u64),
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("division by a value that is zero to precision O(p^{0})")]
    DivisionByZero(i64),
    #[error("digits [{lo}, {hi}] requested but only known below p^{limit}")]
    BeyondPrecision { lo: i64, hi: i64, limit: i64 },
    #[error("index {index} lies outside the computed range [1, {limit}]")]
    OutOfRange { index: u64, limit: u64 },
    #[error("overflow: {0}")]
    Overflow(String),
    #[error("invalid input: {0}")]
    Invalid(String),
}

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::Invalid(msg.into())
    }

    pub(crate) fn overflow(msg: impl Into<String>) -> Self {
        Error::Overflow(msg.into())
    }
}
