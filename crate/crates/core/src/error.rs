use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("polynomial division is not exact")]
    DivisionNotExact,
    #[error("operation is undefined on the zero polynomial")]
    ZeroPolynomial,
    #[error("denominator is the zero polynomial")]
    ZeroDenominator,
    #[error("parameter out of range: {0}")]
    ParameterOutOfRange(String),
    #[error("series does not terminate: {0}")]
    NonTerminating(String),
    #[error("denominator vanishes: {0}")]
    DenominatorVanishes(String),
    #[error("enumeration size {n} exceeds cap {cap}")]
    CapExceeded { n: usize, cap: usize },
    #[error("polynomial is not palindromic about degree {0}")]
    NotPalindromic(usize),
    #[error("unknown identity `{0}`")]
    UnknownIdentity(String),
    #[error("invalid type B partition: {0}")]
    InvalidPartition(String),
    #[error("invalid 2-path: {0}")]
    InvalidPath(String),
    #[error("parse error: {0}")]
    Parse(String),
}
