use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("operation undefined on the zero polynomial")]
    ZeroPolynomial,
    #[error("generator is not a monomial: {0}")]
    NotMonomial(String),
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),
    #[error("size mismatch: expected {expected}, found {found}")]
    SizeMismatch { expected: usize, found: usize },
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("instance too large: {0}")]
    TooLarge(String),
    #[error("time budget exceeded")]
    Timeout,
    #[error("internal inconsistency: {0}")]
    Inconsistent(String),
    #[error("point does not lie on the scheme: generator {0} does not vanish")]
    NotOnScheme(String),
    #[error("no generic parameters found after {0} draws")]
    GenericityExhausted(usize),
}
