use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("variable count mismatch: {0} vs {1}")]
    VarMismatch(usize, usize),
    #[error("too many variables: {0} (at most {max})", max = crate::monomial::MAX_VARS)]
    TooManyVars(usize),
    #[error("linear change is not invertible")]
    Singular,
    #[error("polynomial is not homogeneous")]
    Inhomogeneous,
    #[error("zero polynomial not allowed here")]
    ZeroPolynomial,
    #[error("negative degree {0}")]
    NegativeDegree(i64),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("not a valid Hilbert polynomial: {0}")]
    InvalidHilbertPolynomial(String),
    #[error("shape invariant violated: {0}")]
    ShapeViolation(String),
    #[error("generic initial ideal did not stabilise after {0} escalations")]
    GinFailure(usize),
    #[error("random sampling exhausted after {0} attempts")]
    SamplingExhausted(usize),
    #[error("ideal is not saturated")]
    NotSaturated,
    #[error("wrong Hilbert polynomial: expected {expected}, found {found}")]
    WrongHilbertPolynomial { expected: String, found: String },
    #[error("unexpected stratum: expected {expected}, found {found}")]
    WrongStratum { expected: String, found: String },
    #[error("family is not flat: {0}")]
    NotFlat(String),
    #[error("internal consistency check failed: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
