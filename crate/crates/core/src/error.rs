use thiserror::Error;

/// Errors raised across the library.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("quadratic form is not positive-definite")]
    NotPositiveDefinite,

    #[error("singular matrix")]
    SingularMatrix,

    #[error("polynomial is reducible over Q: {0}")]
    ReduciblePolynomial(String),

    #[error("invalid number field: {0}")]
    InvalidField(String),

    #[error("automorphism check failed: {0}")]
    BadAutomorphism(String),

    #[error("unsupported field class: {0}")]
    UnsupportedField(String),

    #[error("elements belong to different fields")]
    FieldMismatch,

    #[error("element of infinite order: {0}")]
    InfiniteOrder(String),

    #[error("group generation exceeded cap of {cap} elements")]
    CapExceeded { cap: usize },

    #[error("root system axiom violated: {0}")]
    AxiomViolation(String),

    #[error("no catalogue entry matches: {0}")]
    UnknownDiagram(String),

    #[error("illegal root system type: {0}")]
    IllegalType(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("argument out of range: {0}")]
    OutOfRange(String),

    #[error("certification failed: {0}")]
    Certification(String),
}

pub type Result<T> = std::result::Result<T, Error>;
