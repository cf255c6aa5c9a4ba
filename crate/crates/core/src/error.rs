use thiserror::Error;

/// Errors raised by the algebra engine.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("index {index} out of range for partition of length {len}")]
    SliceOutOfRange { index: usize, len: usize },

    #[error("{0} is undefined for the zero element")]
    ZeroElement(&'static str),

    #[error("monomial has non-positive factors; phi is only defined on the positive part")]
    NonPositiveMonomial,

    #[error("Whittaker type must be nonsingular, but phi({0}) = 0")]
    SingularPhi(&'static str),

    #[error("invalid quotient: {0}")]
    InvalidQuotient(String),

    #[error("quotient mismatch: expected {expected}, found {found}")]
    QuotientMismatch { expected: String, found: String },

    #[error("a descent step produced the zero vector (operator {operator})")]
    DescentVanished { operator: String },

    #[error("descent measure did not decrease at step {step}")]
    DescentStalled { step: usize },

    #[error("operation requires the universal module")]
    RequiresUniversal,

    #[error("composition series of the zero module (multiplicity 0)")]
    ZeroMultiplicity,

    #[error("expression error: {0}")]
    Expr(String),
}

pub type Result<T> = std::result::Result<T, Error>;
