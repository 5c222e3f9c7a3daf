use thiserror::Error;

/// Library error type. Axiom failures are *not* errors; they are reported as
/// data in an [`crate::report::AxiomReport`]. Errors cover malformed inputs
/// and violated operation preconditions.
#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    DimMismatch(String),

    #[error("singular map: {0}")]
    Singular(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// A documented precondition of an operation does not hold; the message
    /// names the failing check.
    #[error("precondition failed: {0}")]
    Precondition(String),
}

pub type Result<T> = std::result::Result<T, Error>;
