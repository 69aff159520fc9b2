use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("algebra mismatch: {0}")]
    AlgebraMismatch(String),
    #[error("relations are not admissible: {0}")]
    NotAdmissible(String),
    #[error("invalid module: {0}")]
    InvalidModule(String),
    #[error("invalid map: {0}")]
    InvalidMap(String),
    /// A documented precondition of an operation does not hold for the input.
    #[error("hypothesis violated: {0}")]
    Hypothesis(String),
    #[error("enumeration cap exceeded: {0}")]
    CapExceeded(String),
    /// A self-check on a computed result failed. Always a bug.
    #[error("internal verification failed: {0}")]
    Verification(String),
}

pub type Result<T> = std::result::Result<T, Error>;
