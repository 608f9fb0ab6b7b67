use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    /// Input violates a documented precondition of an operation.
    #[error("domain error: {0}")]
    Domain(String),
    /// Malformed file or literal.
    #[error("parse error: {0}")]
    Parse(String),
    /// A construction hypothesis failed; names the failed hypothesis.
    #[error("hypothesis violation: {0}")]
    Hypothesis(String),
    /// An internal invariant was violated; indicates a bug, not bad input.
    #[error("internal invariant violation: {0}")]
    Internal(String),
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}

impl Error {
    pub fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }
    pub fn internal(msg: impl Into<String>) -> Self {
        Error::Internal(msg.into())
    }
}
