//! Error type shared by every module of the crate.

use thiserror::Error;

/// All recoverable failures reported by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Structurally malformed input (bad rotation, unknown edge id, ...).
    #[error("validation error: {0}")]
    Validation(String),
    /// An argument outside the documented domain of an operation.
    #[error("domain error: {0}")]
    Domain(String),
    /// A constraint system with no solution for the given parameters.
    #[error("infeasible: {0}")]
    Infeasible(String),
    /// An internal consistency check failed; this indicates a bug.
    #[error("internal error: {0}")]
    Internal(String),
}

/// Convenience alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Domain(msg.into()))
}

pub(crate) fn validation<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Validation(msg.into()))
}

pub(crate) fn internal<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Internal(msg.into()))
}
