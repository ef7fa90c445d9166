//! Error type shared by all modules.

use thiserror::Error;

/// Library-wide error type.
#[derive(Debug, Error)]
pub enum Error {
    /// A caller-supplied argument violates a precondition.
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// No grid pair realizes the requested lag.
    #[error("no pair of locations realizes the lag {0:?}")]
    EmptyLag(Vec<f64>),

    /// Every distance bin ended up empty.
    #[error("empirical variogram has no populated bins")]
    EmptyVariogram,

    /// A numerical procedure failed (factorization, overflow, ...).
    #[error("numerical failure: {0}")]
    NumericalFailure(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidArgument(msg.into())
    }

    pub(crate) fn numerical(msg: impl Into<String>) -> Self {
        Error::NumericalFailure(msg.into())
    }
}
