//! Error type shared across the crate.

use thiserror::Error;

/// Errors produced by graph construction, spectral routines and walk
/// analysis.
///
/// The three variants mirror the three ways a computation can go wrong:
/// a caller asked for something outside a function's mathematical domain
/// (`Domain`), the input data itself is malformed (`Validation`), or two
/// independent internal computations of the same quantity disagreed beyond
/// tolerance (`Internal`) — the last one always indicates a bug and is
/// surfaced loudly rather than papered over.
#[derive(Debug, Error)]
pub enum Error {
    /// Input is well-formed but outside the domain of the operation
    /// (e.g. a spectral value beyond `[-1, 1]`, or a non-regular graph
    /// passed to a regular-only routine).
    #[error("domain error: {0}")]
    Domain(String),

    /// Input data is malformed (bad edge list, inconsistent parameters,
    /// a connection set that is not inverse-closed, ...).
    #[error("validation error: {0}")]
    Validation(String),

    /// Two independent computations of the same quantity disagreed beyond
    /// tolerance; indicates a bug, never a property of the input.
    #[error("internal consistency failure: {0}")]
    Internal(String),

    /// Underlying I/O failure while reading an edge-list file.
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    /// Shorthand for a [`Error::Domain`] with a formatted message.
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    /// Shorthand for a [`Error::Validation`] with a formatted message.
    pub(crate) fn validation(msg: impl Into<String>) -> Self {
        Error::Validation(msg.into())
    }

    /// Shorthand for a [`Error::Internal`] with a formatted message.
    pub(crate) fn internal(msg: impl Into<String>) -> Self {
        Error::Internal(msg.into())
    }
}
