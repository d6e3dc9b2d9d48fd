use thiserror::Error;

/// Errors produced by graph construction, parsing and the spectral routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("graph has {edges} edges, enumeration is limited to {limit}")]
    Capacity { edges: usize, limit: usize },

    /// Exact arithmetic was requested for an exponent that is not an integer.
    #[error("exact arithmetic needs an integer exponent, got {0}")]
    Mode(String),

    #[error("not a tree: {0}")]
    NotATree(String),

    #[error("numeric failure: {0}")]
    Numeric(String),

    /// A mathematical guarantee was violated; indicates a bug rather than bad input.
    #[error("internal consistency failure: {0}")]
    Consistency(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidArgument(msg.into())
}
