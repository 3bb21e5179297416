use thiserror::Error;

/// Errors raised by the calculus.
///
/// Parse errors carry a byte offset into the offending text so front ends
/// can point at it.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("domain error: {0}")]
    Domain(String),

    /// The requested quantity is not determined by the available rules.
    #[error("undetermined: {0}")]
    Undetermined(String),
}

impl Error {
    pub(crate) fn parse(pos: usize, msg: impl Into<String>) -> Self {
        Error::Parse { pos, msg: msg.into() }
    }

    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
