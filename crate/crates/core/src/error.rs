use thiserror::Error;

/// Errors raised by graph construction, parsing and the invariant engines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A constructor or operation received a parameter outside its legal range.
    #[error("parameter out of range: {0}")]
    Parameter(String),

    /// Malformed graph text. `position` is a 1-based line number for edge
    /// lists and a 0-based byte offset for graph6.
    #[error("parse error at {unit} {position}: {message}")]
    Parse {
        unit: &'static str,
        position: usize,
        message: String,
    },

    /// The input is larger than a configured resource cap.
    #[error("{what}: size {actual} exceeds limit {limit}")]
    ResourceLimit {
        what: &'static str,
        limit: usize,
        actual: usize,
    },

    /// The input violates an operation's precondition (for instance,
    /// isolated vertices where the operation requires none).
    #[error("precondition failed: {0}")]
    Precondition(String),
}

impl Error {
    pub(crate) fn parse_line(line: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            unit: "line",
            position: line,
            message: message.into(),
        }
    }

    pub(crate) fn parse_byte(byte: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            unit: "byte",
            position: byte,
            message: message.into(),
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
