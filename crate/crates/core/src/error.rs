use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    /// The caller handed in something outside an operation's domain.
    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// A text document (edge list, cycle file, certificate) did not parse.
    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("malformed graph6 at byte {offset}: {msg}")]
    Graph6 { offset: usize, msg: String },

    /// A construction failed its own postcondition. This points at a bug in
    /// the construction, never at the caller.
    #[error("construction integrity violated: {0}")]
    Integrity(String),

    #[error("size limit exceeded: {0}")]
    LimitExceeded(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidInput(msg.into())
    }

    pub(crate) fn integrity(msg: impl Into<String>) -> Self {
        Error::Integrity(msg.into())
    }

    pub(crate) fn parse(line: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            line,
            msg: msg.into(),
        }
    }
}
