use thiserror::Error;

/// Errors produced while loading tables or running an analysis.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("unknown object `{0}`")]
    UnknownObject(String),

    #[error("unknown attribute `{0}`")]
    UnknownAttribute(String),

    #[error("unknown decision value `{0}`")]
    UnknownDecision(String),

    #[error("attribute subset must not be empty")]
    EmptyAttributes,

    #[error("invalid threshold: {0}")]
    InvalidThreshold(String),

    #[error("invalid configuration: {0}")]
    Config(String),

    #[error("discernibility entry requires two distinct objects, got `{0}` twice")]
    SamePair(String),

    #[error("{count} attributes exceed the exhaustive search limit of {limit}")]
    TooManyAttributes { count: usize, limit: usize },

    #[error("objects `{0}` and `{1}` must be discerned but share every specified value")]
    InseparablePair(String, String),
}

impl Error {
    pub(crate) fn parse(line: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            message: message.into(),
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
