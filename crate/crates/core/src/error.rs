use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("operation is undefined for the zero polynomial")]
    ZeroPolynomial,

    #[error("invalid interval: lower bound {lo} is not below upper bound {hi}")]
    InvalidInterval { lo: String, hi: String },

    #[error("precondition failed: {0}")]
    PreconditionFailed(String),

    #[error("element not found: {0}")]
    ElementNotFound(String),

    #[error("{what} out of range: {value} (allowed {allowed})")]
    OutOfRange {
        what: &'static str,
        value: i64,
        allowed: String,
    },

    #[error("invalid poset: {0}")]
    InvalidPoset(String),

    #[error("poset with {0} elements is too large for exhaustive counting")]
    PosetTooLarge(usize),

    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("partition is empty")]
    EmptyPartition,

    #[error("parse error at position {position}: {message}")]
    Parse { position: usize, message: String },

    #[error("unknown suite: {0}")]
    UnknownSuite(String),

    #[error("i/o error: {0}")]
    Io(String),
}

impl Error {
    pub(crate) fn parse(position: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            position,
            message: message.into(),
        }
    }
}
