use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid tile {width}x{length}: {reason}")]
    InvalidTile {
        width: usize,
        length: usize,
        reason: &'static str,
    },

    #[error("invalid floor {width}x{length}: extents must be positive")]
    InvalidFloor { width: usize, length: usize },

    #[error("contract violation: {0}")]
    Contract(String),

    #[error("count overflow while {0}")]
    Overflow(&'static str),

    #[error("enumeration budget of {limit} search nodes exceeded")]
    BudgetExceeded { limit: u64 },

    #[error("generating function denominator has a zero constant term")]
    ZeroConstantTerm,

    #[error("series coefficient {index} is not an integer")]
    NonIntegral { index: usize },

    #[error("missing slide-free count for floor width {width} at length {length}")]
    MissingEntry { length: usize, width: usize },

    #[error("cannot read {path}: {message}")]
    Io { path: String, message: String },

    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },
}

impl Error {
    pub(crate) fn contract(msg: impl Into<String>) -> Self {
        Error::Contract(msg.into())
    }

    pub(crate) fn parse(line: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            message: message.into(),
        }
    }
}
