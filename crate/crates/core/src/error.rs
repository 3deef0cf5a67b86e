use thiserror::Error;

/// Errors raised by constructors, statistics and maps.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid object: {0}")]
    Invalid(String),
    #[error("{0} is undefined on an empty argument")]
    Empty(&'static str),
    #[error("{stat}: {reason}")]
    Domain { stat: &'static str, reason: String },
    #[error("{op}: precondition failed: {reason}")]
    Precondition { op: &'static str, reason: String },
    #[error("not invertible: {0}")]
    NotInvertible(String),
    #[error("pole at factor {0}")]
    Pole(String),
    #[error("infinite product does not terminate: {0}")]
    NonTerminating(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain(stat: &'static str, reason: impl Into<String>) -> Error {
    Error::Domain { stat, reason: reason.into() }
}

pub(crate) fn precondition(op: &'static str, reason: impl Into<String>) -> Error {
    Error::Precondition { op, reason: reason.into() }
}
