use thiserror::Error;

use crate::report::Report;

#[derive(Debug, Error)]
pub enum Error {
    #[error("shape mismatch: {0}")]
    Shape(String),

    /// A structure failed one of its validity checks; the report lists the
    /// violated identities.
    #[error("{what} is invalid: violated {}", .report.failed_tags().join(", "))]
    Invalid { what: String, report: Box<Report> },

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("arity {arity} exceeds the cap of {cap}")]
    ArityCap { arity: usize, cap: usize },

    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    pub(crate) fn shape(msg: impl Into<String>) -> Self {
        Error::Shape(msg.into())
    }

    pub(crate) fn invalid(what: impl Into<String>, report: Report) -> Self {
        Error::Invalid {
            what: what.into(),
            report: Box::new(report),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
