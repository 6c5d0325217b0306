use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("parse error at byte {offset}: {message}")]
    Parse { offset: usize, message: String },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("invalid input: {message}")]
    InvalidInput {
        message: String,
        witness: Option<usize>,
    },

    #[error("{what}: no valid configuration after {attempts} attempts (seed {seed})")]
    RetryExhausted {
        what: &'static str,
        attempts: usize,
        seed: u64,
    },
}

impl Error {
    pub(crate) fn param(msg: impl Into<String>) -> Self {
        Error::InvalidParameter(msg.into())
    }

    pub(crate) fn input(msg: impl Into<String>) -> Self {
        Error::InvalidInput {
            message: msg.into(),
            witness: None,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
