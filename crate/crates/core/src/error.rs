use std::io;

use thiserror::Error;

pub type Result<T> = std::result::Result<T, DpError>;

#[derive(Debug, Error)]
pub enum DpError {
    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("state {index} outside covered range [{lo}, {hi}]")]
    OutOfRange { index: usize, lo: usize, hi: usize },

    /// An algorithm invariant failed at runtime. Under a correctly declared
    /// cost shape this is unreachable; it usually means the cost function does
    /// not satisfy the Monge condition it claims.
    #[error("internal invariant violated: {0}")]
    Internal(String),

    #[error("malformed instance file: {0}")]
    Format(String),

    #[error(transparent)]
    Io(#[from] io::Error),
}

impl DpError {
    pub fn invalid(msg: impl Into<String>) -> Self {
        DpError::InvalidInput(msg.into())
    }
}
