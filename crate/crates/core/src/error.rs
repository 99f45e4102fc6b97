use num_rational::Ratio;
use thiserror::Error;

/// Errors raised by the library. Each variant maps to one failure family so
/// that front ends can pick an exit status without string matching.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid group table: {0}")]
    InvalidTable(String),

    #[error("not a surface-kernel-admissible pair: 2g-2 = {value} ({reason})")]
    Inadmissible {
        value: Ratio<i64>,
        reason: &'static str,
    },

    #[error("shape error: {0}")]
    Shape(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("group mismatch: {0}")]
    GroupMismatch(String),

    #[error("capability error: {0}")]
    Capability(String),

    #[error("internal consistency failure: {0}")]
    Internal(String),

    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),

    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
