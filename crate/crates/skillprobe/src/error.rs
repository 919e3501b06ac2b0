//! Crate-wide error type.

/// Convenience alias used across the crate.
pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("{op}: incompatible shapes {left:?} and {right:?}")]
    Shape {
        op: &'static str,
        left: (usize, usize),
        right: (usize, usize),
    },
    #[error("config: {0}")]
    Config(String),
    #[error("input: {0}")]
    Input(String),
    #[error("contract violation: {0}")]
    Contract(String),
    #[error("token id {token} outside vocabulary of size {vocab}")]
    Vocab { token: u32, vocab: usize },
    #[error("sequence length {len} exceeds maximum {max}")]
    Length { len: usize, max: usize },
    #[error("state: {0}")]
    State(String),
    #[error("file format: {0}")]
    Format(String),
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("numerical error: {0}")]
    Numerical(String),
    #[error("missing upstream output: {missing} (run `{command}` first)")]
    Dependency { missing: String, command: String },
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    /// Exit code the CLI maps this error to: 2 for validation/dependency
    /// problems the user can fix by reordering commands, 1 otherwise.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Dependency { .. } | Error::Config(_) | Error::Parse { .. } => 2,
            _ => 1,
        }
    }
}
