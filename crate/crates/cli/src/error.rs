use thiserror::Error;
use ybe_core::YbeError;

/// Process exit codes.
pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY: i32 = 2;
pub const EXIT_INVALID: i32 = 3;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("invalid input: {0}")]
    Invalid(String),
    #[error("verification failed: {0}")]
    Verification(String),
    #[error("io: {0}")]
    Io(#[from] std::io::Error),
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Verification(_) => EXIT_VERIFY,
            _ => EXIT_INVALID,
        }
    }
}

impl From<YbeError> for CliError {
    fn from(err: YbeError) -> Self {
        match err {
            YbeError::NotCoprime(..)
            | YbeError::IndexOutOfRange(_)
            | YbeError::SizeMismatch(..)
            | YbeError::CoincidentPoints
            | YbeError::Shape(_)
            | YbeError::Unsupported(_) => CliError::Invalid(err.to_string()),
            _ => CliError::Verification(err.to_string()),
        }
    }
}

pub type CliResult<T> = std::result::Result<T, CliError>;
