use thiserror::Error;

/// Errors from distribution and joint construction or their operations.
#[derive(Debug, Clone, Error, PartialEq)]
pub enum TheoryError {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}
