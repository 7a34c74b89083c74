use std::fmt;

/// Errors mapped onto the process exit codes: 1 verification failure,
/// 2 invalid input, 3 output I/O failure (0 is success).
#[derive(Debug)]
pub enum CliError {
    Verification,
    Invalid(String),
    Io(String),
}

impl CliError {
    pub fn code(&self) -> u8 {
        match self {
            CliError::Verification => 1,
            CliError::Invalid(_) => 2,
            CliError::Io(_) => 3,
        }
    }

    pub fn invalid(message: impl Into<String>) -> Self {
        CliError::Invalid(message.into())
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Verification => write!(f, "verification failed"),
            CliError::Invalid(m) | CliError::Io(m) => write!(f, "{m}"),
        }
    }
}

impl std::error::Error for CliError {}
