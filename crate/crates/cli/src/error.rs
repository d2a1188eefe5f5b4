use thiserror::Error;

/// Exit status 2 for usage and input-format problems, 1 for failures of the
/// computation itself.
#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Compute(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Compute(_) => 1,
        }
    }

    pub fn usage(msg: impl Into<String>) -> Self {
        CliError::Usage(msg.into())
    }
}

impl From<hierarchyrank::Error> for CliError {
    fn from(err: hierarchyrank::Error) -> Self {
        use hierarchyrank::Error as E;
        match err {
            E::Format(_) | E::Row { .. } => CliError::Usage(err.to_string()),
            other => CliError::Compute(other.to_string()),
        }
    }
}

impl From<std::io::Error> for CliError {
    fn from(err: std::io::Error) -> Self {
        CliError::Compute(err.to_string())
    }
}

impl From<serde_json::Error> for CliError {
    fn from(err: serde_json::Error) -> Self {
        CliError::Compute(err.to_string())
    }
}
