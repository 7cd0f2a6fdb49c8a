use thiserror::Error;

/// Failures of a CLI run, each mapped to a process exit code.
#[derive(Debug, Error)]
pub enum CliError {
    #[error("invalid configuration at `{path}`: {message}")]
    Validation { path: String, message: String },

    #[error("unknown preset `{name}` for {command}; available: {available}")]
    UnknownPreset { command: &'static str, name: String, available: String },

    #[error(transparent)]
    Compute(#[from] matterwave::Error),

    #[error("cannot {action} `{path}`: {source}")]
    Io {
        action: &'static str,
        path: String,
        #[source]
        source: std::io::Error,
    },
}

impl CliError {
    /// 2 for bad input, 3 for numerical failure, 4 for I/O.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Validation { .. } | CliError::UnknownPreset { .. } => 2,
            CliError::Compute(err) if err.is_numeric() => 3,
            CliError::Compute(_) => 2,
            CliError::Io { .. } => 4,
        }
    }
}
