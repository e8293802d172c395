use std::path::PathBuf;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Parse(String),
    #[error("{}: {source}", path.display())]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    /// The command ran but declines to produce its output (e.g. no witness for a separable state).
    #[error("{0}")]
    Refused(String),
    #[error(transparent)]
    Core(#[from] ghzsep::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) | CliError::Refused(_) => crate::EXIT_USAGE,
            CliError::Parse(_) | CliError::Io { .. } | CliError::Core(_) => crate::EXIT_PARSE,
        }
    }

    pub fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        CliError::Io {
            path: path.into(),
            source,
        }
    }
}
