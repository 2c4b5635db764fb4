use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Parse(String),
    #[error(transparent)]
    Core(#[from] pcx_core::Error),
    #[error("{path}: {source}")]
    Io { path: String, source: std::io::Error },
}

impl CliError {
    /// Process exit code: 1 for failed checks, 2 for usage and parse errors.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Core(pcx_core::Error::SemigroupOverflow(_)) => 1,
            CliError::Core(pcx_core::Error::AtomCountMismatch { .. }) => 1,
            _ => 2,
        }
    }
}
