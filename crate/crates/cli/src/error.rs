use monodromy_core::{Error, ErrorClass};

/// Failures of a CLI run, each with its process exit code.
#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("config error: {0}")]
    Config(String),
    #[error("{0}")]
    Model(Error),
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
    #[error("THEOREM-VIOLATION: {0}")]
    TheoremViolation(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Config(_) => 2,
            CliError::Model(e) => match e.class() {
                ErrorClass::Domain => 3,
                ErrorClass::DegeneracyOnPath => 4,
            },
            CliError::Io(_) => 1,
            CliError::TheoremViolation(_) => 5,
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Model(e)
    }
}
