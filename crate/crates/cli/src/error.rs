use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("configuration: {0}")]
    Config(String),
    #[error("no convergence: {0}")]
    Convergence(String),
    #[error("residual check failed: {0}")]
    Residual(String),
    #[error("verification failed: {0}")]
    Mismatch(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Config(_) => 2,
            CliError::Convergence(_) => 3,
            CliError::Residual(_) => 4,
            CliError::Mismatch(_) => 5,
        }
    }
}

impl From<ptsat::Error> for CliError {
    fn from(e: ptsat::Error) -> Self {
        use ptsat::Error as E;
        match e {
            E::InvalidModel(_) | E::InvalidRect(_) | E::NoCharacteristic(_) => CliError::Config(e.to_string()),
            E::Degenerate(_) => CliError::Residual(e.to_string()),
            _ => CliError::Convergence(e.to_string()),
        }
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Config(e.to_string())
    }
}
