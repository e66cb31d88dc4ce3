use thiserror::Error;

/// Process exit codes.
pub mod exit {
    pub const SUCCESS: i32 = 0;
    pub const VALIDATION: i32 = 2;
    pub const INCONSISTENT: i32 = 3;
    pub const SINGULAR: i32 = 4;
    pub const INTEGRATOR: i32 = 5;
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("invalid input: {0}")]
    Validation(String),
    #[error(transparent)]
    Core(#[from] whill::Error),
    #[error("cannot write output: {0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        use whill::Error as E;
        match self {
            CliError::Validation(_) | CliError::Io(_) => exit::VALIDATION,
            CliError::Core(e) => match e {
                E::InvalidParameter(_) | E::InvalidCluster { .. } | E::IndexOutOfRange { .. } => {
                    exit::VALIDATION
                }
                E::SingularPotential { .. } | E::SingularEvaluation { .. } => exit::SINGULAR,
                E::Integrator { .. } => exit::INTEGRATOR,
                E::ZeroPolynomial
                | E::GaugeMismatch(_)
                | E::NotJacobi(_)
                | E::NotAnEigenvalue { .. }
                | E::Indeterminate { .. }
                | E::Inconsistent(_)
                | E::UnresolvedRoots { .. } => exit::INCONSISTENT,
            },
        }
    }
}
