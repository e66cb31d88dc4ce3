use thiserror::Error;

/// Errors raised by the spectral toolkit.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("operation requires a nonzero trigonometric polynomial")]
    ZeroPolynomial,

    #[error("denominator vanishes at x = {x}")]
    SingularEvaluation { x: f64 },

    #[error("gauge mismatch: {0}")]
    GaugeMismatch(String),

    #[error("matrix is not of Jacobi type: {0}")]
    NotJacobi(String),

    #[error("{nu} is not an eigenvalue (relative residual {residual:e})")]
    NotAnEigenvalue { nu: f64, residual: f64 },

    #[error("index {index} out of range (valid: {valid})")]
    IndexOutOfRange { index: usize, valid: String },

    #[error("invalid cluster set {indices:?}: {reason}")]
    InvalidCluster { indices: Vec<usize>, reason: String },

    #[error("wronskian has a real zero near x = {x}; the transformed potential is singular")]
    SingularPotential { x: f64 },

    #[error("regularity indeterminate: relative margin {margin:e} below certification threshold")]
    Indeterminate { margin: f64 },

    #[error("internal consistency violated: {0}")]
    Inconsistent(String),

    #[error("integrator failed: {reason} (achieved error {achieved:e})")]
    Integrator { reason: String, achieved: f64 },

    #[error("unresolved root cluster in lambda window [{lo}, {hi}]")]
    UnresolvedRoots { lo: f64, hi: f64 },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
