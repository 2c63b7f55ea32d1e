use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// A truncated kernel sum did not settle below the requested tail tolerance.
    #[error(
        "tail estimate {tail_estimate:e} exceeds tolerance {tail_tol:e} at cutoff {cutoff}"
    )]
    ToleranceNotMet {
        tail_estimate: f64,
        tail_tol: f64,
        cutoff: usize,
    },

    #[error("no series solution: {0}")]
    NoSeriesSolution(String),

    #[error("unsupported superpotential form: {0}")]
    UnsupportedForm(String),

    #[error("model is not shape invariant at parameter {parameter}: residual {residual}")]
    NotShapeInvariant { parameter: f64, residual: String },

    #[error("invalid domain at site {site}: {reason}")]
    InvalidDomain { site: i64, reason: String },

    #[error("eigensolver did not converge after {sweeps} sweeps (off-diagonal {residual:e})")]
    ConvergenceFailure { sweeps: usize, residual: f64 },

    #[error("expression error: {0}")]
    Expression(String),
}
