use thiserror::Error;

/// Errors raised by oracle primitives, solvers, and problem generators.
#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error(
        "line search stalled at iteration {iteration} after {backtracks} backtracks; \
         the smooth part may lack a locally Lipschitz gradient"
    )]
    LineSearchStalled { iteration: usize, backtracks: usize },

    #[error("power iteration did not converge within {max_iterations} iterations")]
    PowerIterationDiverged { max_iterations: usize },

    #[error("objective is infinite at both the candidate and the current iterate")]
    ObjectiveInfinite,

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
