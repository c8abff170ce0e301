use thiserror::Error;

/// Crate-wide error variants.
#[derive(Debug, Error)]
pub enum Error {
    /// Shapes of measures / cost matrices do not agree.
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    /// A probability vector violates the simplex invariants.
    #[error("invalid measure: {0}")]
    InvalidMeasure(String),

    /// A cost matrix has negative or non-finite entries.
    #[error("invalid cost matrix: {0}")]
    InvalidCostMatrix(String),

    /// Iterative solver hit its iteration cap before reaching tolerance.
    #[error("solver did not converge in {iterations} iterations (last residual {residual:.3e})")]
    IterationLimit { iterations: usize, residual: f64 },

    /// NaN or overflow appeared where the algorithm guarantees none.
    #[error("numerical failure: {0}")]
    NumericalFailure(String),

    /// A required graph path does not exist.
    #[error("graph disconnected: no path from vertex {source} to vertex {target}")]
    GraphDisconnected { source: usize, target: usize },

    /// Caller violated an operation precondition.
    #[error("contract violation: {0}")]
    Contract(String),

    /// Bad configuration file or flag value.
    #[error("config error: {0}")]
    Config(String),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
