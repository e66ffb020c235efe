use thiserror::Error;

/// Errors shared across the crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    InvalidVertex { vertex: usize, n: usize },

    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("resource limit exceeded: {0}")]
    ResourceLimit(String),

    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("domain error: {0}")]
    Domain(String),

    #[error(
        "root solver did not converge after {iterations} iterations \
         (max residual {max_residual:e})"
    )]
    Convergence {
        iterations: u32,
        max_residual: f64,
        /// Best iterate found, as (re, im) pairs.
        roots: Vec<(f64, f64)>,
        residuals: Vec<f64>,
    },
}

pub type Result<T> = std::result::Result<T, Error>;
