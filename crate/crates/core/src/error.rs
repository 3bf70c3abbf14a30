use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("pole of the Gamma function at {0}")]
    Pole(String),
    #[error("series did not converge: {0}")]
    Divergence(String),
    #[error("invalid parameter: {0}")]
    Parameter(String),
    #[error("root finder failed to converge at index {index}: {msg}")]
    Convergence { index: usize, msg: String },
    #[error("series has zero constant term")]
    ZeroConstantTerm,
    #[error("precision check failed: {0}")]
    Precision(String),
    #[error("depth {depth} exceeds limit {limit}")]
    DepthLimit { depth: usize, limit: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
