use thiserror::Error;

/// Errors raised by the numerical routines.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("matrix is not Hermitian (max asymmetry {0:e})")]
    NotHermitian(f64),
    #[error("matrix is not positive semidefinite (eigenvalue {0:e})")]
    NotPsd(f64),
    #[error("bad dimension: {0}")]
    BadDimension(String),
    #[error("state is not normalized (norm {0})")]
    NotNormalized(f64),
    #[error("state has zero norm")]
    ZeroState,
    #[error("non-finite value in {0}")]
    NonFinite(&'static str),
    #[error("domain error: {0}")]
    Domain(String),
    #[error("invalid step count or interval: {0}")]
    BadSteps(String),
    #[error("degenerate path: {0}")]
    DegeneratePath(String),
    #[error("phase undefined: overlap modulus {0:e} vanishes")]
    ZeroVisibility(f64),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain(msg: impl Into<String>) -> Error {
    Error::Domain(msg.into())
}
