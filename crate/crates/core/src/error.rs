use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// Bad arguments: out-of-range indices, odd degrees where even ones are
    /// required, inadmissible weights.
    #[error("usage error: {0}")]
    Usage(String),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("parameter mismatch: {0}")]
    ParamMismatch(String),
    #[error("size cap exceeded: {0}")]
    CapExceeded(String),
    /// A constructed object failed its own validation (closure of an
    /// algebra, dimension of a standard module, ...).
    #[error("construction failed: {0}")]
    Construction(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("cancelled")]
    Cancelled,
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
