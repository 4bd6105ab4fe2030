use thiserror::Error;

/// Errors raised when an input falls outside the domain an operation is defined on.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("{name} must be finite, got {value}")]
    NotFinite { name: &'static str, value: f64 },

    #[error("{name} = {value} is outside {range}")]
    OutOfRange {
        name: &'static str,
        value: f64,
        range: &'static str,
    },

    #[error("a sample needs at least {needed} angle(s), got {got}")]
    SampleTooSmall { needed: usize, got: usize },

    #[error("grid needs at least {needed} points, got {got}")]
    GridTooSmall { needed: usize, got: usize },

    #[error("grid points must be strictly increasing and lie in [-pi, pi)")]
    InvalidGrid,

    #[error("{0} must not be empty")]
    Empty(&'static str),

    #[error("invalid mixture: {0}")]
    InvalidMixture(String),

    #[error("{0}")]
    Unsupported(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn ensure_finite(name: &'static str, value: f64) -> Result<f64> {
    if value.is_finite() {
        Ok(value)
    } else {
        Err(Error::NotFinite { name, value })
    }
}
