//! Error type shared across the crate.

use thiserror::Error;

/// Everything that can go wrong when building grids, axes, plans or
/// running a transform.
#[derive(Debug, Clone, Error)]
pub enum Error {
    /// A numeric argument is outside the domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// An axis pair is not a valid perpendicular pair of unit pure quaternions.
    #[error("axis error: {0}")]
    Axis(String),

    /// Grid mismatch or invalid grid geometry.
    #[error("grid error: {0}")]
    Grid(String),

    /// Scaled coordinates do not land on representable sample points.
    #[error("resample error: {0}")]
    Resample(String),

    /// Invalid transform parameters (e.g. a non-unimodular parameter matrix).
    #[error("parameter error: {0}")]
    Param(String),
}

pub type Result<T> = std::result::Result<T, Error>;
