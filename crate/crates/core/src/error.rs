use thiserror::Error;

/// Errors raised by the phase-space routines.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid dimension {0}: expected a positive even size no larger than {max}", max = crate::tolerance::MAX_DIM)]
    InvalidDimension(usize),

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("entry count {found} does not match a {dim}x{dim} matrix")]
    EntryCount { dim: usize, found: usize },

    #[error("matrix contains a non-finite entry")]
    NonFinite,

    #[error("matrix is not symmetric (max deviation {0:e})")]
    NotSymmetric(f64),

    #[error("matrix is not skew-symmetric (max deviation {0:e})")]
    NotSkewSymmetric(f64),

    #[error("matrix is not Hermitian (max deviation {0:e})")]
    NotHermitian(f64),

    #[error("covariance matrix is not positive-definite (smallest eigenvalue {0:e})")]
    NotPositiveDefinite(f64),

    #[error("skew form is singular (smallest singular value {0:e})")]
    SingularForm(f64),

    #[error("linear map is singular (smallest singular value {0:e})")]
    SingularMap(f64),

    #[error("map is not an involution (max |D² - I| = {0:e})")]
    NotInvolution(f64),

    #[error("Darboux map does not carry J to the target form")]
    DarbouxConstraint,

    #[error("deformation parameters outside the domain: theta = {theta}, eta = {eta} (need finite, non-negative, theta*eta < 1)")]
    InvalidDeformation { theta: f64, eta: f64 },

    #[error("scale parameter must be finite and positive, got {0}")]
    InvalidScale(f64),

    #[error("family parameters outside the domain: R = {0} (need 0 <= R < 1)")]
    InvalidFamily(f64),

    #[error("invalid axis range: {0}")]
    InvalidRange(String),

    #[error("closed-form invariant outside its domain: {0}")]
    FormulaDomain(String),

    #[error("spectral routes disagree: {first} vs {second}")]
    RouteMismatch { first: f64, second: f64 },

    #[error("eigenvalue computation failed: {0}")]
    Eigen(&'static str),
}

pub type Result<T> = std::result::Result<T, Error>;
