//! Numerical thresholds shared by every module.

/// Largest supported matrix dimension.
pub const MAX_DIM: usize = 64;

/// Thresholds used for validation and classification.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerances {
    /// Per-entry tolerance for symmetry, skewness and Hermiticity.
    pub structure: f64,
    /// Smallest admissible eigenvalue of a covariance matrix.
    pub positive_definite: f64,
    /// Smallest admissible singular value of a form or map.
    pub singular: f64,
    /// Relative agreement demanded between two spectral routes.
    pub spectrum_agreement: f64,
    /// Band below 1 that still counts as satisfying an invariant test.
    pub boundary: f64,
    /// Per-entry tolerance for the Darboux constraint and involution checks.
    pub map_identity: f64,
    /// Slack below zero tolerated for closed-form radicands.
    pub radicand: f64,
    /// Floor for the Hermitian-positivity oracle.
    pub hermitian_floor: f64,
}

impl Tolerances {
    pub const DEFAULT: Tolerances = Tolerances {
        structure: 1e-12,
        positive_definite: 1e-12,
        singular: 1e-12,
        spectrum_agreement: 1e-9,
        boundary: 1e-12,
        map_identity: 1e-10,
        radicand: 1e-12,
        hermitian_floor: -1e-10,
    };
}

impl Default for Tolerances {
    fn default() -> Self {
        Self::DEFAULT
    }
}

/// `true` when `nu` satisfies `nu >= 1` within the boundary band.
pub fn at_least_one(nu: f64) -> bool {
    nu >= 1.0 - Tolerances::DEFAULT.boundary
}

pub(crate) fn relative_gap(a: f64, b: f64) -> f64 {
    let scale = a.abs().max(b.abs());
    if scale == 0.0 {
        0.0
    } else {
        (a - b).abs() / scale
    }
}
