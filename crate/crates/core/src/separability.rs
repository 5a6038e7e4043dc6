//! Partial transposition on noncommutative phase space and the two-stage
//! quantum / separable / entangled classification.

use std::fmt;

use nalgebra::DMatrix;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matrix::{CovarianceMatrix, RealMatrix, SkewForm};
use crate::phase_space::{
    build_darboux_map, validate_darboux, CompositeForm, DarbouxMap, NCParams,
};
use crate::symplectic::nc_williamson_spectrum;
use crate::tolerance::{at_least_one, relative_gap, Tolerances};

/// `Λ = Diag[I^A, I, -I]`: reflection of Bob's momenta.
#[derive(Debug, Clone, PartialEq)]
pub struct MirrorReflection {
    n_a: usize,
    n_b: usize,
    mat: RealMatrix,
}

impl MirrorReflection {
    pub fn matrix(&self) -> &RealMatrix {
        &self.mat
    }

    /// Bob's block `Λ^B = Diag[I, -I]`.
    pub fn bob_block(&self) -> RealMatrix {
        bob_reflection(self.n_b)
    }

    pub fn n_a(&self) -> usize {
        self.n_a
    }

    pub fn n_b(&self) -> usize {
        self.n_b
    }
}

fn bob_reflection(n_b: usize) -> RealMatrix {
    let diag: Vec<f64> = (0..2 * n_b)
        .map(|k| if k < n_b { 1.0 } else { -1.0 })
        .collect();
    RealMatrix::from_diagonal(&diag).expect("size checked by caller")
}

pub fn mirror_reflection(n_a: usize, n_b: usize) -> Result<MirrorReflection> {
    if n_a == 0 || n_b == 0 {
        return Err(Error::InvalidDimension(2 * n_a.min(n_b)));
    }
    if 2 * (n_a + n_b) > crate::tolerance::MAX_DIM {
        return Err(Error::InvalidDimension(2 * (n_a + n_b)));
    }
    let mat = RealMatrix::block_diag(&RealMatrix::identity(2 * n_a)?, &bob_reflection(n_b))?;
    Ok(MirrorReflection { n_a, n_b, mat })
}

/// `Ω′ = Diag[Ω^A, -Ω^B]`.
pub fn primed_form(omega: &CompositeForm) -> Result<SkewForm> {
    omega.primed()
}

/// `D = Diag[I^A, S^B Λ^B (S^B)⁻¹]`, the partial transpose in NC variables.
#[derive(Debug, Clone, PartialEq)]
pub struct PartialTransposeMap {
    mat: RealMatrix,
    split: usize,
}

impl PartialTransposeMap {
    pub fn matrix(&self) -> &RealMatrix {
        &self.mat
    }

    /// Dimension of Alice's block.
    pub fn alice_dim(&self) -> usize {
        self.split
    }
}

pub fn partial_transpose_map(
    map: &DarbouxMap,
    n_a: usize,
    n_b: usize,
) -> Result<PartialTransposeMap> {
    if map.n_a() != n_a || map.n_b() != n_b {
        return Err(Error::DimensionMismatch {
            expected: 2 * (n_a + n_b),
            found: map.dim(),
        });
    }
    let reflection = mirror_reflection(n_a, n_b)?;
    let s_b = map.s_b();
    let s_b_inv = s_b
        .try_inverse()
        .ok_or(Error::SingularMap(s_b.smallest_singular_value()))?;
    let bob = s_b.mul(&reflection.bob_block())?.mul(&s_b_inv)?;
    let mat = RealMatrix::block_diag(&RealMatrix::identity(2 * n_a)?, &bob)?;

    let square = mat.mul(&mat)?;
    let defect = square.max_abs_diff(&RealMatrix::identity(mat.dim())?);
    if defect > Tolerances::DEFAULT.map_identity {
        return Err(Error::NotInvolution(defect));
    }
    Ok(PartialTransposeMap {
        mat,
        split: 2 * n_a,
    })
}

/// `Σ′ = D Σ Dᵀ`.
pub fn partial_transpose_covariance(
    sigma: &CovarianceMatrix,
    d: &PartialTransposeMap,
) -> Result<CovarianceMatrix> {
    if sigma.dim() != d.mat.dim() {
        return Err(Error::DimensionMismatch {
            expected: d.mat.dim(),
            found: sigma.dim(),
        });
    }
    CovarianceMatrix::from_product(d.mat.congruence(sigma.matrix())?)
}

/// Outcome of the PPT test with both spectral routes retained.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SeparabilityCheck {
    pub separable: bool,
    /// `ν₋′`, taken from the reflected-state route.
    pub nu_minus_prime: f64,
    /// Smallest invariant of `(Σ, Ω′)`.
    pub via_primed_form: f64,
}

fn ensure_consistent(
    sigma: &CovarianceMatrix,
    omega: &CompositeForm,
    map: &DarbouxMap,
) -> Result<()> {
    if sigma.dim() != omega.dim() {
        return Err(Error::DimensionMismatch {
            expected: omega.dim(),
            found: sigma.dim(),
        });
    }
    if !validate_darboux(map, omega)? {
        return Err(Error::DarbouxConstraint);
    }
    Ok(())
}

/// PPT test: smallest invariant of `(DΣDᵀ, Ω)`, cross-checked against `(Σ, Ω′)`.
pub fn check_separable(
    sigma: &CovarianceMatrix,
    omega: &CompositeForm,
    map: &DarbouxMap,
) -> Result<SeparabilityCheck> {
    ensure_consistent(sigma, omega, map)?;
    separability_unchecked(sigma, omega, map)
}

fn separability_unchecked(
    sigma: &CovarianceMatrix,
    omega: &CompositeForm,
    map: &DarbouxMap,
) -> Result<SeparabilityCheck> {
    let d = partial_transpose_map(map, omega.n_a(), omega.n_b())?;
    let reflected = partial_transpose_covariance(sigma, &d)?;
    let first = nc_williamson_spectrum(&reflected, omega.form())?.smallest();
    let second = nc_williamson_spectrum(sigma, &primed_form(omega)?)?.smallest();
    if relative_gap(first, second) > Tolerances::DEFAULT.spectrum_agreement {
        return Err(Error::RouteMismatch { first, second });
    }
    Ok(SeparabilityCheck {
        separable: at_least_one(first),
        nu_minus_prime: first,
        via_primed_form: second,
    })
}

/// Classification verdict.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    #[serde(rename = "invalid")]
    InvalidDomain,
    NonQuantum,
    #[serde(rename = "separable")]
    SeparableQuantum,
    #[serde(rename = "entangled")]
    EntangledQuantum,
}

impl Verdict {
    pub const ALL: [Verdict; 4] = [
        Verdict::InvalidDomain,
        Verdict::NonQuantum,
        Verdict::SeparableQuantum,
        Verdict::EntangledQuantum,
    ];

    /// Quantum iff `ν₋ ≥ 1`; then separable iff `ν₋′ ≥ 1`.
    pub fn from_invariants(nu_minus: f64, nu_minus_prime: f64) -> Verdict {
        if !at_least_one(nu_minus) {
            Verdict::NonQuantum
        } else if at_least_one(nu_minus_prime) {
            Verdict::SeparableQuantum
        } else {
            Verdict::EntangledQuantum
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::InvalidDomain => "invalid",
            Verdict::NonQuantum => "nonquantum",
            Verdict::SeparableQuantum => "separable",
            Verdict::EntangledQuantum => "entangled",
        }
    }

    pub fn parse(s: &str) -> Option<Verdict> {
        Verdict::ALL.into_iter().find(|v| v.as_str() == s)
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Verdict plus the invariants it was read from. Both invariants are
/// absent for [`Verdict::InvalidDomain`].
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ClassificationResult {
    pub verdict: Verdict,
    pub nu_minus: Option<f64>,
    pub nu_minus_prime: Option<f64>,
}

impl ClassificationResult {
    pub fn invalid() -> Self {
        Self {
            verdict: Verdict::InvalidDomain,
            nu_minus: None,
            nu_minus_prime: None,
        }
    }

    pub fn from_invariants(nu_minus: f64, nu_minus_prime: f64) -> Self {
        Self {
            verdict: Verdict::from_invariants(nu_minus, nu_minus_prime),
            nu_minus: Some(nu_minus),
            nu_minus_prime: Some(nu_minus_prime),
        }
    }

    /// `true` when the stored verdict follows from the stored invariants.
    pub fn is_consistent(&self) -> bool {
        match (self.nu_minus, self.nu_minus_prime) {
            (Some(a), Some(b)) => self.verdict == Verdict::from_invariants(a, b),
            (None, None) => self.verdict == Verdict::InvalidDomain,
            _ => false,
        }
    }
}

pub fn classify(
    sigma: &CovarianceMatrix,
    omega: &CompositeForm,
    map: &DarbouxMap,
) -> Result<ClassificationResult> {
    ensure_consistent(sigma, omega, map)?;
    let nu_minus = nc_williamson_spectrum(sigma, omega.form())?.smallest();
    let check = separability_unchecked(sigma, omega, map)?;
    Ok(ClassificationResult::from_invariants(
        nu_minus,
        check.nu_minus_prime,
    ))
}

/// Classifies `sigma` on the planar form with parameters `(θ, η)`, using
/// the gauge `λ = 1`. Parameters outside `θη < 1` give `InvalidDomain`.
pub fn classify_planar(
    sigma: &CovarianceMatrix,
    theta: f64,
    eta: f64,
) -> Result<ClassificationResult> {
    if !NCParams::in_domain(theta, eta) {
        return Ok(ClassificationResult::invalid());
    }
    let params = NCParams::new(theta, eta)?;
    let omega = CompositeForm::planar(&params)?;
    let map = build_darboux_map(&params, 1.0)?;
    classify(sigma, &omega, &map)
}

/// Alice's block of a bipartite matrix, for tests and diagnostics.
pub fn alice_block(mat: &RealMatrix, alice_dim: usize) -> DMatrix<f64> {
    mat.as_dmatrix()
        .view((0, 0), (alice_dim, alice_dim))
        .into_owned()
}
