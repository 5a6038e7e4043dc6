//! The centred two-mode-per-party Gaussian family on the 8-dimensional
//! planar phase space, with closed-form invariants.
//!
//! The covariance is `Σ = (b/2) [[I₄, γᵀ], [γ, I₄]]` with
//! `R = √(m² + n²)`, `b = (1 + R)/(1 - R)` and
//!
//! ```text
//! γ = [ n   0   m   0 ]
//!     [ 0   n   0  -m ]
//!     [ m   0  -n   0 ]
//!     [ 0  -m   0  -n ]
//! ```
//!
//! `Σ` is the matrix that enters the uncertainty and separability tests;
//! the density `F(z) ∝ exp(-zᵀ Σ⁻¹ z)` has statistical covariance `Σ/2`.

use std::f64::consts::PI;

use nalgebra::{DMatrix, DVector};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matrix::{CovarianceMatrix, RealMatrix};
use crate::phase_space::{CompositeForm, NCParams};
use crate::separability::primed_form;
use crate::symplectic::{nc_williamson_spectrum, SymplecticSpectrum};
use crate::tolerance::Tolerances;

pub const PHASE_SPACE_DIM: usize = 8;

/// `(m, n)` correlation parameters plus the deformation `(θ, η)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "RawFamily", into = "RawFamily")]
pub struct FamilyParams {
    m: f64,
    n: f64,
    nc: NCParams,
}

#[derive(Serialize, Deserialize)]
struct RawFamily {
    m: f64,
    n: f64,
    theta: f64,
    eta: f64,
}

impl TryFrom<RawFamily> for FamilyParams {
    type Error = Error;

    fn try_from(raw: RawFamily) -> Result<Self> {
        FamilyParams::new(raw.m, raw.n, NCParams::new(raw.theta, raw.eta)?)
    }
}

impl From<FamilyParams> for RawFamily {
    fn from(p: FamilyParams) -> Self {
        RawFamily {
            m: p.m,
            n: p.n,
            theta: p.nc.theta(),
            eta: p.nc.eta(),
        }
    }
}

/// `R = √(m² + n²)`.
pub fn correlation_radius(m: f64, n: f64) -> f64 {
    m.hypot(n)
}

impl FamilyParams {
    pub fn new(m: f64, n: f64, nc: NCParams) -> Result<Self> {
        let r = correlation_radius(m, n);
        if !(r.is_finite() && r < 1.0) {
            return Err(Error::InvalidFamily(r));
        }
        Ok(Self { m, n, nc })
    }

    pub fn m(&self) -> f64 {
        self.m
    }

    pub fn n(&self) -> f64 {
        self.n
    }

    pub fn nc(&self) -> &NCParams {
        &self.nc
    }

    pub fn r(&self) -> f64 {
        correlation_radius(self.m, self.n)
    }

    pub fn b(&self) -> f64 {
        let r = self.r();
        (1.0 + r) / (1.0 - r)
    }
}

/// The 8×8 covariance of the family for correlations `(m, n)`.
pub fn build_covariance(m: f64, n: f64) -> Result<CovarianceMatrix> {
    let r = correlation_radius(m, n);
    if !(r.is_finite() && r < 1.0) {
        return Err(Error::InvalidFamily(r));
    }
    let half_b = 0.5 * (1.0 + r) / (1.0 - r);
    #[rustfmt::skip]
    let gamma = DMatrix::from_row_slice(4, 4, &[
        n, 0.0, m, 0.0,
        0.0, n, 0.0, -m,
        m, 0.0, -n, 0.0,
        0.0, -m, 0.0, -n,
    ]);
    let mut sigma = DMatrix::<f64>::identity(8, 8);
    sigma.view_mut((4, 0), (4, 4)).copy_from(&gamma);
    sigma.view_mut((0, 4), (4, 4)).copy_from(&gamma.transpose());
    CovarianceMatrix::new(RealMatrix::from_dmatrix(sigma * half_b)?)
}

/// A member of the family with its normalised Wigner function.
#[derive(Debug, Clone)]
pub struct GaussianState {
    params: FamilyParams,
    sigma: CovarianceMatrix,
    precision: DMatrix<f64>,
    norm: f64,
}

impl GaussianState {
    pub fn new(params: FamilyParams) -> Result<Self> {
        let sigma = build_covariance(params.m, params.n)?;
        let chol = sigma
            .matrix()
            .as_dmatrix()
            .clone()
            .cholesky()
            .ok_or(Error::NotPositiveDefinite(0.0))?;
        let det = chol.determinant();
        let precision = chol.inverse();
        let norm = 1.0 / (PI.powi(4) * det.sqrt());
        Ok(Self {
            params,
            sigma,
            precision,
            norm,
        })
    }

    pub fn params(&self) -> &FamilyParams {
        &self.params
    }

    pub fn sigma(&self) -> &CovarianceMatrix {
        &self.sigma
    }

    /// `1 / (π⁴ √det Σ)`.
    pub fn norm(&self) -> f64 {
        self.norm
    }

    /// Second moments `E[z zᵀ] = Σ/2` of the Wigner density.
    pub fn moment_covariance(&self) -> RealMatrix {
        self.sigma.matrix().scale(0.5).expect("finite")
    }

    pub fn composite_form(&self) -> Result<CompositeForm> {
        CompositeForm::planar(&self.params.nc)
    }
}

/// `F(z) = exp(-zᵀ Σ⁻¹ z) / (π⁴ √det Σ)`.
pub fn evaluate_wigner(state: &GaussianState, z: &[f64]) -> Result<f64> {
    if z.len() != PHASE_SPACE_DIM {
        return Err(Error::DimensionMismatch {
            expected: PHASE_SPACE_DIM,
            found: z.len(),
        });
    }
    if z.iter().any(|x| !x.is_finite()) {
        return Err(Error::NonFinite);
    }
    let z = DVector::from_column_slice(z);
    let quad = z.dot(&(&state.precision * &z));
    Ok(state.norm * (-quad).exp())
}

/// `(ω₊, ω₋)`, evaluated term by term.
pub fn omega_pm(params: &FamilyParams) -> (f64, f64) {
    let (m, n) = (params.m, params.n);
    let (t, e) = (params.nc.theta(), params.nc.eta());
    let omega = |s: f64| {
        2.0 * (1.0 + s * n * n)
            + (1.0 - s * n * n) * (e * e + t * t)
            + s * 2.0 * m * m * (1.0 + e * t)
            + n * (1.0 - s) * (e * e - t * t).abs()
            + 2.0 * m * (1.0 + s) * (e + t)
    };
    (omega(1.0), omega(-1.0))
}

/// Closed-form `ν₋`, `ν₋′` together with the `ω±` they came from.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ClosedFormInvariants {
    pub omega_plus: f64,
    pub omega_minus: f64,
    pub nu_minus: f64,
    pub nu_minus_prime: f64,
}

/// `(1/(1-ηθ)) b √(ω/2 - √(ω²/4 - c))` with `c = (1-R²)²(1-ηθ)²`.
///
/// `excess` is `ω/2 - √c` expanded symbolically, so the inner radicand
/// `(ω/2 - √c)(ω/2 + √c)` is exact at degenerate points such as
/// `θ = η = 0`. The outer radicand is evaluated as `c / (ω/2 + √inner)`,
/// the same quantity without cancellation.
fn smallest_invariant(params: &FamilyParams, omega: f64, excess: f64, label: &str) -> Result<f64> {
    let slack = Tolerances::DEFAULT.radicand;
    let r = params.r();
    let deform = 1.0 - params.nc.theta() * params.nc.eta();
    let root_c = (1.0 - r * r) * deform;
    let half = 0.5 * omega;
    let mut inner = excess * (half + root_c);
    if inner < -slack {
        return Err(Error::FormulaDomain(format!(
            "{label}: inner radicand {inner:e} is negative"
        )));
    }
    inner = inner.max(0.0);
    let mut outer = if half > 0.0 {
        root_c * root_c / (half + inner.sqrt())
    } else {
        half - inner.sqrt()
    };
    if outer < -slack {
        return Err(Error::FormulaDomain(format!(
            "{label}: outer radicand {outer:e} is negative"
        )));
    }
    outer = outer.max(0.0);
    let nu = params.b() / deform * outer.sqrt();
    if !(nu > 0.0 && nu.is_finite()) {
        return Err(Error::FormulaDomain(format!(
            "{label}: invariant {nu} is not positive"
        )));
    }
    Ok(nu)
}

/// `ω±/2 - (1-R²)(1-ηθ)`, expanded.
fn omega_excess(params: &FamilyParams) -> (f64, f64) {
    let (m, n) = (params.m, params.n);
    let (t, e) = (params.nc.theta(), params.nc.eta());
    let sum2 = (t + e) * (t + e);
    let plus = 2.0 * (m * m + n * n) + 0.5 * (1.0 - n * n) * sum2 + 2.0 * m * (t + e);
    let minus = 0.5 * sum2 + 0.5 * n * n * (e - t) * (e - t) - 2.0 * m * m * e * t
        + n * (e * e - t * t).abs();
    (plus, minus)
}

/// Closed-form smallest invariants of `(Σ, Ω)` and `(Σ, Ω′)`.
///
/// The expressions hold for non-negative `m` and `n`; other signs are
/// reported as a domain error (the `|η² - θ²|` and linear `m` terms are
/// not even in the sign of `m`, `n`).
pub fn closed_form_invariants(params: &FamilyParams) -> Result<ClosedFormInvariants> {
    if params.m < 0.0 || params.n < 0.0 {
        return Err(Error::FormulaDomain(format!(
            "correlations must be non-negative (m = {}, n = {})",
            params.m, params.n
        )));
    }
    let (omega_plus, omega_minus) = omega_pm(params);
    let (excess_plus, excess_minus) = omega_excess(params);
    Ok(ClosedFormInvariants {
        omega_plus,
        omega_minus,
        nu_minus: smallest_invariant(params, omega_minus, excess_minus, "nu_minus")?,
        nu_minus_prime: smallest_invariant(params, omega_plus, excess_plus, "nu_minus_prime")?,
    })
}

/// Full spectra of `(Σ, Ω)` and `(Σ, Ω′)` from the eigensolver route.
pub fn spectral_invariants(
    params: &FamilyParams,
) -> Result<(SymplecticSpectrum, SymplecticSpectrum)> {
    let sigma = build_covariance(params.m, params.n)?;
    let omega = CompositeForm::planar(&params.nc)?;
    let plain = nc_williamson_spectrum(&sigma, omega.form())?;
    let primed = nc_williamson_spectrum(&sigma, &primed_form(&omega)?)?;
    Ok((plain, primed))
}
