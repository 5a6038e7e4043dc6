//! Noncommutative commutation forms and Darboux maps.
//!
//! Each subsystem uses the ordering `(x_1, .., x_k, p_1, .., p_k)` and the
//! form `[[Θ, I], [-I, Υ]]`; the composite form is `Diag[Ω^A, Ω^B]`.

use nalgebra::DMatrix;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matrix::{CovarianceMatrix, RealMatrix, SkewForm};
use crate::symplectic::standard_symplectic_form;
use crate::tolerance::Tolerances;

/// Planar deformation strengths `θ` (positions) and `η` (momenta).
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "RawParams", into = "RawParams")]
pub struct NCParams {
    theta: f64,
    eta: f64,
}

#[derive(Serialize, Deserialize)]
struct RawParams {
    theta: f64,
    eta: f64,
}

impl TryFrom<RawParams> for NCParams {
    type Error = Error;

    fn try_from(raw: RawParams) -> Result<Self> {
        NCParams::new(raw.theta, raw.eta)
    }
}

impl From<NCParams> for RawParams {
    fn from(p: NCParams) -> Self {
        RawParams {
            theta: p.theta,
            eta: p.eta,
        }
    }
}

impl NCParams {
    pub fn new(theta: f64, eta: f64) -> Result<Self> {
        if !Self::in_domain(theta, eta) {
            return Err(Error::InvalidDeformation { theta, eta });
        }
        Ok(Self { theta, eta })
    }

    /// Domain test without constructing: finite, non-negative, `θη < 1`.
    pub fn in_domain(theta: f64, eta: f64) -> bool {
        theta.is_finite() && eta.is_finite() && theta >= 0.0 && eta >= 0.0 && theta * eta < 1.0
    }

    pub fn commutative() -> Self {
        Self {
            theta: 0.0,
            eta: 0.0,
        }
    }

    pub fn theta(&self) -> f64 {
        self.theta
    }

    pub fn eta(&self) -> f64 {
        self.eta
    }

    /// `λμ = (1 + √(1 - θη)) / 2`.
    pub fn darboux_scale_product(&self) -> f64 {
        0.5 * (1.0 + (1.0 - self.theta * self.eta).sqrt())
    }
}

fn epsilon_block(scale: f64) -> RealMatrix {
    RealMatrix::from_row_major(2, vec![0.0, scale, -scale, 0.0]).expect("finite 2x2 block")
}

/// Commutation form of a single party.
#[derive(Debug, Clone, PartialEq)]
pub struct SubsystemForm {
    n_k: usize,
    theta_block: RealMatrix,
    upsilon_block: RealMatrix,
    assembled: SkewForm,
}

impl SubsystemForm {
    pub fn modes(&self) -> usize {
        self.n_k
    }

    pub fn theta_block(&self) -> &RealMatrix {
        &self.theta_block
    }

    pub fn upsilon_block(&self) -> &RealMatrix {
        &self.upsilon_block
    }

    pub fn form(&self) -> &SkewForm {
        &self.assembled
    }

    /// The same subsystem with `Ω^K` replaced by `-Ω^K`.
    fn negated(&self) -> Result<SkewForm> {
        SkewForm::new(self.assembled.matrix().scale(-1.0)?)
    }
}

/// Assembles `[[Θ, I], [-I, Υ]]` from two `n_k × n_k` skew blocks.
pub fn build_subsystem_form(
    n_k: usize,
    theta_block: &RealMatrix,
    upsilon_block: &RealMatrix,
) -> Result<SubsystemForm> {
    if n_k == 0 || 2 * n_k > crate::tolerance::MAX_DIM {
        return Err(Error::InvalidDimension(2 * n_k));
    }
    for block in [theta_block, upsilon_block] {
        if block.dim() != n_k {
            return Err(Error::DimensionMismatch {
                expected: n_k,
                found: block.dim(),
            });
        }
        let defect = block.skew_defect();
        if defect > Tolerances::DEFAULT.structure {
            return Err(Error::NotSkewSymmetric(defect));
        }
    }
    let mut full = DMatrix::zeros(2 * n_k, 2 * n_k);
    full.view_mut((0, 0), (n_k, n_k))
        .copy_from(theta_block.as_dmatrix());
    full.view_mut((n_k, n_k), (n_k, n_k))
        .copy_from(upsilon_block.as_dmatrix());
    for i in 0..n_k {
        full[(i, n_k + i)] = 1.0;
        full[(n_k + i, i)] = -1.0;
    }
    let assembled = SkewForm::new(RealMatrix::from_dmatrix(full)?)?;
    Ok(SubsystemForm {
        n_k,
        theta_block: theta_block.clone(),
        upsilon_block: upsilon_block.clone(),
        assembled,
    })
}

/// Two-mode form with `Θ = θε`, `Υ = ηε` and `ε₁₂ = +1`.
pub fn build_planar_form(params: &NCParams) -> Result<SubsystemForm> {
    build_subsystem_form(2, &epsilon_block(params.theta), &epsilon_block(params.eta))
}

/// The standard form of one subsystem, `Θ = Υ = 0`.
pub fn commutative_subsystem(n_k: usize) -> Result<SubsystemForm> {
    let zero = RealMatrix::from_dmatrix(DMatrix::zeros(n_k.max(1), n_k.max(1)))?;
    build_subsystem_form(n_k, &zero, &zero)
}

/// Bipartite form `Diag[Ω^A, Ω^B]`.
#[derive(Debug, Clone, PartialEq)]
pub struct CompositeForm {
    part_a: SubsystemForm,
    part_b: SubsystemForm,
    assembled: SkewForm,
}

impl CompositeForm {
    pub fn new(part_a: SubsystemForm, part_b: SubsystemForm) -> Result<Self> {
        let assembled = SkewForm::new(RealMatrix::block_diag(
            part_a.form().matrix(),
            part_b.form().matrix(),
        )?)?;
        Ok(Self {
            part_a,
            part_b,
            assembled,
        })
    }

    /// Both parties carry the planar form of `params`.
    pub fn planar(params: &NCParams) -> Result<Self> {
        let part = build_planar_form(params)?;
        Self::new(part.clone(), part)
    }

    /// `J = Diag[J^A, J^B]`.
    pub fn standard(n_a: usize, n_b: usize) -> Result<Self> {
        Self::new(commutative_subsystem(n_a)?, commutative_subsystem(n_b)?)
    }

    pub fn part_a(&self) -> &SubsystemForm {
        &self.part_a
    }

    pub fn part_b(&self) -> &SubsystemForm {
        &self.part_b
    }

    pub fn n_a(&self) -> usize {
        self.part_a.n_k
    }

    pub fn n_b(&self) -> usize {
        self.part_b.n_k
    }

    pub fn dim(&self) -> usize {
        self.assembled.dim()
    }

    pub fn form(&self) -> &SkewForm {
        &self.assembled
    }

    /// `Diag[Ω^A, -Ω^B]`.
    pub fn primed(&self) -> Result<SkewForm> {
        SkewForm::new(RealMatrix::block_diag(
            self.part_a.form().matrix(),
            self.part_b.negated()?.matrix(),
        )?)
    }
}

/// Block-diagonal Darboux map `S = Diag[S^A, S^B]` with `S J Sᵀ = Ω`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DarbouxMap {
    s_a: RealMatrix,
    s_b: RealMatrix,
    #[serde(rename = "lambda")]
    lambda_scale: Option<f64>,
    #[serde(rename = "mu")]
    mu_scale: Option<f64>,
}

impl DarbouxMap {
    /// A map from user-supplied blocks. Only invertibility is checked here;
    /// the constraint against a target form is checked by [`validate_darboux`].
    pub fn from_blocks(s_a: RealMatrix, s_b: RealMatrix) -> Result<Self> {
        for block in [&s_a, &s_b] {
            if block.dim() % 2 != 0 {
                return Err(Error::InvalidDimension(block.dim()));
            }
            let smallest = block.smallest_singular_value();
            if !(smallest > Tolerances::DEFAULT.singular) {
                return Err(Error::SingularMap(smallest));
            }
        }
        RealMatrix::block_diag(&s_a, &s_b)?;
        Ok(Self {
            s_a,
            s_b,
            lambda_scale: None,
            mu_scale: None,
        })
    }

    pub fn identity(n_a: usize, n_b: usize) -> Result<Self> {
        Self::from_blocks(
            RealMatrix::identity(2 * n_a)?,
            RealMatrix::identity(2 * n_b)?,
        )
    }

    pub fn s_a(&self) -> &RealMatrix {
        &self.s_a
    }

    pub fn s_b(&self) -> &RealMatrix {
        &self.s_b
    }

    pub fn n_a(&self) -> usize {
        self.s_a.dim() / 2
    }

    pub fn n_b(&self) -> usize {
        self.s_b.dim() / 2
    }

    pub fn dim(&self) -> usize {
        self.s_a.dim() + self.s_b.dim()
    }

    pub fn lambda_scale(&self) -> Option<f64> {
        self.lambda_scale
    }

    pub fn mu_scale(&self) -> Option<f64> {
        self.mu_scale
    }

    /// `Diag[S^A, S^B]`.
    pub fn matrix(&self) -> RealMatrix {
        RealMatrix::block_diag(&self.s_a, &self.s_b).expect("blocks fit within the size cap")
    }

    /// Blockwise inverse `Diag[(S^A)⁻¹, (S^B)⁻¹]`.
    pub fn inverse(&self) -> Result<Self> {
        let inv = |m: &RealMatrix| {
            m.try_inverse()
                .ok_or(Error::SingularMap(m.smallest_singular_value()))
        };
        Self::from_blocks(inv(&self.s_a)?, inv(&self.s_b)?)
    }

    /// Re-validates a deserialized map.
    pub fn revalidated(self) -> Result<Self> {
        let lambda_scale = self.lambda_scale;
        let mu_scale = self.mu_scale;
        let mut map = Self::from_blocks(self.s_a, self.s_b)?;
        map.lambda_scale = lambda_scale;
        map.mu_scale = mu_scale;
        Ok(map)
    }
}

/// The two-mode planar Darboux block for gauge `λ`.
///
/// With `μ = (1 + √(1 - θη)) / (2λ)`:
///
/// ```text
/// [  λ      0      0     -θ/2λ ]
/// [  0      λ      θ/2λ   0    ]
/// [  0      η/2μ   μ      0    ]
/// [ -η/2μ   0      0      μ    ]
/// ```
///
/// The `(4,1)` entry carries a minus sign: the lower-left block must be
/// antisymmetric for the momentum part of `S J Sᵀ` to equal `ηε`.
pub fn planar_darboux_block(params: &NCParams, lambda: f64) -> Result<RealMatrix> {
    if !(lambda.is_finite() && lambda > 0.0) {
        return Err(Error::InvalidScale(lambda));
    }
    let mu = params.darboux_scale_product() / lambda;
    let (t, e) = (params.theta, params.eta);
    let a = t / (2.0 * lambda);
    let c = e / (2.0 * mu);
    #[rustfmt::skip]
    let entries = vec![
        lambda, 0.0, 0.0, -a,
        0.0, lambda, a, 0.0,
        0.0, c, mu, 0.0,
        -c, 0.0, 0.0, mu,
    ];
    RealMatrix::from_row_major(4, entries)
}

/// Planar Darboux map with identical blocks for both parties.
pub fn build_darboux_map(params: &NCParams, lambda: f64) -> Result<DarbouxMap> {
    let block = planar_darboux_block(params, lambda)?;
    let mut map = DarbouxMap::from_blocks(block.clone(), block)?;
    map.lambda_scale = Some(lambda);
    map.mu_scale = Some(params.darboux_scale_product() / lambda);
    let target = CompositeForm::planar(params)?;
    if !validate_darboux(&map, &target)? {
        return Err(Error::DarbouxConstraint);
    }
    Ok(map)
}

/// Checks block-diagonality, invertibility and `S J Sᵀ = Ω` per entry.
pub fn validate_darboux(map: &DarbouxMap, target: &CompositeForm) -> Result<bool> {
    if map.n_a() != target.n_a() {
        return Err(Error::DimensionMismatch {
            expected: 2 * target.n_a(),
            found: map.s_a.dim(),
        });
    }
    if map.n_b() != target.n_b() {
        return Err(Error::DimensionMismatch {
            expected: 2 * target.n_b(),
            found: map.s_b.dim(),
        });
    }
    let s = map.matrix();
    let split = map.s_a.dim();
    let dim = s.dim();
    for i in 0..dim {
        for j in 0..dim {
            if (i < split) != (j < split) && s.get(i, j) != 0.0 {
                return Ok(false);
            }
        }
    }
    if !(s.smallest_singular_value() > Tolerances::DEFAULT.singular) {
        return Ok(false);
    }
    let j = RealMatrix::block_diag(
        standard_symplectic_form(map.n_a())?.matrix(),
        standard_symplectic_form(map.n_b())?.matrix(),
    )?;
    let image = s.congruence(&j)?;
    Ok(image.max_abs_diff(target.form().matrix()) <= Tolerances::DEFAULT.map_identity)
}

/// `Σ = S Σ̃ Sᵀ`.
pub fn transform_covariance(
    map: &DarbouxMap,
    sigma_tilde: &CovarianceMatrix,
) -> Result<CovarianceMatrix> {
    if map.dim() != sigma_tilde.dim() {
        return Err(Error::DimensionMismatch {
            expected: map.dim(),
            found: sigma_tilde.dim(),
        });
    }
    CovarianceMatrix::from_product(map.matrix().congruence(sigma_tilde.matrix())?)
}
