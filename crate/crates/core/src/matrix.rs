//! Dense real matrices and the two validated phase-space matrix kinds.
//!
//! Every matrix crosses process boundaries in the same JSON shape:
//! `{"dim": 4, "entries": [..16 numbers, row-major..]}`.

use nalgebra::DMatrix;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::tolerance::{Tolerances, MAX_DIM};

/// Square real matrix with finite entries.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "MatrixJson", into = "MatrixJson")]
pub struct RealMatrix(DMatrix<f64>);

#[derive(Serialize, Deserialize)]
struct MatrixJson {
    dim: usize,
    entries: Vec<f64>,
}

impl TryFrom<MatrixJson> for RealMatrix {
    type Error = Error;

    fn try_from(value: MatrixJson) -> Result<Self> {
        RealMatrix::from_row_major(value.dim, value.entries)
    }
}

impl From<RealMatrix> for MatrixJson {
    fn from(value: RealMatrix) -> Self {
        MatrixJson {
            dim: value.dim(),
            entries: value.to_row_major(),
        }
    }
}

impl RealMatrix {
    pub fn from_row_major(dim: usize, entries: Vec<f64>) -> Result<Self> {
        if entries.len() != dim * dim {
            return Err(Error::EntryCount {
                dim,
                found: entries.len(),
            });
        }
        Self::from_dmatrix(DMatrix::from_row_slice(dim, dim, &entries))
    }

    pub fn from_dmatrix(mat: DMatrix<f64>) -> Result<Self> {
        let dim = mat.nrows();
        if dim == 0 || dim > MAX_DIM {
            return Err(Error::InvalidDimension(dim));
        }
        if mat.ncols() != dim {
            return Err(Error::DimensionMismatch {
                expected: dim,
                found: mat.ncols(),
            });
        }
        if mat.iter().any(|x| !x.is_finite()) {
            return Err(Error::NonFinite);
        }
        Ok(Self(mat))
    }

    pub fn identity(dim: usize) -> Result<Self> {
        Self::from_dmatrix(DMatrix::identity(dim, dim))
    }

    pub fn from_diagonal(diag: &[f64]) -> Result<Self> {
        Self::from_dmatrix(DMatrix::from_diagonal(&nalgebra::DVector::from_row_slice(
            diag,
        )))
    }

    /// Block-diagonal matrix `Diag[a, b]`.
    pub fn block_diag(a: &RealMatrix, b: &RealMatrix) -> Result<Self> {
        let (na, nb) = (a.dim(), b.dim());
        let mut out = DMatrix::zeros(na + nb, na + nb);
        out.view_mut((0, 0), (na, na)).copy_from(&a.0);
        out.view_mut((na, na), (nb, nb)).copy_from(&b.0);
        Self::from_dmatrix(out)
    }

    pub fn dim(&self) -> usize {
        self.0.nrows()
    }

    pub fn get(&self, row: usize, col: usize) -> f64 {
        self.0[(row, col)]
    }

    pub fn as_dmatrix(&self) -> &DMatrix<f64> {
        &self.0
    }

    pub fn into_dmatrix(self) -> DMatrix<f64> {
        self.0
    }

    pub fn to_row_major(&self) -> Vec<f64> {
        self.0.transpose().as_slice().to_vec()
    }

    pub fn transpose(&self) -> RealMatrix {
        Self(self.0.transpose())
    }

    pub fn mul(&self, rhs: &RealMatrix) -> Result<RealMatrix> {
        ensure_same_dim(self.dim(), rhs.dim())?;
        Self::from_dmatrix(&self.0 * &rhs.0)
    }

    /// `self * mid * self^T`.
    pub fn congruence(&self, mid: &RealMatrix) -> Result<RealMatrix> {
        ensure_same_dim(self.dim(), mid.dim())?;
        Self::from_dmatrix(&self.0 * &mid.0 * self.0.transpose())
    }

    pub fn try_inverse(&self) -> Option<RealMatrix> {
        self.0.clone().try_inverse().map(Self)
    }

    /// Smallest singular value; the nonsingularity measure used throughout.
    pub fn smallest_singular_value(&self) -> f64 {
        self.0.clone().singular_values().min()
    }

    pub fn determinant(&self) -> f64 {
        self.0.determinant()
    }

    pub fn scale(&self, factor: f64) -> Result<RealMatrix> {
        Self::from_dmatrix(&self.0 * factor)
    }

    /// Largest absolute entrywise difference.
    pub fn max_abs_diff(&self, other: &RealMatrix) -> f64 {
        if self.dim() != other.dim() {
            return f64::INFINITY;
        }
        self.0
            .iter()
            .zip(other.0.iter())
            .fold(0.0, |acc, (a, b)| acc.max((a - b).abs()))
    }

    pub(crate) fn symmetry_defect(&self) -> f64 {
        max_pair_defect(&self.0, |a, b| a - b)
    }

    pub(crate) fn skew_defect(&self) -> f64 {
        let diag = self
            .0
            .diagonal()
            .iter()
            .fold(0.0f64, |acc, x| acc.max(x.abs()));
        diag.max(max_pair_defect(&self.0, |a, b| a + b))
    }

    fn symmetrized(&self) -> RealMatrix {
        Self((&self.0 + self.0.transpose()) * 0.5)
    }
}

fn max_pair_defect(m: &DMatrix<f64>, f: impl Fn(f64, f64) -> f64) -> f64 {
    let n = m.nrows();
    let mut worst = 0.0f64;
    for i in 0..n {
        for j in (i + 1)..n {
            worst = worst.max(f(m[(i, j)], m[(j, i)]).abs());
        }
    }
    worst
}

pub(crate) fn ensure_same_dim(expected: usize, found: usize) -> Result<()> {
    if expected != found {
        return Err(Error::DimensionMismatch { expected, found });
    }
    Ok(())
}

fn ensure_phase_space_dim(dim: usize) -> Result<()> {
    if !dim.is_multiple_of(2) {
        return Err(Error::InvalidDimension(dim));
    }
    Ok(())
}

/// Symmetric positive-definite matrix of even dimension.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "RealMatrix", into = "RealMatrix")]
pub struct CovarianceMatrix(RealMatrix);

impl TryFrom<RealMatrix> for CovarianceMatrix {
    type Error = Error;

    fn try_from(value: RealMatrix) -> Result<Self> {
        CovarianceMatrix::new(value)
    }
}

impl From<CovarianceMatrix> for RealMatrix {
    fn from(value: CovarianceMatrix) -> Self {
        value.0
    }
}

impl CovarianceMatrix {
    pub fn new(mat: RealMatrix) -> Result<Self> {
        ensure_phase_space_dim(mat.dim())?;
        let defect = mat.symmetry_defect();
        if defect > Tolerances::DEFAULT.structure {
            return Err(Error::NotSymmetric(defect));
        }
        // Exact symmetry keeps the eigensolvers honest downstream.
        let mat = mat.symmetrized();
        let min = mat.0.clone().symmetric_eigenvalues().min();
        if !(min > Tolerances::DEFAULT.positive_definite) {
            return Err(Error::NotPositiveDefinite(min));
        }
        Ok(Self(mat))
    }

    /// Validates `mat` after replacing it with its symmetric part; used for
    /// products like `S Σ S^T` whose asymmetry is pure rounding.
    pub(crate) fn from_product(mat: RealMatrix) -> Result<Self> {
        Self::new(mat.symmetrized())
    }

    pub fn dim(&self) -> usize {
        self.0.dim()
    }

    pub fn matrix(&self) -> &RealMatrix {
        &self.0
    }

    pub fn scaled(&self, factor: f64) -> Result<Self> {
        Self::new(self.0.scale(factor)?)
    }
}

/// Real skew-symmetric nonsingular matrix of even dimension.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "RealMatrix", into = "RealMatrix")]
pub struct SkewForm(RealMatrix);

impl TryFrom<RealMatrix> for SkewForm {
    type Error = Error;

    fn try_from(value: RealMatrix) -> Result<Self> {
        SkewForm::new(value)
    }
}

impl From<SkewForm> for RealMatrix {
    fn from(value: SkewForm) -> Self {
        value.0
    }
}

impl SkewForm {
    pub fn new(mat: RealMatrix) -> Result<Self> {
        ensure_phase_space_dim(mat.dim())?;
        let defect = mat.skew_defect();
        if defect > Tolerances::DEFAULT.structure {
            return Err(Error::NotSkewSymmetric(defect));
        }
        let smallest = mat.smallest_singular_value();
        if !(smallest > Tolerances::DEFAULT.singular) {
            return Err(Error::SingularForm(smallest));
        }
        Ok(Self(mat))
    }

    pub fn dim(&self) -> usize {
        self.0.dim()
    }

    pub fn matrix(&self) -> &RealMatrix {
        &self.0
    }
}
