//! Symplectic spectra of covariance matrices relative to an arbitrary skew
//! form, and the positivity test of the pencil `Σ + (i/2) Ω`.
//!
//! The invariants of `(Σ, Ω)` are the positive eigenvalues of `2i Ω⁻¹ Σ`.
//! They are obtained from the real skew matrix `K = Σ^{1/2} Ω⁻¹ Σ^{1/2}`,
//! which is similar to `Ω⁻¹ Σ`: the Hermitian matrix `iK` has eigenvalues
//! `±ν/2`, so a Hermitian eigensolver suffices.

use nalgebra::DMatrix;
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matrix::{ensure_same_dim, CovarianceMatrix, RealMatrix, SkewForm};
use crate::tolerance::{at_least_one, Tolerances};

/// Ascending list of symplectic (Williamson) invariants.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SymplecticSpectrum {
    invariants: Vec<f64>,
}

impl SymplecticSpectrum {
    pub fn invariants(&self) -> &[f64] {
        &self.invariants
    }

    /// The smallest invariant, `ν₋`.
    pub fn smallest(&self) -> f64 {
        self.invariants[0]
    }

    pub fn len(&self) -> usize {
        self.invariants.len()
    }

    pub fn is_empty(&self) -> bool {
        self.invariants.is_empty()
    }
}

/// The standard form `J = [[0, I], [-I, 0]]` of size `2n`.
pub fn standard_symplectic_form(n: usize) -> Result<SkewForm> {
    if n == 0 {
        return Err(Error::InvalidDimension(0));
    }
    let mut j = DMatrix::zeros(2 * n, 2 * n);
    for k in 0..n {
        j[(k, n + k)] = 1.0;
        j[(n + k, k)] = -1.0;
    }
    SkewForm::new(RealMatrix::from_dmatrix(j)?)
}

/// Symmetric square root of a covariance matrix.
pub(crate) fn sqrt_covariance(sigma: &CovarianceMatrix) -> DMatrix<f64> {
    let eig = sigma.matrix().as_dmatrix().clone().symmetric_eigen();
    let roots = eig.eigenvalues.map(f64::sqrt);
    &eig.eigenvectors * DMatrix::from_diagonal(&roots) * eig.eigenvectors.transpose()
}

/// Symplectic invariants of `sigma` with respect to `form`.
pub fn nc_williamson_spectrum(
    sigma: &CovarianceMatrix,
    form: &SkewForm,
) -> Result<SymplecticSpectrum> {
    let dim = sigma.dim();
    ensure_same_dim(dim, form.dim())?;

    let form_inv = form
        .matrix()
        .try_inverse()
        .ok_or(Error::SingularForm(form.matrix().smallest_singular_value()))?;
    let root = sqrt_covariance(sigma);
    let k = &root * form_inv.as_dmatrix() * &root;
    let k = (&k - k.transpose()) * 0.5;

    let hermitian = k.map(|x| Complex64::new(0.0, x));
    let mut eig: Vec<f64> = hermitian.symmetric_eigenvalues().iter().copied().collect();
    if eig.iter().any(|x| !x.is_finite()) {
        return Err(Error::Eigen("non-finite eigenvalue in symplectic spectrum"));
    }
    // Eigenvalues pair up as ±ν/2: keep the upper half.
    eig.sort_by(|a, b| b.total_cmp(a));
    let mut invariants: Vec<f64> = eig[..dim / 2].iter().map(|x| 2.0 * x).collect();
    invariants.sort_by(f64::total_cmp);
    if !(invariants[0] > 0.0) {
        return Err(Error::Eigen("non-positive symplectic invariant"));
    }
    Ok(SymplecticSpectrum { invariants })
}

/// The complex Hermitian matrix `Σ + (i/2) Ω`.
pub fn uncertainty_pencil(sigma: &CovarianceMatrix, form: &SkewForm) -> Result<DMatrix<Complex64>> {
    ensure_same_dim(sigma.dim(), form.dim())?;
    let s = sigma.matrix().as_dmatrix();
    let o = form.matrix().as_dmatrix();
    Ok(DMatrix::from_fn(s.nrows(), s.ncols(), |i, j| {
        Complex64::new(s[(i, j)], 0.5 * o[(i, j)])
    }))
}

/// Uncertainty relation `Σ + (i/2) Ω ≥ 0`, decided through `ν₋ ≥ 1`.
pub fn rsup_holds(sigma: &CovarianceMatrix, form: &SkewForm) -> Result<bool> {
    Ok(at_least_one(
        nc_williamson_spectrum(sigma, form)?.smallest(),
    ))
}

/// Smallest eigenvalue of a complex Hermitian matrix.
pub fn hermitian_min_eigenvalue(mat: &DMatrix<Complex64>) -> Result<f64> {
    let n = mat.nrows();
    if n == 0 || n > crate::tolerance::MAX_DIM {
        return Err(Error::InvalidDimension(n));
    }
    ensure_same_dim(n, mat.ncols())?;
    let mut defect = 0.0f64;
    for i in 0..n {
        for j in i..n {
            defect = defect.max((mat[(i, j)] - mat[(j, i)].conj()).norm());
        }
    }
    if !defect.is_finite() {
        return Err(Error::NonFinite);
    }
    if defect > Tolerances::DEFAULT.structure {
        return Err(Error::NotHermitian(defect));
    }
    Ok(mat.clone().symmetric_eigenvalues().min())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cov(diag: &[f64]) -> CovarianceMatrix {
        CovarianceMatrix::new(RealMatrix::from_diagonal(diag).unwrap()).unwrap()
    }

    #[test]
    fn standard_form_layout() {
        let j1 = standard_symplectic_form(1).unwrap();
        assert_eq!(j1.matrix().to_row_major(), vec![0.0, 1.0, -1.0, 0.0]);

        let j2 = standard_symplectic_form(2).unwrap();
        #[rustfmt::skip]
        let expected = vec![
            0.0, 0.0, 1.0, 0.0,
            0.0, 0.0, 0.0, 1.0,
            -1.0, 0.0, 0.0, 0.0,
            0.0, -1.0, 0.0, 0.0,
        ];
        assert_eq!(j2.matrix().to_row_major(), expected);
        assert_eq!(standard_symplectic_form(0), Err(Error::InvalidDimension(0)));
    }

    #[test]
    fn standard_form_squares_to_minus_identity() {
        for n in 1..=8 {
            let j = standard_symplectic_form(n).unwrap();
            let sq = j.matrix().mul(j.matrix()).unwrap();
            let minus_id = RealMatrix::identity(2 * n).unwrap().scale(-1.0).unwrap();
            assert_eq!(sq, minus_id);
        }
    }

    #[test]
    fn vacuum_and_scaled_identity() {
        let j = standard_symplectic_form(1).unwrap();
        let s = nc_williamson_spectrum(&cov(&[0.5, 0.5]), &j).unwrap();
        assert!((s.smallest() - 1.0).abs() < 1e-14);
        let s = nc_williamson_spectrum(&cov(&[1.5, 1.5]), &j).unwrap();
        assert_eq!(s.len(), 1);
        assert!((s.smallest() - 3.0).abs() < 1e-14);
    }

    #[test]
    fn squeezed_single_mode() {
        // diag(a, b) has invariant 2 sqrt(ab).
        let j = standard_symplectic_form(1).unwrap();
        let s = nc_williamson_spectrum(&cov(&[2.0, 0.125]), &j).unwrap();
        assert!((s.smallest() - 1.0).abs() < 1e-14);
    }

    #[test]
    fn spectrum_dimension_mismatch() {
        let j = standard_symplectic_form(2).unwrap();
        assert_eq!(
            nc_williamson_spectrum(&cov(&[1.0, 1.0]), &j),
            Err(Error::DimensionMismatch {
                expected: 2,
                found: 4
            })
        );
    }

    #[test]
    fn rsup_boundary_and_violation() {
        let j = standard_symplectic_form(1).unwrap();
        assert!(rsup_holds(&cov(&[0.5, 0.5]), &j).unwrap());
        assert!(!rsup_holds(&cov(&[0.25, 0.25]), &j).unwrap());
        let s = nc_williamson_spectrum(&cov(&[0.25, 0.25]), &j).unwrap();
        assert!((s.smallest() - 0.5).abs() < 1e-14);
    }

    #[test]
    fn hermitian_min_eigenvalue_examples() {
        let id = DMatrix::<Complex64>::identity(2, 2);
        assert!((hermitian_min_eigenvalue(&id).unwrap() - 1.0).abs() < 1e-15);

        let j = standard_symplectic_form(1).unwrap();
        let pencil = uncertainty_pencil(&cov(&[0.5, 0.5]), &j).unwrap();
        assert!(hermitian_min_eigenvalue(&pencil).unwrap().abs() < 1e-15);
    }

    #[test]
    fn hermitian_min_eigenvalue_rejects_non_hermitian() {
        let mut m = DMatrix::<Complex64>::identity(2, 2);
        m[(0, 1)] = Complex64::new(0.0, 1.0);
        m[(1, 0)] = Complex64::new(0.0, 1.0);
        assert!(matches!(
            hermitian_min_eigenvalue(&m),
            Err(Error::NotHermitian(_))
        ));
        let rect = DMatrix::<Complex64>::zeros(2, 3);
        assert!(hermitian_min_eigenvalue(&rect).is_err());
    }
}
