#![allow(dead_code)]

use nalgebra::DMatrix;
use ncps_core::{CovarianceMatrix, RealMatrix, SkewForm};
use rand::Rng;

/// Positive halves of the eigenvalues of `2i Ω⁻¹ Σ`, from a general
/// (non-symmetric) eigensolver applied to the real matrix `Ω⁻¹ Σ`.
/// Also returns the largest |Re| among the eigenvalues of `Ω⁻¹ Σ`, which
/// should vanish.
pub fn oracle_spectrum(sigma: &DMatrix<f64>, omega: &DMatrix<f64>) -> (Vec<f64>, f64) {
    let a = omega.clone().try_inverse().expect("nonsingular form") * sigma;
    let eig = a.complex_eigenvalues();
    // 2i (x + iy) = -2y + 2ix.
    let mut values: Vec<f64> = eig.iter().map(|z| -2.0 * z.im).collect();
    let max_imag = eig.iter().map(|z| (2.0 * z.re).abs()).fold(0.0, f64::max);
    values.sort_by(f64::total_cmp);
    let n = values.len() / 2;
    let negatives: Vec<f64> = values[..n].iter().rev().map(|x| -x).collect();
    let positives = values[n..].to_vec();
    for (p, q) in positives.iter().zip(&negatives) {
        assert!(
            (p - q).abs() <= 1e-8 * p.abs().max(1.0),
            "spectrum not symmetric: {values:?}"
        );
    }
    (positives, max_imag)
}

pub fn rel(a: f64, b: f64) -> f64 {
    (a - b).abs() / a.abs().max(b.abs()).max(f64::MIN_POSITIVE)
}

pub fn max_rel(a: &[f64], b: &[f64]) -> f64 {
    assert_eq!(a.len(), b.len());
    a.iter()
        .zip(b)
        .map(|(x, y)| rel(*x, *y))
        .fold(0.0, f64::max)
}

pub fn random_matrix<R: Rng>(rng: &mut R, dim: usize, spread: f64) -> DMatrix<f64> {
    DMatrix::from_fn(dim, dim, |_, _| rng.random_range(-spread..spread))
}

/// `A Aᵀ + floor·I` with random `A`.
pub fn random_covariance<R: Rng>(rng: &mut R, dim: usize, floor: f64) -> CovarianceMatrix {
    let a = random_matrix(rng, dim, 1.0);
    let m = &a * a.transpose() + DMatrix::identity(dim, dim) * floor;
    let m = (&m + m.transpose()) * 0.5;
    CovarianceMatrix::new(RealMatrix::from_dmatrix(m).unwrap()).unwrap()
}

/// Standard `J` of size `2n`, as a plain matrix.
pub fn j_matrix(n: usize) -> DMatrix<f64> {
    let mut j = DMatrix::zeros(2 * n, 2 * n);
    for k in 0..n {
        j[(k, n + k)] = 1.0;
        j[(n + k, k)] = -1.0;
    }
    j
}

pub fn condition_number(m: &DMatrix<f64>) -> f64 {
    let sv = m.clone().singular_values();
    sv.max() / sv.min()
}

/// A random nonsingular skew form `S J Sᵀ`, together with `S`, with
/// `cond(S) ≤ 10`.
pub fn random_skew_form<R: Rng>(rng: &mut R, n: usize) -> (SkewForm, DMatrix<f64>) {
    loop {
        let s = random_matrix(rng, 2 * n, 0.4) + DMatrix::identity(2 * n, 2 * n);
        if condition_number(&s) > 10.0 {
            continue;
        }
        let o = &s * j_matrix(n) * s.transpose();
        let o = (&o - o.transpose()) * 0.5;
        if let Ok(form) = SkewForm::new(RealMatrix::from_dmatrix(o).unwrap()) {
            return (form, s);
        }
    }
}

/// A random matrix `T` with `T J Tᵀ = J`, built from shears and a
/// block-diagonal `Diag[X, X⁻ᵀ]`, with `cond(T) ≤ 10`.
pub fn random_standard_symplectic<R: Rng>(rng: &mut R, n: usize) -> DMatrix<f64> {
    loop {
        let t = symplectic_candidate(rng, n);
        if condition_number(&t) <= 10.0 {
            return t;
        }
    }
}

fn symplectic_candidate<R: Rng>(rng: &mut R, n: usize) -> DMatrix<f64> {
    let sym = |rng: &mut R| {
        let a = random_matrix(rng, n, 0.5);
        (&a + a.transpose()) * 0.5
    };
    let mut upper = DMatrix::identity(2 * n, 2 * n);
    upper.view_mut((0, n), (n, n)).copy_from(&sym(rng));
    let mut lower = DMatrix::identity(2 * n, 2 * n);
    lower.view_mut((n, 0), (n, n)).copy_from(&sym(rng));
    let x = random_matrix(rng, n, 0.3) + DMatrix::identity(n, n);
    let x_inv_t = x.clone().try_inverse().unwrap().transpose();
    let mut scale = DMatrix::zeros(2 * n, 2 * n);
    scale.view_mut((0, 0), (n, n)).copy_from(&x);
    scale.view_mut((n, n), (n, n)).copy_from(&x_inv_t);
    upper * scale * lower
}

/// Radical-inverse Halton point `index` in `dims` dimensions.
pub fn halton(index: u64, dims: usize) -> Vec<f64> {
    const PRIMES: [u64; 8] = [2, 3, 5, 7, 11, 13, 17, 19];
    (0..dims)
        .map(|d| {
            let base = PRIMES[d];
            let (mut f, mut r, mut i) = (1.0, 0.0, index);
            while i > 0 {
                f /= base as f64;
                r += f * (i % base) as f64;
                i /= base;
            }
            r
        })
        .collect()
}
