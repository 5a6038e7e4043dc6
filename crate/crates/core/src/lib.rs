//! Uncertainty-relation and PPT separability tests for Gaussian states on a
//! noncommutative phase space.
//!
//! Positions and momenta of each party obey `[z_i, z_j] = i Ω_ij` with
//! `Ω^K = [[Θ, I], [-I, Υ]]`. A covariance matrix `Σ` describes a quantum
//! state iff `Σ + (i/2) Ω ≥ 0`, equivalently iff its smallest symplectic
//! invariant relative to `Ω` is at least one. Partial transposition acts
//! through `Ω′ = Diag[Ω^A, -Ω^B]`, giving the separability test.
//!
//! Modules:
//! - [`symplectic`]: spectra and pencil positivity
//! - [`phase_space`]: forms, Darboux maps, covariance transport
//! - [`separability`]: mirror reflection, partial transpose, classification
//! - [`gaussian`]: the 8-dimensional two-party Gaussian family
//! - [`scan`]: parameter sweeps and tabular output

// NaN must fail these checks, so `!(x > tol)` is intended.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod error;
pub mod gaussian;
pub mod matrix;
pub mod phase_space;
pub mod scan;
pub mod separability;
pub mod symplectic;
pub mod tolerance;

pub use error::{Error, Result};
pub use gaussian::{
    build_covariance, closed_form_invariants, evaluate_wigner, omega_pm, spectral_invariants,
    ClosedFormInvariants, FamilyParams, GaussianState,
};
pub use matrix::{CovarianceMatrix, RealMatrix, SkewForm};
pub use phase_space::{
    build_darboux_map, build_planar_form, build_subsystem_form, transform_covariance,
    validate_darboux, CompositeForm, DarbouxMap, NCParams, SubsystemForm,
};
pub use separability::{
    check_separable, classify, classify_planar, mirror_reflection, partial_transpose_covariance,
    partial_transpose_map, primed_form, ClassificationResult, MirrorReflection,
    PartialTransposeMap, SeparabilityCheck, Verdict,
};
pub use symplectic::{
    hermitian_min_eigenvalue, nc_williamson_spectrum, rsup_holds, standard_symplectic_form,
    uncertainty_pencil, SymplecticSpectrum,
};
pub use tolerance::Tolerances;
