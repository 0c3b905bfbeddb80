//! Dual complex linear algebra.
//!
//! A dual complex number is `q = q_std + q_inf·ε` with complex parts and
//! `ε² = 0`; matrices over these numbers model first-order perturbations
//! riding along with ordinary complex data. This crate provides:
//!
//! * totally ordered dual scalars and dual complex scalars ([`scalar`]),
//! * dual vectors and matrices with dual norms, adjoints and a
//!   deterministic extension of orthonormal columns to a full unitary
//!   ([`array`]),
//! * eigendecomposition of dual Hermitian matrices with eigenvalue
//!   clustering ([`spectral`]),
//! * a full dual SVD with two rank notions, truncation and best low-rank
//!   approximation errors under the dual total order ([`svd`]),
//! * the purely complex kernels underneath ([`complex`]).
//!
//! All solvers are deterministic: fixed sweep orders, fixed tie-breaking,
//! and (with the `parallel` feature) only loops whose work units are
//! independent are parallelized, so results are bit-identical with and
//! without rayon.

pub mod array;
pub mod complex;
pub mod error;
#[doc(hidden)]
pub mod parallel;
pub mod scalar;
pub mod spectral;
pub mod svd;

pub use array::{DCMatrix, DCVector};
pub use error::{Error, Result};
pub use scalar::{DualComplex, DualNumber};
pub use spectral::{
    classify_definiteness, eig_dual_part, eig_residual, hermitian_eig, hermitian_eig_with, Cluster,
    Definiteness, EigOptions, HermEig, SpectralWarning,
};
pub use svd::{
    arank, lowrank_error, rank, svd, svd_with, truncate, truncate_factors, SvdOptions, SvdResult,
};
