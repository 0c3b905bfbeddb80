//! Purely complex numerical kernels.
//!
//! Everything the dual machinery needs from classical numerical linear
//! algebra lives here: dense complex matrices, a cyclic-Jacobi Hermitian
//! eigensolver, a one-sided-Jacobi SVD and a deterministic orthonormal
//! complement. All three solvers follow fixed operation orders, so outputs
//! are reproducible bit for bit.

pub mod cmatrix;
pub mod complement;
pub mod csvd;
pub mod eigh;

pub use cmatrix::CMatrix;
pub use complement::orthonormal_complement;
pub use csvd::{complex_svd, ComplexSvd};
pub use eigh::{hermitian_eigen, HermitianEigen};
