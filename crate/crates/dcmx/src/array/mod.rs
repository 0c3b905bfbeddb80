//! Dual complex vectors and matrices.
//!
//! Both types store their standard and infinitesimal parts as separate
//! complex arrays. Norms are dual numbers computed in dual arithmetic; a
//! purely infinitesimal vector or matrix falls back to the infinitesimal
//! branch `(0, ‖inf part‖)`, which is what keeps `‖x‖ = 0 ⇔ x = 0`.

mod matrix;
mod unitary;
mod vector;

pub use matrix::DCMatrix;
pub use vector::DCVector;

use crate::scalar::DualNumber;
use num_complex::Complex64;

/// Two-branch dual 2-norm over paired component slices.
///
/// Appreciable case: `√(Σ|x_st|², Σ 2·Re(conj(x_st)·x_inf))` evaluated as a
/// dual square root. Infinitesimal case: `(0, ‖x_inf‖)`.
pub(crate) fn dual_norm(std: &[Complex64], inf: &[Complex64]) -> DualNumber {
    debug_assert_eq!(std.len(), inf.len());
    let mut sq = 0.0f64;
    let mut cross = 0.0f64;
    for (s, i) in std.iter().zip(inf) {
        sq += s.norm_sqr();
        cross += s.re * i.re + s.im * i.im;
    }
    if sq > 0.0 {
        let r = sq.sqrt();
        DualNumber::raw(r, cross / r)
    } else {
        // Fold from +0.0: the `Sum` identity is -0.0, which an empty slice
        // would otherwise leak through sqrt into the reported norm.
        let r = inf
            .iter()
            .map(|z| z.norm_sqr())
            .fold(0.0f64, |acc, x| acc + x)
            .sqrt();
        DualNumber::raw(0.0, r)
    }
}
