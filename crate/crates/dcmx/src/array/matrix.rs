//! Dual complex matrices.

use super::{dual_norm, DCVector};
use crate::complex::cmatrix::CMatrix;
use crate::error::{Error, Result};
use crate::scalar::{DualComplex, DualNumber};
use num_complex::Complex64;

/// A dual complex matrix `A = A_std + A_inf·ε`.
///
/// The parts always share one shape. The product rule is inherited from
/// `ε² = 0`: `(AB)_std = A_std B_std` and
/// `(AB)_inf = A_std B_inf + A_inf B_std`.
#[derive(Debug, Clone, PartialEq)]
pub struct DCMatrix {
    std: CMatrix,
    inf: CMatrix,
}

impl DCMatrix {
    /// Builds from the two parts; shapes must agree and every component
    /// must be finite.
    pub fn from_parts(std: CMatrix, inf: CMatrix) -> Result<Self> {
        if std.rows() != inf.rows() || std.cols() != inf.cols() {
            return Err(Error::Shape {
                context: "dual matrix parts",
                lhs_rows: std.rows(),
                lhs_cols: std.cols(),
                rhs_rows: inf.rows(),
                rhs_cols: inf.cols(),
            });
        }
        if !std.is_finite() || !inf.is_finite() {
            return Err(Error::NonFinite("dual matrix"));
        }
        Ok(DCMatrix { std, inf })
    }

    pub(crate) fn raw(std: CMatrix, inf: CMatrix) -> Self {
        debug_assert_eq!((std.rows(), std.cols()), (inf.rows(), inf.cols()));
        DCMatrix { std, inf }
    }

    /// A purely standard matrix (zero infinitesimal part).
    pub fn from_std(std: CMatrix) -> Result<Self> {
        let inf = CMatrix::zeros(std.rows(), std.cols());
        Self::from_parts(std, inf)
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        DCMatrix {
            std: CMatrix::zeros(rows, cols),
            inf: CMatrix::zeros(rows, cols),
        }
    }

    pub fn identity(n: usize) -> Self {
        DCMatrix {
            std: CMatrix::identity(n),
            inf: CMatrix::zeros(n, n),
        }
    }

    pub fn from_fn<F: FnMut(usize, usize) -> DualComplex>(rows: usize, cols: usize, mut f: F) -> Self {
        let mut std = CMatrix::zeros(rows, cols);
        let mut inf = CMatrix::zeros(rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                let q = f(i, j);
                std.set(i, j, q.std());
                inf.set(i, j, q.inf());
            }
        }
        DCMatrix { std, inf }
    }

    #[inline]
    pub fn rows(&self) -> usize {
        self.std.rows()
    }

    #[inline]
    pub fn cols(&self) -> usize {
        self.std.cols()
    }

    #[inline]
    pub fn shape(&self) -> (usize, usize) {
        (self.rows(), self.cols())
    }

    #[inline]
    pub fn std(&self) -> &CMatrix {
        &self.std
    }

    #[inline]
    pub fn inf(&self) -> &CMatrix {
        &self.inf
    }

    pub fn into_parts(self) -> (CMatrix, CMatrix) {
        (self.std, self.inf)
    }

    /// Entry `(i, j)` as a dual complex scalar; panics out of range.
    pub fn at(&self, i: usize, j: usize) -> DualComplex {
        DualComplex::raw(self.std.get(i, j), self.inf.get(i, j))
    }

    pub fn set(&mut self, i: usize, j: usize, q: DualComplex) -> Result<()> {
        if i >= self.rows() || j >= self.cols() {
            return Err(Error::Index {
                context: "dual matrix set",
                index: i.max(j),
                limit: self.rows().max(self.cols()),
            });
        }
        self.std.set(i, j, q.std());
        self.inf.set(i, j, q.inf());
        Ok(())
    }

    fn check_same_shape(&self, rhs: &Self, context: &'static str) -> Result<()> {
        if self.shape() != rhs.shape() {
            return Err(Error::Shape {
                context,
                lhs_rows: self.rows(),
                lhs_cols: self.cols(),
                rhs_rows: rhs.rows(),
                rhs_cols: rhs.cols(),
            });
        }
        Ok(())
    }

    pub fn add(&self, rhs: &Self) -> Result<Self> {
        self.check_same_shape(rhs, "matrix sum")?;
        Ok(DCMatrix::raw(self.std.add(&rhs.std), self.inf.add(&rhs.inf)))
    }

    pub fn sub(&self, rhs: &Self) -> Result<Self> {
        self.check_same_shape(rhs, "matrix difference")?;
        Ok(DCMatrix::raw(self.std.sub(&rhs.std), self.inf.sub(&rhs.inf)))
    }

    pub fn neg(&self) -> Self {
        DCMatrix::raw(self.std.neg(), self.inf.neg())
    }

    /// Scaling by a dual complex scalar.
    pub fn scale(&self, q: DualComplex) -> Self {
        let std = self.std.scale(q.std());
        let inf = self.std.scale(q.inf()).add(&self.inf.scale(q.std()));
        DCMatrix::raw(std, inf)
    }

    /// Matrix product in dual arithmetic.
    pub fn mat_mul(&self, rhs: &Self) -> Result<Self> {
        if self.cols() != rhs.rows() {
            return Err(Error::Shape {
                context: "matrix product",
                lhs_rows: self.rows(),
                lhs_cols: self.cols(),
                rhs_rows: rhs.rows(),
                rhs_cols: rhs.cols(),
            });
        }
        let std = self.std.mul(&rhs.std);
        let inf = self.std.mul(&rhs.inf).add(&self.inf.mul(&rhs.std));
        Ok(DCMatrix::raw(std, inf))
    }

    /// Product with a purely complex matrix on the right.
    pub(crate) fn mul_complex(&self, rhs: &CMatrix) -> Self {
        DCMatrix::raw(self.std.mul(rhs), self.inf.mul(rhs))
    }

    /// Matrix–vector product in dual arithmetic.
    pub fn mul_vec(&self, x: &DCVector) -> Result<DCVector> {
        if self.cols() != x.len() {
            return Err(Error::Shape {
                context: "matrix-vector product",
                lhs_rows: self.rows(),
                lhs_cols: self.cols(),
                rhs_rows: x.len(),
                rhs_cols: 1,
            });
        }
        let std = self.std.mul_vec(x.std());
        let infl = self.std.mul_vec(x.inf());
        let inf2 = self.inf.mul_vec(x.std());
        let inf: Vec<Complex64> = infl.iter().zip(&inf2).map(|(&a, &b)| a + b).collect();
        Ok(DCVector::raw(std, inf))
    }

    /// Conjugate transpose `A* = conj(A)ᵀ`, applied to both parts.
    pub fn adjoint(&self) -> Self {
        DCMatrix::raw(self.std.adjoint(), self.inf.adjoint())
    }

    pub fn transpose(&self) -> Self {
        DCMatrix::raw(self.std.transpose(), self.inf.transpose())
    }

    pub fn conj(&self) -> Self {
        DCMatrix::raw(self.std.conj(), self.inf.conj())
    }

    /// Dual Frobenius norm; `(0, ‖A_inf‖_F)` for purely infinitesimal `A`.
    pub fn fro_norm(&self) -> DualNumber {
        dual_norm(self.std.data(), self.inf.data())
    }

    pub fn is_zero(&self) -> bool {
        self.std.fro_norm() == 0.0 && self.inf.fro_norm() == 0.0
    }

    /// Hermitian deviation `‖A − A*‖_F` of the two parts.
    pub fn hermitian_deviation(&self) -> (f64, f64) {
        let a = self.adjoint();
        (
            self.std.sub(&a.std).fro_norm(),
            self.inf.sub(&a.inf).fro_norm(),
        )
    }

    /// True when `‖A − A*‖_F ≤ tol` holds for both parts.
    pub fn is_hermitian(&self, tol: f64) -> bool {
        if self.rows() != self.cols() {
            return false;
        }
        let (ds, di) = self.hermitian_deviation();
        ds <= tol && di <= tol
    }

    /// `(A + A*)/2` — the Hermitian part.
    pub fn symmetrized(&self) -> Self {
        let a = self.adjoint();
        let half = Complex64::new(0.5, 0.0);
        DCMatrix::raw(
            self.std.add(&a.std).scale(half),
            self.inf.add(&a.inf).scale(half),
        )
    }

    /// Column `j` as a dual vector.
    pub fn col(&self, j: usize) -> DCVector {
        DCVector::raw(self.std.col(j), self.inf.col(j))
    }

    /// Copy of columns `lo..hi`.
    pub fn columns(&self, lo: usize, hi: usize) -> Self {
        DCMatrix::raw(self.std.columns(lo, hi), self.inf.columns(lo, hi))
    }

    /// `[self | right]` side by side.
    pub fn hstack(&self, right: &Self) -> Result<Self> {
        if self.rows() != right.rows() {
            return Err(Error::Shape {
                context: "hstack",
                lhs_rows: self.rows(),
                lhs_cols: self.cols(),
                rhs_rows: right.rows(),
                rhs_cols: right.cols(),
            });
        }
        Ok(DCMatrix::raw(
            self.std.hstack(&right.std),
            self.inf.hstack(&right.inf),
        ))
    }

    /// `[self; below]` stacked vertically.
    pub fn vstack(&self, below: &Self) -> Result<Self> {
        if self.cols() != below.cols() {
            return Err(Error::Shape {
                context: "vstack",
                lhs_rows: self.rows(),
                lhs_cols: self.cols(),
                rhs_rows: below.rows(),
                rhs_cols: below.cols(),
            });
        }
        Ok(DCMatrix::raw(
            self.std.vstack(&below.std),
            self.inf.vstack(&below.inf),
        ))
    }

    /// Scales column `j` by the dual number `factors[j]` in place.
    pub(crate) fn scale_cols_dual(&mut self, factors: &[DualNumber]) {
        assert_eq!(factors.len(), self.cols());
        for i in 0..self.rows() {
            for (j, f) in factors.iter().enumerate() {
                let s = self.std.get(i, j);
                let x = self.inf.get(i, j);
                self.std.set(i, j, s * f.std());
                self.inf.set(i, j, s * f.inf() + x * f.std());
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::cmatrix::C_ZERO;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn from_parts_validates_shapes_and_values() {
        assert!(DCMatrix::from_parts(CMatrix::zeros(2, 2), CMatrix::zeros(2, 3)).is_err());
        let mut bad = CMatrix::zeros(1, 1);
        bad.set(0, 0, c(f64::NAN, 0.0));
        assert!(DCMatrix::from_parts(bad, CMatrix::zeros(1, 1)).is_err());
    }

    #[test]
    fn product_rule_keeps_epsilon_square_out() {
        // A = I + Jε, B = K + 0ε ⇒ AB = K + (JK)ε.
        let j = CMatrix::from_fn(2, 2, |i, k| c((i * 2 + k) as f64, 1.0));
        let km = CMatrix::from_fn(2, 2, |i, k| c(1.0 + i as f64, -(k as f64)));
        let a = DCMatrix::from_parts(CMatrix::identity(2), j.clone()).unwrap();
        let b = DCMatrix::from_std(km.clone()).unwrap();
        let p = a.mat_mul(&b).unwrap();
        assert_eq!(p.std(), &km);
        assert_eq!(p.inf(), &j.mul(&km));
    }

    #[test]
    fn product_shape_mismatch_is_reported() {
        let a = DCMatrix::zeros(2, 3);
        let b = DCMatrix::zeros(2, 3);
        assert!(matches!(a.mat_mul(&b), Err(Error::Shape { .. })));
    }

    #[test]
    fn fro_norm_branches() {
        let mut a = DCMatrix::zeros(2, 2);
        a.set(0, 0, DualComplex::from_components(3.0, 0.0, 1.0, 0.0).unwrap()).unwrap();
        a.set(1, 1, DualComplex::from_components(0.0, 4.0, 0.0, 0.0).unwrap()).unwrap();
        let n = a.fro_norm();
        assert_eq!(n.std(), 5.0);
        assert!((n.inf() - 3.0 / 5.0).abs() < 1e-15);

        let inf_only = DCMatrix::from_parts(
            CMatrix::zeros(1, 2),
            CMatrix::from_vec(1, 2, vec![c(3.0, 0.0), c(0.0, 4.0)]),
        )
        .unwrap();
        assert_eq!(inf_only.fro_norm(), DualNumber::new(0.0, 5.0).unwrap());
        assert_eq!(DCMatrix::zeros(3, 3).fro_norm(), DualNumber::ZERO);
    }

    #[test]
    fn hermitian_check_and_symmetrization() {
        let mut a = DCMatrix::zeros(2, 2);
        a.set(0, 1, DualComplex::from_components(0.0, 1.0, 0.5, 0.0).unwrap()).unwrap();
        a.set(1, 0, DualComplex::from_components(0.0, -1.0, 0.5, 0.0).unwrap()).unwrap();
        assert!(a.is_hermitian(1e-12));
        let skew = DCMatrix::from_parts(
            CMatrix::from_vec(2, 2, vec![C_ZERO, c(1.0, 0.0), c(-1.0, 0.0), C_ZERO]),
            CMatrix::zeros(2, 2),
        )
        .unwrap();
        assert!(!skew.is_hermitian(1e-12));
        assert!(skew.symmetrized().is_zero());
    }

    #[test]
    fn adjoint_is_an_involution_and_reverses_products() {
        let a = DCMatrix::from_fn(2, 3, |i, j| {
            DualComplex::from_components(i as f64, j as f64, 1.0, -(i as f64)).unwrap()
        });
        let b = DCMatrix::from_fn(3, 2, |i, j| {
            DualComplex::from_components(1.0 - i as f64, 0.5 * j as f64, j as f64, 0.25).unwrap()
        });
        assert_eq!(a.adjoint().adjoint(), a);
        let lhs = a.mat_mul(&b).unwrap().adjoint();
        let rhs = b.adjoint().mat_mul(&a.adjoint()).unwrap();
        let d = lhs.sub(&rhs).unwrap().fro_norm();
        assert!(d.std() < 1e-13 && d.inf().abs() < 1e-13);
    }
}
