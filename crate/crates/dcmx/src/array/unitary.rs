//! Partial unitarity and deterministic extension to a square unitary.

use super::{DCMatrix, DCVector};
use crate::complex::cmatrix::{cdot, CMatrix};
use crate::complex::complement::orthonormal_complement;
use crate::error::{Error, Result};
use crate::scalar::DualComplex;
use num_complex::Complex64;

impl DCMatrix {
    /// Largest of `‖A*A − I‖_F` over the two parts — the distance from
    /// having orthonormal columns.
    pub fn unitary_deviation(&self) -> (f64, f64) {
        let g = self.adjoint().mat_mul(self).expect("shapes conform");
        let k = self.cols();
        let eye = CMatrix::identity(k);
        (g.std().sub(&eye).fro_norm(), g.inf().fro_norm())
    }

    /// True when the columns are orthonormal in dual arithmetic:
    /// `‖A*A − I‖_F ≤ tol` in both parts. Requires `cols ≤ rows`.
    pub fn is_partially_unitary(&self, tol: f64) -> bool {
        if self.cols() > self.rows() {
            return false;
        }
        let (ds, di) = self.unitary_deviation();
        ds <= tol && di <= tol
    }

    /// True for square matrices with orthonormal columns.
    pub fn is_unitary(&self, tol: f64) -> bool {
        self.rows() == self.cols() && self.is_partially_unitary(tol)
    }

    /// Extends an `n×k` partially unitary matrix to an `n×n` unitary one by
    /// appending `n−k` columns.
    ///
    /// Standard parts of the new columns come from a deterministic greedy
    /// orthonormal complement of the existing standard parts. Each new
    /// column's infinitesimal part is the unique choice orthogonal (in dual
    /// arithmetic) to everything appended so far:
    /// `v_inf = −Σ_j u_std,j · (u_inf,j* v_std)`, followed by a dual
    /// normalization. Columns are appended one at a time so later columns
    /// see the infinitesimal parts of earlier ones.
    pub fn extend_to_unitary(&self, tol: f64) -> Result<DCMatrix> {
        let (n, k) = self.shape();
        if k > n {
            return Err(Error::Shape {
                context: "extend_to_unitary",
                lhs_rows: n,
                lhs_cols: k,
                rhs_rows: n,
                rhs_cols: n,
            });
        }
        let (ds, di) = self.unitary_deviation();
        let deviation = ds.max(di);
        if deviation > tol {
            return Err(Error::NotPartiallyUnitary { deviation, tol });
        }
        if k == n {
            return Ok(self.clone());
        }

        let comp = orthonormal_complement(self.std(), n - k);
        let mut cur = self.clone();
        for idx in 0..n - k {
            let v_std = comp.col(idx);
            // Coefficients c_j = u_inf,j* v_std against all current columns.
            let mut v_inf = vec![Complex64::new(0.0, 0.0); n];
            for j in 0..cur.cols() {
                let coeff = cdot(&cur.inf().col(j), &v_std);
                for (x, &u) in v_inf.iter_mut().zip(&cur.std().col(j)[..]) {
                    *x -= u * coeff;
                }
            }
            let mut v = DCVector::raw(v_std, v_inf);
            let norm = v.norm2();
            // The complement column is unit-length and the infinitesimal
            // correction is orthogonal to it, so this is a benign cleanup.
            v = v.scale(DualComplex::from(norm.recip().expect("unit complement column")));
            let mut col = DCMatrix::zeros(n, 1);
            for i in 0..n {
                col.set(i, 0, v.at(i)).expect("in range");
            }
            cur = cur.hstack(&col).expect("same row count");
        }
        Ok(cur)
    }
}
