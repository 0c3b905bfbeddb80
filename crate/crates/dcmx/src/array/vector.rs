//! Dual complex vectors.

use super::dual_norm;
use crate::complex::cmatrix::C_ZERO;
use crate::error::{Error, Result};
use crate::scalar::{DualComplex, DualNumber};
use num_complex::Complex64;

/// A vector of dual complex numbers, stored as parallel standard and
/// infinitesimal complex arrays.
#[derive(Debug, Clone, PartialEq)]
pub struct DCVector {
    std: Vec<Complex64>,
    inf: Vec<Complex64>,
}

impl DCVector {
    /// Builds from parallel parts; lengths must match and every component
    /// must be finite.
    pub fn new(std: Vec<Complex64>, inf: Vec<Complex64>) -> Result<Self> {
        if std.len() != inf.len() {
            return Err(Error::Shape {
                context: "dual vector parts",
                lhs_rows: std.len(),
                lhs_cols: 1,
                rhs_rows: inf.len(),
                rhs_cols: 1,
            });
        }
        let finite = |v: &[Complex64]| v.iter().all(|z| z.re.is_finite() && z.im.is_finite());
        if !finite(&std) || !finite(&inf) {
            return Err(Error::NonFinite("dual vector"));
        }
        Ok(DCVector { std, inf })
    }

    pub(crate) fn raw(std: Vec<Complex64>, inf: Vec<Complex64>) -> Self {
        debug_assert_eq!(std.len(), inf.len());
        DCVector { std, inf }
    }

    pub fn zeros(n: usize) -> Self {
        DCVector {
            std: vec![C_ZERO; n],
            inf: vec![C_ZERO; n],
        }
    }

    pub fn from_fn<F: FnMut(usize) -> DualComplex>(n: usize, mut f: F) -> Self {
        let mut std = Vec::with_capacity(n);
        let mut inf = Vec::with_capacity(n);
        for i in 0..n {
            let q = f(i);
            std.push(q.std());
            inf.push(q.inf());
        }
        DCVector { std, inf }
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.std.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.std.is_empty()
    }

    #[inline]
    pub fn std(&self) -> &[Complex64] {
        &self.std
    }

    #[inline]
    pub fn inf(&self) -> &[Complex64] {
        &self.inf
    }

    /// Entry `i` as a dual complex scalar; panics out of range.
    pub fn at(&self, i: usize) -> DualComplex {
        DualComplex::raw(self.std[i], self.inf[i])
    }

    pub fn set(&mut self, i: usize, q: DualComplex) -> Result<()> {
        if i >= self.len() {
            return Err(Error::Index {
                context: "dual vector set",
                index: i,
                limit: self.len(),
            });
        }
        self.std[i] = q.std();
        self.inf[i] = q.inf();
        Ok(())
    }

    /// True when any standard component is nonzero (exact comparison).
    pub fn is_appreciable(&self) -> bool {
        self.std.iter().any(|&z| z != C_ZERO)
    }

    /// Tolerance-thresholded appreciability for noisy data: the largest
    /// standard-component modulus must exceed `tol`.
    pub fn is_appreciable_within(&self, tol: f64) -> bool {
        self.std.iter().any(|z| z.norm() > tol)
    }

    pub fn is_zero(&self) -> bool {
        self.std.iter().all(|&z| z == C_ZERO) && self.inf.iter().all(|&z| z == C_ZERO)
    }

    fn check_len(&self, rhs: &Self, context: &'static str) -> Result<()> {
        if self.len() != rhs.len() {
            return Err(Error::Shape {
                context,
                lhs_rows: self.len(),
                lhs_cols: 1,
                rhs_rows: rhs.len(),
                rhs_cols: 1,
            });
        }
        Ok(())
    }

    pub fn add(&self, rhs: &Self) -> Result<Self> {
        self.check_len(rhs, "vector sum")?;
        Ok(DCVector::raw(
            self.std.iter().zip(&rhs.std).map(|(&a, &b)| a + b).collect(),
            self.inf.iter().zip(&rhs.inf).map(|(&a, &b)| a + b).collect(),
        ))
    }

    pub fn sub(&self, rhs: &Self) -> Result<Self> {
        self.check_len(rhs, "vector difference")?;
        Ok(DCVector::raw(
            self.std.iter().zip(&rhs.std).map(|(&a, &b)| a - b).collect(),
            self.inf.iter().zip(&rhs.inf).map(|(&a, &b)| a - b).collect(),
        ))
    }

    pub fn neg(&self) -> Self {
        DCVector::raw(
            self.std.iter().map(|&a| -a).collect(),
            self.inf.iter().map(|&a| -a).collect(),
        )
    }

    /// Componentwise scaling by a dual complex scalar.
    pub fn scale(&self, q: DualComplex) -> Self {
        let (qs, qi) = (q.std(), q.inf());
        DCVector::raw(
            self.std.iter().map(|&a| a * qs).collect(),
            self.std
                .iter()
                .zip(&self.inf)
                .map(|(&s, &i)| s * qi + i * qs)
                .collect(),
        )
    }

    pub fn conj(&self) -> Self {
        DCVector::raw(
            self.std.iter().map(|a| a.conj()).collect(),
            self.inf.iter().map(|a| a.conj()).collect(),
        )
    }

    /// Conjugated inner product `x* y` in dual complex arithmetic.
    pub fn inner(&self, rhs: &Self) -> Result<DualComplex> {
        self.check_len(rhs, "inner product")?;
        let mut std = C_ZERO;
        let mut inf = C_ZERO;
        for k in 0..self.len() {
            std += self.std[k].conj() * rhs.std[k];
            inf += self.std[k].conj() * rhs.inf[k] + self.inf[k].conj() * rhs.std[k];
        }
        Ok(DualComplex::raw(std, inf))
    }

    /// Dual 2-norm; `(0, ‖inf‖)` for purely infinitesimal vectors.
    pub fn norm2(&self) -> DualNumber {
        dual_norm(&self.std, &self.inf)
    }
}
