//! Dense row-major complex matrices.
//!
//! This is the purely complex backbone underneath the dual types: storage,
//! products, adjoints and norms. Shape mismatches here are programming
//! errors and panic; the dual-matrix layer validates shapes first and
//! reports them as typed errors.

use crate::parallel;
use num_complex::Complex64;

pub const C_ZERO: Complex64 = Complex64::new(0.0, 0.0);
pub const C_ONE: Complex64 = Complex64::new(1.0, 0.0);

/// Dense complex matrix, row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct CMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Complex64>,
}

impl CMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        CMatrix {
            rows,
            cols,
            data: vec![C_ZERO; rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = CMatrix::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = C_ONE;
        }
        m
    }

    /// Builds from row-major data; panics if the length does not match.
    pub fn from_vec(rows: usize, cols: usize, data: Vec<Complex64>) -> Self {
        assert_eq!(data.len(), rows * cols, "row-major data length mismatch");
        CMatrix { rows, cols, data }
    }

    pub fn from_fn<F: FnMut(usize, usize) -> Complex64>(rows: usize, cols: usize, mut f: F) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        CMatrix { rows, cols, data }
    }

    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }

    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn data(&self) -> &[Complex64] {
        &self.data
    }

    #[inline]
    pub fn data_mut(&mut self) -> &mut [Complex64] {
        &mut self.data
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> Complex64 {
        debug_assert!(i < self.rows && j < self.cols);
        self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: Complex64) {
        debug_assert!(i < self.rows && j < self.cols);
        self.data[i * self.cols + j] = v;
    }

    #[inline]
    pub fn row(&self, i: usize) -> &[Complex64] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn col(&self, j: usize) -> Vec<Complex64> {
        (0..self.rows).map(|i| self.get(i, j)).collect()
    }

    pub fn set_col(&mut self, j: usize, v: &[Complex64]) {
        assert_eq!(v.len(), self.rows);
        for (i, &x) in v.iter().enumerate() {
            self.set(i, j, x);
        }
    }

    /// Copy of columns `lo..hi`.
    pub fn columns(&self, lo: usize, hi: usize) -> CMatrix {
        assert!(lo <= hi && hi <= self.cols);
        CMatrix::from_fn(self.rows, hi - lo, |i, j| self.get(i, lo + j))
    }

    /// `[self | right]` side by side.
    pub fn hstack(&self, right: &CMatrix) -> CMatrix {
        assert_eq!(self.rows, right.rows, "hstack row mismatch");
        CMatrix::from_fn(self.rows, self.cols + right.cols, |i, j| {
            if j < self.cols {
                self.get(i, j)
            } else {
                right.get(i, j - self.cols)
            }
        })
    }

    /// `[self; below]` stacked vertically.
    pub fn vstack(&self, below: &CMatrix) -> CMatrix {
        assert_eq!(self.cols, below.cols, "vstack column mismatch");
        let mut data = self.data.clone();
        data.extend_from_slice(&below.data);
        CMatrix::from_vec(self.rows + below.rows, self.cols, data)
    }

    /// Matrix product; rows of the result are computed independently (and in
    /// parallel when the `parallel` feature is on).
    pub fn mul(&self, rhs: &CMatrix) -> CMatrix {
        assert_eq!(self.cols, rhs.rows, "matrix product dimension mismatch");
        let (k, n) = (self.cols, rhs.cols);
        let mut out = CMatrix::zeros(self.rows, n);
        if self.rows == 0 || n == 0 || k == 0 {
            return out;
        }
        let lhs = &self.data;
        let rhs_data = &rhs.data;
        parallel::for_each_chunk(&mut out.data, n, |i, out_row| {
            for (t, &a) in lhs[i * k..(i + 1) * k].iter().enumerate() {
                let b_row = &rhs_data[t * n..(t + 1) * n];
                for (o, &b) in out_row.iter_mut().zip(b_row) {
                    *o += a * b;
                }
            }
        });
        out
    }

    /// Matrix–vector product.
    pub fn mul_vec(&self, x: &[Complex64]) -> Vec<Complex64> {
        assert_eq!(self.cols, x.len(), "matrix-vector dimension mismatch");
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(x)
                    .map(|(&a, &b)| a * b)
                    .fold(C_ZERO, |acc, t| acc + t)
            })
            .collect()
    }

    pub fn add(&self, rhs: &CMatrix) -> CMatrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        let data = self
            .data
            .iter()
            .zip(&rhs.data)
            .map(|(&a, &b)| a + b)
            .collect();
        CMatrix::from_vec(self.rows, self.cols, data)
    }

    pub fn sub(&self, rhs: &CMatrix) -> CMatrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        let data = self
            .data
            .iter()
            .zip(&rhs.data)
            .map(|(&a, &b)| a - b)
            .collect();
        CMatrix::from_vec(self.rows, self.cols, data)
    }

    pub fn neg(&self) -> CMatrix {
        CMatrix::from_vec(self.rows, self.cols, self.data.iter().map(|&a| -a).collect())
    }

    pub fn scale(&self, s: Complex64) -> CMatrix {
        CMatrix::from_vec(self.rows, self.cols, self.data.iter().map(|&a| a * s).collect())
    }

    /// Scales column `j` by `factors[j]` in place.
    pub fn scale_cols(&mut self, factors: &[Complex64]) {
        assert_eq!(factors.len(), self.cols);
        for row in self.data.chunks_exact_mut(self.cols) {
            for (x, &f) in row.iter_mut().zip(factors) {
                *x *= f;
            }
        }
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> CMatrix {
        CMatrix::from_fn(self.cols, self.rows, |i, j| self.get(j, i).conj())
    }

    pub fn transpose(&self) -> CMatrix {
        CMatrix::from_fn(self.cols, self.rows, |i, j| self.get(j, i))
    }

    pub fn conj(&self) -> CMatrix {
        CMatrix::from_vec(
            self.rows,
            self.cols,
            self.data.iter().map(|a| a.conj()).collect(),
        )
    }

    /// Frobenius norm.
    pub fn fro_norm(&self) -> f64 {
        // Fold from +0.0 so empty matrices report +0, not the -0.0 that
        // `Sum`'s identity element produces.
        self.data
            .iter()
            .map(|a| a.norm_sqr())
            .fold(0.0f64, |acc, x| acc + x)
            .sqrt()
    }

    /// Largest entry modulus.
    pub fn max_abs(&self) -> f64 {
        self.data.iter().map(|a| a.norm()).fold(0.0, f64::max)
    }

    pub fn is_finite(&self) -> bool {
        self.data.iter().all(|a| a.re.is_finite() && a.im.is_finite())
    }
}

/// Conjugated inner product `⟨a, b⟩ = a* b` of complex slices.
pub fn cdot(a: &[Complex64], b: &[Complex64]) -> Complex64 {
    debug_assert_eq!(a.len(), b.len());
    a.iter()
        .zip(b)
        .map(|(&x, &y)| x.conj() * y)
        .fold(C_ZERO, |acc, t| acc + t)
}

/// Euclidean norm of a complex slice.
pub fn cnorm(a: &[Complex64]) -> f64 {
    a.iter()
        .map(|x| x.norm_sqr())
        .fold(0.0f64, |acc, x| acc + x)
        .sqrt()
}
