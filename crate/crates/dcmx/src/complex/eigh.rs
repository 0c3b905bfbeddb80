//! Hermitian eigendecomposition by cyclic complex Jacobi rotations.
//!
//! Deterministic by design: rotations are applied in a fixed row-cyclic
//! order with a threshold skip, so the same input always takes the same
//! floating-point path. Accuracy is the usual Jacobi story — eigenvalues
//! to a small multiple of machine epsilon times the norm, eigenvectors
//! orthonormal to roughly machine precision.

use super::cmatrix::CMatrix;
use num_complex::Complex64;

/// Off-diagonal mass must drop below `CONVERGENCE_FACTOR · ‖A‖_F`.
const CONVERGENCE_FACTOR: f64 = 1e-13;
const MAX_SWEEPS: usize = 64;

/// Eigendecomposition `A = S · diag(values) · S*` of a Hermitian matrix.
///
/// `values` are sorted in descending order; column `j` of `vectors` is the
/// eigenvector for `values[j]`.
#[derive(Debug, Clone)]
pub struct HermitianEigen {
    pub values: Vec<f64>,
    pub vectors: CMatrix,
}

fn off_diag_norm(m: &CMatrix) -> f64 {
    let n = m.rows();
    let mut acc = 0.0;
    for i in 0..n {
        for j in 0..n {
            if i != j {
                acc += m.get(i, j).norm_sqr();
            }
        }
    }
    acc.sqrt()
}

/// One Jacobi rotation annihilating the `(p, q)` entry (`p < q`).
///
/// The rotation is `K = diag-embedded [[c, s], [−s·e^{−iφ}, c·e^{−iφ}]]`
/// with `φ = arg(a_pq)`; the update is `A ← K* A K`, `S ← S K`.
fn rotate(a: &mut CMatrix, s: &mut CMatrix, p: usize, q: usize, threshold: f64) {
    let n = a.rows();
    let alpha = a.get(p, q);
    let mag = alpha.norm();
    if mag <= threshold {
        return;
    }
    let app = a.get(p, p).re;
    let aqq = a.get(q, q).re;
    let tau = (aqq - app) / (2.0 * mag);
    let t = if tau >= 0.0 {
        1.0 / (tau + (1.0 + tau * tau).sqrt())
    } else {
        -1.0 / (-tau + (1.0 + tau * tau).sqrt())
    };
    let c = 1.0 / (1.0 + t * t).sqrt();
    let sn = t * c;
    let phase = alpha / mag; // e^{iφ}
    let phase_c = phase.conj();

    // Rows p and q: left-multiplication by K*.
    {
        let cols = a.cols();
        let data = a.data_mut();
        let (lo, hi) = data.split_at_mut(q * cols);
        let row_p = &mut lo[p * cols..p * cols + cols];
        let row_q = &mut hi[..cols];
        for (xp, xq) in row_p.iter_mut().zip(row_q.iter_mut()) {
            let (hp, hq) = (*xp, *xq);
            *xp = hp * c - hq * (phase * sn);
            *xq = hp * sn + hq * (phase * c);
        }
    }
    // Columns p and q: right-multiplication by K.
    for row in a.data_mut().chunks_exact_mut(n) {
        let (hp, hq) = (row[p], row[q]);
        row[p] = hp * c - hq * (phase_c * sn);
        row[q] = hp * sn + hq * (phase_c * c);
    }
    // The 2x2 pivot block is known in closed form; writing it directly
    // keeps the matrix exactly Hermitian with a real diagonal.
    let zero = Complex64::new(0.0, 0.0);
    a.set(p, q, zero);
    a.set(q, p, zero);
    a.set(p, p, Complex64::new(app - t * mag, 0.0));
    a.set(q, q, Complex64::new(aqq + t * mag, 0.0));

    // Accumulate the eigenvector basis.
    for row in s.data_mut().chunks_exact_mut(n) {
        let (sp, sq) = (row[p], row[q]);
        row[p] = sp * c - sq * (phase_c * sn);
        row[q] = sp * sn + sq * (phase_c * c);
    }
}

/// Eigendecomposition of a Hermitian matrix (the strict lower triangle and
/// imaginary diagonal are trusted to mirror the upper triangle; callers
/// symmetrize first if needed).
pub fn hermitian_eigen(a: &CMatrix) -> HermitianEigen {
    assert_eq!(a.rows(), a.cols(), "hermitian_eigen needs a square matrix");
    let n = a.rows();
    let mut m = a.clone();
    let mut s = CMatrix::identity(n);
    let scale = a.fro_norm();
    if n > 1 && scale > 0.0 {
        let target = CONVERGENCE_FACTOR * scale;
        // Skipping entries below target/n cannot leave more than `target`
        // of off-diagonal mass behind, so the skip threshold and the stop
        // criterion agree.
        let threshold = target / n as f64;
        for _ in 0..MAX_SWEEPS {
            if off_diag_norm(&m) <= target {
                break;
            }
            for p in 0..n - 1 {
                for q in p + 1..n {
                    rotate(&mut m, &mut s, p, q, threshold);
                }
            }
        }
        debug_assert!(
            off_diag_norm(&m) <= target * 10.0,
            "Jacobi sweep limit reached before convergence"
        );
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| m.get(j, j).re.partial_cmp(&m.get(i, i).re).unwrap());
    let values: Vec<f64> = order.iter().map(|&i| m.get(i, i).re).collect();
    let mut vectors = CMatrix::zeros(n, n);
    for (dst, &src) in order.iter().enumerate() {
        vectors.set_col(dst, &s.col(src));
    }
    HermitianEigen { values, vectors }
}

/// Scales each column so that its largest-modulus entry is real and
/// positive (ties broken at the lowest row index). Fixes the arbitrary
/// per-column phase so repeated runs and both parallel modes agree on the
/// exact output.
pub fn normalize_column_phases(m: &mut CMatrix) {
    let (rows, cols) = (m.rows(), m.cols());
    for j in 0..cols {
        let mut best = 0usize;
        let mut best_mag = 0.0f64;
        for i in 0..rows {
            let mag = m.get(i, j).norm();
            if mag > best_mag {
                best_mag = mag;
                best = i;
            }
        }
        if best_mag > 0.0 {
            let pivot = m.get(best, j);
            let phase = pivot / pivot.norm();
            let fix = phase.conj();
            for i in 0..rows {
                let v = m.get(i, j) * fix;
                m.set(i, j, v);
            }
            // Clean the pivot entry's imaginary dust.
            let p = m.get(best, j);
            m.set(best, j, Complex64::new(p.norm(), 0.0));
        }
    }
}
