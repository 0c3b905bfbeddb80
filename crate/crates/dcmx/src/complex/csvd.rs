//! Classical complex SVD by one-sided Jacobi.
//!
//! The same deterministic rotation core as the Hermitian eigensolver,
//! applied to implicit 2×2 Gram blocks of column pairs. One-sided Jacobi
//! computes even tiny singular values to high relative accuracy, which
//! matters because downstream code threshold-classifies them.

use super::cmatrix::{cnorm, CMatrix, C_ZERO};
use super::complement::orthonormal_complement;
use super::eigh::normalize_column_phases;

const MAX_SWEEPS: usize = 60;
/// Column pairs with `|⟨u_i,u_j⟩| ≤ ORTHO_TOL·‖u_i‖‖u_j‖` count as orthogonal.
const ORTHO_TOL: f64 = 1e-14;

/// Full SVD `A = U Σ V*` with square unitary factors.
///
/// `sigma` holds the `min(m,n)` singular values in descending order; `Σ` is
/// the rectangular diagonal matrix they induce.
#[derive(Debug, Clone)]
pub struct ComplexSvd {
    pub u: CMatrix,
    pub sigma: Vec<f64>,
    pub v: CMatrix,
}

impl ComplexSvd {
    /// Number of singular values above `tol` — the numerical rank.
    pub fn rank(&self, tol: f64) -> usize {
        self.sigma.iter().filter(|&&s| s > tol).count()
    }
}

/// One-sided Jacobi on a matrix with `rows ≥ cols`.
fn one_sided(a: &CMatrix) -> ComplexSvd {
    let (m, n) = (a.rows(), a.cols());
    debug_assert!(m >= n);
    let mut w = a.clone();
    let mut v = CMatrix::identity(n);

    for _ in 0..MAX_SWEEPS {
        let mut rotated = false;
        for i in 0..n.saturating_sub(1) {
            for j in i + 1..n {
                // 2×2 Gram block of columns i, j in one pass over the rows.
                let mut aa = 0.0f64;
                let mut bb = 0.0f64;
                let mut d = C_ZERO;
                for row in w.data().chunks_exact(n) {
                    let (wi, wj) = (row[i], row[j]);
                    aa += wi.norm_sqr();
                    bb += wj.norm_sqr();
                    d += wi.conj() * wj;
                }
                let mag = d.norm();
                if mag <= ORTHO_TOL * (aa * bb).sqrt() || aa == 0.0 || bb == 0.0 {
                    continue;
                }
                rotated = true;
                let tau = (bb - aa) / (2.0 * mag);
                let t = if tau >= 0.0 {
                    1.0 / (tau + (1.0 + tau * tau).sqrt())
                } else {
                    -1.0 / (-tau + (1.0 + tau * tau).sqrt())
                };
                let c = 1.0 / (1.0 + t * t).sqrt();
                let sn = t * c;
                let phase_c = (d / mag).conj();
                for row in w.data_mut().chunks_exact_mut(n) {
                    let (wi, wj) = (row[i], row[j]);
                    row[i] = wi * c - wj * (phase_c * sn);
                    row[j] = wi * sn + wj * (phase_c * c);
                }
                for row in v.data_mut().chunks_exact_mut(n) {
                    let (vi, vj) = (row[i], row[j]);
                    row[i] = vi * c - vj * (phase_c * sn);
                    row[j] = vi * sn + vj * (phase_c * c);
                }
            }
        }
        if !rotated {
            break;
        }
    }

    // Singular values are the column norms; sort them descending with a
    // stable permutation of both factors.
    let norms: Vec<f64> = (0..n).map(|j| cnorm(&w.col(j))).collect();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| norms[j].partial_cmp(&norms[i]).unwrap());
    let sigma: Vec<f64> = order.iter().map(|&j| norms[j]).collect();

    // Normalize the reliable columns into left singular vectors; directions
    // for (numerically) zero singular values come from the complement.
    let floor = sigma.first().copied().unwrap_or(0.0) * 1e-13;
    let mut u_good = CMatrix::zeros(m, 0);
    let mut good = Vec::new();
    for (pos, &j) in order.iter().enumerate() {
        if sigma[pos] > floor {
            let col: Vec<_> = w.col(j).iter().map(|&x| x / sigma[pos]).collect();
            let mut one = CMatrix::zeros(m, 1);
            one.set_col(0, &col);
            u_good = u_good.hstack(&one);
            good.push(pos);
        }
    }
    let fill = orthonormal_complement(&u_good, m - good.len());
    let mut u = CMatrix::zeros(m, m);
    let mut next_fill = 0;
    let mut next_good = 0;
    for pos in 0..m {
        if next_good < good.len() && good[next_good] == pos {
            u.set_col(pos, &u_good.col(next_good));
            next_good += 1;
        } else {
            u.set_col(pos, &fill.col(next_fill));
            next_fill += 1;
        }
    }

    let mut vv = CMatrix::zeros(n, n);
    for (dst, &src) in order.iter().enumerate() {
        vv.set_col(dst, &v.col(src));
    }

    // Fix the joint phase of each (u_j, v_j) pair: u_j's largest entry is
    // made real positive and v_j is rotated to match, preserving U Σ V*.
    for pos in &good {
        let mut ucol = CMatrix::zeros(m, 1);
        ucol.set_col(0, &u.col(*pos));
        let before = ucol.col(0);
        normalize_column_phases(&mut ucol);
        let after = ucol.col(0);
        // Recover the applied phase from any nonzero entry.
        let idx = before.iter().position(|z| z.norm() > 0.0).unwrap();
        let fix = after[idx] / before[idx];
        u.set_col(*pos, &after);
        let vcol: Vec<_> = vv.col(*pos).iter().map(|&z| z * fix).collect();
        vv.set_col(*pos, &vcol);
    }

    ComplexSvd { u, sigma, v: vv }
}

/// Full SVD of an arbitrary complex matrix.
pub fn complex_svd(a: &CMatrix) -> ComplexSvd {
    let (m, n) = (a.rows(), a.cols());
    if m == 0 || n == 0 {
        return ComplexSvd {
            u: CMatrix::identity(m),
            sigma: Vec::new(),
            v: CMatrix::identity(n),
        };
    }
    if m >= n {
        one_sided(a)
    } else {
        // A = U Σ V*  ⇔  A* = V Σᵀ U*.
        let s = one_sided(&a.adjoint());
        ComplexSvd {
            u: s.v,
            sigma: s.sigma,
            v: s.u,
        }
    }
}
