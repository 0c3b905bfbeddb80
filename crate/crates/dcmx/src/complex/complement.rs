//! Deterministic orthonormal complement of a set of orthonormal columns.

use super::cmatrix::{cdot, cnorm, CMatrix, C_ZERO};
use crate::parallel;
use num_complex::Complex64;

/// Returns `need` orthonormal columns spanning part of the orthogonal
/// complement of `basis` (an `n×k` matrix with orthonormal columns,
/// `k + need ≤ n`).
///
/// Candidates are the standard basis vectors of `Cⁿ`; each step greedily
/// picks the candidate with the largest residual against everything
/// accepted so far (ties at the lowest index), which makes the output a
/// deterministic function of `basis`.
pub fn orthonormal_complement(basis: &CMatrix, need: usize) -> CMatrix {
    let n = basis.rows();
    let k = basis.cols();
    assert!(k + need <= n, "complement request exceeds dimension");
    if need == 0 {
        return CMatrix::zeros(n, 0);
    }

    // Residuals of e_0 … e_{n-1} against the basis, stored row-wise so the
    // per-candidate updates are contiguous: cand_j = e_j − Σ_b b·conj(b[j]).
    let mut cand = vec![C_ZERO; n * n];
    parallel::for_each_chunk(&mut cand, n, |j, row| {
        row[j] = Complex64::new(1.0, 0.0);
        for b in 0..k {
            let coeff = basis.get(j, b).conj();
            for (i, x) in row.iter_mut().enumerate() {
                *x -= basis.get(i, b) * coeff;
            }
        }
    });

    let mut used = vec![false; n];
    let mut accepted: Vec<Vec<Complex64>> = Vec::with_capacity(need);
    for _ in 0..need {
        // Greedy pivot: largest residual norm, lowest index on ties.
        let mut best = usize::MAX;
        let mut best_norm = -1.0;
        for j in 0..n {
            if used[j] {
                continue;
            }
            let norm = cnorm(&cand[j * n..(j + 1) * n]);
            if norm > best_norm {
                best_norm = norm;
                best = j;
            }
        }
        assert!(
            best_norm > 1e-6,
            "orthonormal complement exhausted; basis columns not orthonormal?"
        );
        used[best] = true;
        let mut v: Vec<Complex64> = cand[best * n..(best + 1) * n].to_vec();
        // One reorthogonalization pass against basis and accepted columns
        // keeps orthogonality at machine precision even for small pivots.
        for b in 0..k {
            let col = basis.col(b);
            let coeff = cdot(&col, &v);
            for (x, &bi) in v.iter_mut().zip(&col) {
                *x -= bi * coeff;
            }
        }
        for acc in &accepted {
            let coeff = cdot(acc, &v);
            for (x, &ai) in v.iter_mut().zip(acc) {
                *x -= ai * coeff;
            }
        }
        let norm = cnorm(&v);
        for x in v.iter_mut() {
            *x /= norm;
        }
        // Deflate the remaining candidates.
        {
            let v_ref = &v;
            let used_ref = &used;
            parallel::for_each_chunk(&mut cand, n, |j, row| {
                if used_ref[j] {
                    return;
                }
                let coeff = cdot(v_ref, row);
                for (x, &vi) in row.iter_mut().zip(v_ref) {
                    *x -= vi * coeff;
                }
            });
        }
        accepted.push(v);
    }

    let mut out = CMatrix::zeros(n, need);
    for (j, v) in accepted.iter().enumerate() {
        out.set_col(j, v);
    }
    out
}
