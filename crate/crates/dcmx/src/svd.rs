//! Singular value decomposition of dual complex matrices.
//!
//! Every dual complex matrix factors as `A = V Σ U*` with dual unitary
//! `V` (m×m), `U` (n×n) and a rectangular diagonal `Σ` of nonnegative dual
//! numbers in descending total order: first the *appreciable* singular
//! values (positive standard part), then purely infinitesimal ones, then
//! zeros. Two ranks fall out: `rank` counts all nonzero dual singular
//! values, `arank` only the appreciable ones — and `arank(A)` always
//! equals the classical numerical rank of the standard part.
//!
//! The construction: eigendecompose `B = A*A` in dual arithmetic, map the
//! appreciable eigenvalue clusters to singular values `σ = √λ` (dual square
//! root), build the left vectors as `V¹ = A U¹ Σ⁻¹` in dual arithmetic,
//! complete them to a unitary basis, and recover the purely infinitesimal
//! singular values from a classical complex SVD of the projected residual
//! block `G = (V²_std)* (A_std U²_inf + A_inf U²_std)`.

use crate::array::DCMatrix;
use crate::complex::csvd::complex_svd;
use crate::error::{Error, Result};
use crate::scalar::DualNumber;
use crate::spectral::{hermitian_eig_with, EigOptions, SpectralWarning};

/// Options for [`svd_with`].
#[derive(Debug, Clone, Copy, Default)]
pub struct SvdOptions {
    /// Eigenvalue clustering tolerance for the standard part of `A*A`;
    /// `None` uses `1e-8 · max(1, λ_max)` on that spectrum.
    pub cluster_tol: Option<f64>,
    /// Threshold below which a standard singular value counts as zero.
    /// `None` uses `1e-10 · max(m, n) · σ_max`, with `σ_max` read from the
    /// standard part (or from the infinitesimal stage when the standard
    /// part vanishes entirely). Values below the Gram-matrix noise floor
    /// `8·√(max(m,n)·ε)·σ_max` only affect rank *counting*; the factor
    /// construction clamps to that floor, since singular values beneath it
    /// are indistinguishable from roundoff once `A*A` has been formed.
    pub zero_tol: Option<f64>,
}

/// Result of [`svd`]: `A = V · Σ · U*`.
#[derive(Debug, Clone)]
pub struct SvdResult {
    /// Left dual unitary factor, `m×m`.
    pub v: DCMatrix,
    /// Dual singular values, length `min(m,n)`, descending under the total
    /// order; trailing entries may be purely infinitesimal or zero.
    pub sigma: Vec<DualNumber>,
    /// Right dual unitary factor, `n×n`.
    pub u: DCMatrix,
    /// Number of nonzero dual singular values (standard *or* infinitesimal
    /// part above the zero tolerance).
    pub rank: usize,
    /// Number of appreciable singular values (standard part above the zero
    /// tolerance). Equals the numerical rank of `A_std`.
    pub arank: usize,
    /// Warnings forwarded from the eigendecomposition of `A*A`.
    pub warnings: Vec<SpectralWarning>,
}

impl SvdResult {
    /// Shape of the decomposed matrix.
    pub fn shape(&self) -> (usize, usize) {
        (self.v.rows(), self.u.rows())
    }

    /// Σ as a rectangular diagonal dual matrix.
    pub fn sigma_matrix(&self) -> DCMatrix {
        let (m, n) = self.shape();
        let mut s = DCMatrix::zeros(m, n);
        for (i, sv) in self.sigma.iter().enumerate() {
            s.set(i, i, (*sv).into()).expect("diagonal in range");
        }
        s
    }

    /// Reconstructs `V Σ U*` in dual arithmetic.
    pub fn reconstruct(&self) -> DCMatrix {
        self.v
            .mat_mul(&self.sigma_matrix())
            .and_then(|vs| vs.mat_mul(&self.u.adjoint()))
            .expect("factor shapes conform")
    }
}

/// SVD with default options.
pub fn svd(a: &DCMatrix) -> Result<SvdResult> {
    svd_with(a, &SvdOptions::default())
}

/// SVD of an arbitrary dual complex matrix.
pub fn svd_with(a: &DCMatrix, opts: &SvdOptions) -> Result<SvdResult> {
    let (m, n) = a.shape();
    let k = m.min(n);

    // Step 1: dual eigendecomposition of B = A*A (exactly Hermitian by
    // construction, nonnegative in the total order up to roundoff).
    let b = a.adjoint().mat_mul(a)?;
    let eig = hermitian_eig_with(
        &b,
        &EigOptions {
            cluster_tol: opts.cluster_tol,
            hermitian_tol: 1e-6 * (1.0 + b.fro_norm().std()),
        },
    )?;

    let sigma_max = eig
        .clusters
        .first()
        .map(|c| c.value.max(0.0).sqrt())
        .unwrap_or(0.0);
    let explicit_zero_tol = opts.zero_tol;
    let zero_tol_std =
        explicit_zero_tol.unwrap_or(1e-10 * (m.max(n) as f64) * sigma_max);

    // Going through B = A*A squares the conditioning: eigenvalues of B that
    // are exact zeros in exact arithmetic come out at roundoff scale
    // ε·λ_max, i.e. their square roots land near √(n·ε)·σ_max — far above
    // any sensible singular-value tolerance. Structural decisions therefore
    // never trust σ below this noise floor, whatever `zero_tol` says.
    let noise_floor = 8.0 * sigma_max * ((m.max(n) as f64) * f64::EPSILON).sqrt();
    let struct_tol = zero_tol_std.max(noise_floor);

    // Step 2: split the spectrum into appreciable clusters (σ above the
    // structural tolerance) and the rest. Clusters are sorted descending,
    // so the appreciable ones form a prefix; it can never exceed min(m, n)
    // because B has at most that many genuinely nonzero eigenvalues.
    let mut r_a = 0usize; // appreciable rank
    let mut appreciable_clusters = 0usize;
    for c in &eig.clusters {
        let sv = c.value.max(0.0).sqrt();
        if sv > struct_tol && r_a + c.size <= k {
            r_a += c.size;
            appreciable_clusters += 1;
        } else {
            break;
        }
    }

    // Appreciable dual singular values: σ = √λ per cluster in dual
    // arithmetic, with the cluster's shared standard part.
    let mut sigma: Vec<DualNumber> = Vec::with_capacity(k);
    let mut inv_sigma: Vec<DualNumber> = Vec::with_capacity(r_a);
    for c in eig.clusters.iter().take(appreciable_clusters) {
        for j in c.start..c.start + c.size {
            let lambda = DualNumber::new(c.value, eig.eigenvalues[j].inf())?;
            let sv = lambda.sqrt()?;
            sigma.push(sv);
            inv_sigma.push(sv.recip()?);
        }
    }

    // Step 3: left singular vectors for the appreciable block,
    // V¹ = A · U¹ · Σ⁻¹ entirely in dual arithmetic, then completion to an
    // m×m dual unitary basis.
    let u1 = eig.vectors.columns(0, r_a);
    let mut v1 = a.mat_mul(&u1)?;
    v1.scale_cols_dual(&inv_sigma);
    // Forming A*A squares the condition number, so the raw V¹ columns are
    // orthonormal only to ~ε·(σ_max/σ_min)². Re-orthonormalizing keeps the
    // output factors unitary to working precision; the adjustment stays
    // within the error already incurred by the normal-equation route.
    let v1 = reorthonormalize(&v1)?;

    // Cluster spread bounds how far V¹ can drift from orthonormality: a
    // size-s cluster may span up to (s−1)·cluster_tol of raw spectrum, all
    // of it scaled by the single shared representative.
    let mut spread = 0.0f64;
    for c in eig.clusters.iter().take(appreciable_clusters) {
        if c.size > 1 {
            let width = (c.size - 1) as f64 * eig.cluster_tol;
            spread = spread.max(width / c.value.abs().max(f64::MIN_POSITIVE));
        }
    }
    let completion_tol = (1e-8f64).max(50.0 * spread);
    let v_full = v1.extend_to_unitary(completion_tol)?;

    // Step 4: the remaining singular values are purely infinitesimal and
    // come from a classical SVD of the projected residual block.
    let u2 = eig.vectors.columns(r_a, n);
    let v2 = v_full.columns(r_a, m);
    let g = v2
        .std()
        .adjoint()
        .mul(&a.std().mul(u2.inf()).add(&a.inf().mul(u2.std())));
    let gs = complex_svd(&g);

    for i in 0..k.saturating_sub(r_a) {
        sigma.push(DualNumber::new(0.0, gs.sigma[i])?);
    }

    // Assemble the factors: right blocks rotate by the classical factors.
    let u = if n > r_a {
        u1.hstack(&u2.mul_complex(&gs.v))?
    } else {
        u1
    };
    let v = if m > r_a {
        v_full.columns(0, r_a).hstack(&v2.mul_complex(&gs.u))?
    } else {
        v_full
    };

    // Rank bookkeeping. When the standard part vanished entirely, the
    // relative zero tolerance falls back to the infinitesimal scale.
    let zero_tol_eff = match explicit_zero_tol {
        Some(t) => t,
        None => {
            if sigma_max > 0.0 {
                zero_tol_std
            } else {
                let inf_max = gs.sigma.first().copied().unwrap_or(0.0);
                1e-10 * (m.max(n) as f64) * inf_max
            }
        }
    };
    let rank = sigma
        .iter()
        .filter(|s| s.std() > zero_tol_eff || s.inf() > zero_tol_eff)
        .count();

    Ok(SvdResult {
        v,
        sigma,
        u,
        rank,
        arank: r_a,
        warnings: eig.warnings,
    })
}

/// Two-pass modified Gram–Schmidt on the columns, in dual arithmetic.
///
/// The second projection pass ("twice is enough") brings nearly orthonormal
/// input to orthonormality at working precision. Fails with
/// [`Error::NotAppreciable`] if a column collapses, i.e. the input had
/// (dually) dependent columns.
fn reorthonormalize(v: &DCMatrix) -> Result<DCMatrix> {
    let (m, r) = v.shape();
    let mut cols: Vec<crate::array::DCVector> = Vec::with_capacity(r);
    for j in 0..r {
        let mut vj = v.col(j);
        for _pass in 0..2 {
            for prev in &cols {
                let c = prev.inner(&vj)?;
                vj = vj.sub(&prev.scale(c))?;
            }
        }
        let inv = vj.norm2().recip()?;
        cols.push(vj.scale(inv.into()));
    }
    Ok(DCMatrix::from_fn(m, r, |i, j| cols[j].at(i)))
}

/// Convenience: number of nonzero dual singular values at default options.
pub fn rank(a: &DCMatrix) -> Result<usize> {
    Ok(svd(a)?.rank)
}

/// Convenience: number of appreciable singular values at default options.
pub fn arank(a: &DCMatrix) -> Result<usize> {
    Ok(svd(a)?.arank)
}

/// Best rank-`k` approximation `A_k = V_{:,1..k} Σ_{1..k} U_{:,1..k}*`.
pub fn truncate(s: &SvdResult, k: usize) -> Result<DCMatrix> {
    let limit = s.sigma.len();
    if k > limit {
        return Err(Error::Index {
            context: "truncate",
            index: k,
            limit,
        });
    }
    let (vk, sk, uk) = truncate_factors(s, k)?;
    let mut scaled = vk;
    scaled.scale_cols_dual(&sk);
    scaled.mat_mul(&uk.adjoint())
}

/// The factors of the rank-`k` truncation: `(V_k, σ_1..k, U_k)`.
pub fn truncate_factors(s: &SvdResult, k: usize) -> Result<(DCMatrix, Vec<DualNumber>, DCMatrix)> {
    let limit = s.sigma.len();
    if k > limit {
        return Err(Error::Index {
            context: "truncate_factors",
            index: k,
            limit,
        });
    }
    Ok((
        s.v.columns(0, k),
        s.sigma[..k].to_vec(),
        s.u.columns(0, k),
    ))
}

/// The approximation error `‖A − A_k‖_F` predicted by the singular value
/// tail: the dual 2-norm of `(σ_{k+1}, …)`.
///
/// When the tail still contains appreciable values this is the dual square
/// root of the tail sum of squares (infinitesimal entries contribute
/// nothing — their dual squares vanish); a purely infinitesimal tail
/// yields `(0, √Σ σ_inf²)`.
pub fn lowrank_error(s: &SvdResult, k: usize) -> Result<DualNumber> {
    let limit = s.sigma.len();
    if k > limit {
        return Err(Error::Index {
            context: "lowrank_error",
            index: k,
            limit,
        });
    }
    let tail = &s.sigma[k..];
    if tail.is_empty() {
        return Ok(DualNumber::ZERO);
    }
    if tail.iter().any(|t| t.is_appreciable()) {
        let sum: DualNumber = tail.iter().map(|&t| t * t).sum();
        sum.sqrt()
    } else {
        let sq = tail
            .iter()
            .map(|t| t.inf() * t.inf())
            .fold(0.0f64, |acc, x| acc + x);
        DualNumber::new(0.0, sq.sqrt())
    }
}
