//! Eigendecomposition of dual Hermitian matrices.
//!
//! A dual Hermitian matrix `A = A_std + A_inf·ε` is unitarily
//! diagonalizable in dual arithmetic. The construction splits the spectrum
//! of `A_std` into clusters of (numerically) equal eigenvalues: within a
//! cluster the infinitesimal part acts like a perturbation whose projected
//! block decides the eigenvalues' infinitesimal parts, and across clusters
//! the eigenvector correction is the classical first-order term divided by
//! the eigenvalue gap. The result is `A·u_j = λ_j·u_j` exactly in dual
//! arithmetic up to floating-point error, with a unitary `U`.

use crate::array::DCMatrix;
use crate::complex::cmatrix::{cdot, CMatrix};
use crate::complex::eigh::hermitian_eigen;
use crate::error::{Error, Result};
use crate::parallel;
use crate::scalar::DualNumber;
use num_complex::Complex64;

/// A maximal run of numerically equal standard eigenvalues.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Cluster {
    /// Shared standard eigenvalue (mean of the run).
    pub value: f64,
    /// First index into the eigenvalue list.
    pub start: usize,
    /// Multiplicity.
    pub size: usize,
}

/// Non-fatal conditions detected during the decomposition.
#[derive(Debug, Clone, PartialEq)]
pub enum SpectralWarning {
    /// Two clusters were kept separate but their gap is within a decade of
    /// the clustering tolerance; eigenvector infinitesimal parts divide by
    /// this gap, so they may be inaccurate.
    ClusterGapTooSmall {
        /// Index of the upper cluster (the gap is to cluster `index + 1`).
        index: usize,
        gap: f64,
        cluster_tol: f64,
    },
}

impl std::fmt::Display for SpectralWarning {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            SpectralWarning::ClusterGapTooSmall {
                index,
                gap,
                cluster_tol,
            } => write!(
                f,
                "eigenvalue clusters {index} and {} are separated by only {gap:.3e} \
                 (clustering tolerance {cluster_tol:.3e}); infinitesimal parts of the \
                 eigenvectors may be inaccurate — consider raising the cluster tolerance",
                index + 1
            ),
        }
    }
}

/// Result of [`hermitian_eig`]: `A = U · diag(eigenvalues) · U*`.
#[derive(Debug, Clone)]
pub struct HermEig {
    /// Dual eigenvalues, sorted descending under the total order: clusters
    /// by standard value, infinitesimal parts descending within a cluster.
    pub eigenvalues: Vec<DualNumber>,
    /// Dual unitary matrix of eigenvectors (column `j` pairs with
    /// `eigenvalues[j]`).
    pub vectors: DCMatrix,
    /// Cluster layout of the standard spectrum.
    pub clusters: Vec<Cluster>,
    /// The absolute gap tolerance that produced the clustering (either the
    /// caller's value or the derived default).
    pub cluster_tol: f64,
    pub warnings: Vec<SpectralWarning>,
}

/// Options for [`hermitian_eig_with`].
#[derive(Debug, Clone, Copy)]
pub struct EigOptions {
    /// Absolute gap below which consecutive standard eigenvalues merge into
    /// one cluster. `None` uses `1e-8 · max(1, |λ|_max)`.
    pub cluster_tol: Option<f64>,
    /// Accepted Hermitian deviation `‖A − A*‖_F` (both parts); inputs
    /// within the tolerance are symmetrized before decomposing.
    pub hermitian_tol: f64,
}

impl Default for EigOptions {
    fn default() -> Self {
        EigOptions {
            cluster_tol: None,
            hermitian_tol: 1e-10,
        }
    }
}

/// Definiteness classes of a dual Hermitian matrix under the total order.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Definiteness {
    /// All eigenvalues appreciable and positive.
    PositiveDefinite,
    /// All eigenvalues `≥ 0` in the total order, at least one not positive
    /// definite's worth.
    PositiveSemidefinite,
    /// Some eigenvalue `< 0` in the total order.
    Indefinite,
}

/// Greedy gap clustering of a descending eigenvalue list.
fn cluster_spectrum(values: &[f64], cluster_tol: f64) -> Vec<Cluster> {
    let mut clusters: Vec<Cluster> = Vec::new();
    let mut start = 0usize;
    for i in 0..values.len() {
        let is_last = i + 1 == values.len();
        let breaks = !is_last && (values[i] - values[i + 1]) > cluster_tol;
        if breaks || is_last {
            let size = i + 1 - start;
            let value = values[start..=i].iter().sum::<f64>() / size as f64;
            clusters.push(Cluster { value, start, size });
            start = i + 1;
        }
    }
    clusters
}

/// Eigendecomposition with default options.
pub fn hermitian_eig(a: &DCMatrix) -> Result<HermEig> {
    hermitian_eig_with(a, &EigOptions::default())
}

/// Eigendecomposition of a dual Hermitian matrix.
pub fn hermitian_eig_with(a: &DCMatrix, opts: &EigOptions) -> Result<HermEig> {
    let n = a.rows();
    if a.cols() != n {
        return Err(Error::Shape {
            context: "hermitian_eig",
            lhs_rows: a.rows(),
            lhs_cols: a.cols(),
            rhs_rows: a.cols(),
            rhs_cols: a.cols(),
        });
    }
    let (ds, di) = a.hermitian_deviation();
    let deviation = ds.max(di);
    if deviation > opts.hermitian_tol {
        return Err(Error::NotHermitian {
            deviation,
            tol: opts.hermitian_tol,
        });
    }
    let a = a.symmetrized();

    if n == 0 {
        return Ok(HermEig {
            eigenvalues: Vec::new(),
            vectors: DCMatrix::zeros(0, 0),
            clusters: Vec::new(),
            cluster_tol: opts.cluster_tol.unwrap_or(1e-8),
            warnings: Vec::new(),
        });
    }

    // Standard spectrum and clustering.
    let base = hermitian_eigen(a.std());
    let abs_max = base
        .values
        .iter()
        .fold(0.0f64, |acc, &v| acc.max(v.abs()));
    let cluster_tol = opts.cluster_tol.unwrap_or(1e-8 * abs_max.max(1.0));
    let clusters = cluster_spectrum(&base.values, cluster_tol);

    let mut warnings = Vec::new();
    for (idx, pair) in clusters.windows(2).enumerate() {
        let gap = pair[0].value - pair[1].value;
        if gap < 10.0 * cluster_tol {
            warnings.push(SpectralWarning::ClusterGapTooSmall {
                index: idx,
                gap,
                cluster_tol,
            });
        }
    }

    // Infinitesimal part in the eigenbasis of the standard part.
    let s = &base.vectors;
    let m = s.adjoint().mul(a.inf()).mul(s);

    // First-order eigenvector correction: off-diagonal blocks divided by
    // cluster gaps. P is anti-Hermitian, so filling both triangles from the
    // upper one keeps that structure exact.
    let mut p = CMatrix::zeros(n, n);
    for (bi, ci) in clusters.iter().enumerate() {
        for cj in clusters.iter().skip(bi + 1) {
            let denom = ci.value - cj.value;
            for r in ci.start..ci.start + ci.size {
                for c in cj.start..cj.start + cj.size {
                    let x = m.get(r, c) / denom;
                    p.set(r, c, x);
                    p.set(c, r, -x.conj());
                }
            }
        }
    }

    // Per-cluster diagonalization of the projected infinitesimal blocks —
    // independent problems, solved in parallel under the feature flag.
    let blocks: Vec<_> = parallel::map_collect(clusters.len(), |ci| {
        let cl = &clusters[ci];
        let block = CMatrix::from_fn(cl.size, cl.size, |r, c| {
            let x = m.get(cl.start + r, cl.start + c);
            let y = m.get(cl.start + c, cl.start + r).conj();
            (x + y) * Complex64::new(0.5, 0.0)
        });
        hermitian_eigen(&block)
    });

    // Assemble eigenvalues and the block-diagonal inner basis.
    let mut eigenvalues = Vec::with_capacity(n);
    let mut vhat = CMatrix::zeros(n, n);
    for (cl, b) in clusters.iter().zip(&blocks) {
        for (j, &mu) in b.values.iter().enumerate() {
            eigenvalues.push(DualNumber::new(cl.value, mu)?);
            for i in 0..cl.size {
                vhat.set(cl.start + i, cl.start + j, b.vectors.get(i, j));
            }
        }
    }

    let u_std = s.mul(&vhat);
    let u_inf = s.mul(&p.adjoint()).mul(&vhat);

    // Pin each column's phase to the largest standard entry; the same
    // rotation applies to both parts, so eigenpairs are unchanged.
    let mut u_std = u_std;
    let mut u_inf = u_inf;
    for j in 0..n {
        let col = u_std.col(j);
        let mut best = 0usize;
        let mut best_mag = 0.0f64;
        for (i, z) in col.iter().enumerate() {
            let mag = z.norm();
            if mag > best_mag {
                best_mag = mag;
                best = i;
            }
        }
        if best_mag > 0.0 {
            let pivot = col[best];
            let fix = (pivot / pivot.norm()).conj();
            for i in 0..n {
                u_std.set(i, j, u_std.get(i, j) * fix);
                u_inf.set(i, j, u_inf.get(i, j) * fix);
            }
        }
    }

    Ok(HermEig {
        eigenvalues,
        vectors: DCMatrix::from_parts(u_std, u_inf)?,
        clusters,
        cluster_tol,
        warnings,
    })
}

/// First-order eigenvalue shift of an eigenvector `x` of the standard part
/// under the infinitesimal perturbation `a_inf`: the Rayleigh quotient
/// `Re(x* A_inf x / x* x)`.
///
/// For Hermitian `a_inf` the quotient is real up to roundoff; this is the
/// independent cross-check for the infinitesimal eigenvalue parts on
/// non-degenerate eigenvalues.
pub fn eig_dual_part(a_inf: &CMatrix, x_std: &[Complex64]) -> Result<f64> {
    if a_inf.rows() != a_inf.cols() || a_inf.cols() != x_std.len() {
        return Err(Error::Shape {
            context: "eig_dual_part",
            lhs_rows: a_inf.rows(),
            lhs_cols: a_inf.cols(),
            rhs_rows: x_std.len(),
            rhs_cols: 1,
        });
    }
    let denom = x_std.iter().map(|z| z.norm_sqr()).sum::<f64>();
    if denom == 0.0 {
        return Err(Error::ZeroVector("eig_dual_part"));
    }
    let ax = a_inf.mul_vec(x_std);
    let num = cdot(x_std, &ax);
    Ok(num.re / denom)
}

/// Classifies a decomposed dual Hermitian matrix under the total order.
pub fn classify_definiteness(e: &HermEig) -> Definiteness {
    let zero = DualNumber::ZERO;
    if e.eigenvalues.iter().all(|l| l.std() > 0.0) {
        Definiteness::PositiveDefinite
    } else if e.eigenvalues.iter().all(|l| *l >= zero) {
        Definiteness::PositiveSemidefinite
    } else {
        Definiteness::Indefinite
    }
}

/// Residual `‖A u − λ u‖₂` of one eigenpair, for verification.
pub fn eig_residual(a: &DCMatrix, e: &HermEig, j: usize) -> Result<DualNumber> {
    if j >= e.eigenvalues.len() {
        return Err(Error::Index {
            context: "eig_residual",
            index: j,
            limit: e.eigenvalues.len(),
        });
    }
    let u = e.vectors.col(j);
    let au = a.mul_vec(&u)?;
    let lu = u.scale(e.eigenvalues[j].into());
    Ok(au.sub(&lu)?.norm2())
}
