//! Shared generators and assertions for the integration suites.
// Each test target compiles this module separately and uses a different
// subset of it.
#![allow(dead_code)]

use dcmx::scalar::DualComplex;
use dcmx::svd::SvdResult;
use dcmx::DCMatrix;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

/// Random dual complex matrix with entries uniform in `[-scale, scale]`
/// for all four real components.
pub fn random_dual_matrix(rng: &mut ChaCha8Rng, rows: usize, cols: usize, scale: f64) -> DCMatrix {
    DCMatrix::from_fn(rows, cols, |_, _| {
        DualComplex::from_components(
            rng.gen_range(-scale..=scale),
            rng.gen_range(-scale..=scale),
            rng.gen_range(-scale..=scale),
            rng.gen_range(-scale..=scale),
        )
        .expect("finite components")
    })
}

/// Random dual Hermitian matrix (Hermitian in both parts).
pub fn random_hermitian_dual(rng: &mut ChaCha8Rng, n: usize, scale: f64) -> DCMatrix {
    random_dual_matrix(rng, n, n, scale).symmetrized()
}

/// Frobenius norm of the difference, split by part.
pub fn diff_norms(a: &DCMatrix, b: &DCMatrix) -> (f64, f64) {
    let d = a.sub(b).expect("matching shapes");
    (d.std().fro_norm(), d.inf().fro_norm())
}

/// Asserts `V Σ U*` reproduces `a` within `(tol_std, tol_inf)` and that both
/// outer factors are dual unitary within the same budget.
pub fn assert_svd_factors(a: &DCMatrix, s: &SvdResult, tol_std: f64, tol_inf: f64) {
    let (rs, ri) = diff_norms(&s.reconstruct(), a);
    assert!(
        rs <= tol_std && ri <= tol_inf,
        "reconstruction error ({rs:.3e}, {ri:.3e}) exceeds ({tol_std:.1e}, {tol_inf:.1e}) for {}x{}",
        a.rows(),
        a.cols()
    );
    for (name, f) in [("left", &s.v), ("right", &s.u)] {
        let (us, ui) = f.unitary_deviation();
        assert!(
            us <= tol_std && ui <= tol_inf,
            "{name} factor deviates from unitary by ({us:.3e}, {ui:.3e}) for {}x{}",
            a.rows(),
            a.cols()
        );
    }
}
