//! End-to-end acceptance suite for the toolkit.
//!
//! Each test covers one headline guarantee, pins its tolerances in the
//! assertions, and prints a single `[PASS]` line with the measured numbers
//! (visible under `--nocapture`). Randomized tests use fixed seeds, and the
//! solvers are deterministic, so every run takes the same floating-point
//! path. Tests serialize through a global gate so that wall-clock budgets
//! are measured on a quiet core even when the harness runs multi-threaded.

use std::path::Path;
use std::sync::{Mutex, MutexGuard};
use std::time::{Duration, Instant};

use dcmx::complex::{complex_svd, CMatrix};
use dcmx::scalar::{DualComplex, DualNumber};
use dcmx::{arank, lowrank_error, rank, svd, truncate, DCMatrix, DCVector};
use dcmx_cli::pgm::{load_pgm, GrayImage};
use dcmx_cli::pipeline::{images_to_matrix, run_image};
use dcmx_cli::report::errors_csv;
use dcmx_cli::verify::{examples, run_example, Outcome};
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

static GATE: Mutex<()> = Mutex::new(());

fn quiet_core() -> MutexGuard<'static, ()> {
    GATE.lock().unwrap_or_else(|e| e.into_inner())
}

fn zero_dual() -> DualNumber {
    DualNumber::new(0.0, 0.0).expect("zero is finite")
}

fn rand_c(rng: &mut ChaCha8Rng, scale: f64) -> Complex64 {
    if scale == 0.0 {
        return Complex64::new(0.0, 0.0);
    }
    Complex64::new(rng.gen_range(-scale..scale), rng.gen_range(-scale..scale))
}

fn random_matrix(
    rng: &mut ChaCha8Rng,
    m: usize,
    n: usize,
    std_scale: f64,
    inf_scale: f64,
) -> DCMatrix {
    DCMatrix::from_fn(m, n, |_, _| {
        DualComplex::new(rand_c(rng, std_scale), rand_c(rng, inf_scale)).expect("finite entries")
    })
}

fn dense_cmatrix(rng: &mut ChaCha8Rng, m: usize, n: usize) -> CMatrix {
    CMatrix::from_fn(m, n, |_, _| rand_c(rng, 1.0))
}

/// Complex matrix of exact rank `r` (generically), entries O(1).
fn low_rank_cmatrix(rng: &mut ChaCha8Rng, m: usize, n: usize, r: usize) -> CMatrix {
    if r == 0 {
        return CMatrix::zeros(m, n);
    }
    let left = dense_cmatrix(rng, m, r);
    let right = dense_cmatrix(rng, r, n);
    left.mul(&right)
}

fn golden(name: &str) -> Outcome {
    let ex = examples()
        .into_iter()
        .find(|e| e.name == name)
        .expect("builtin example exists");
    run_example(&ex, None).expect("example fixture parses")
}

/// Criterion 1: the 8x4 fixture reproduces its reference singular values,
/// each part within 5e-4, in under 0.1 s.
#[test]
fn golden_singular_values_8x4() {
    let _g = quiet_core();
    let t0 = Instant::now();
    let out = golden("svd_8x4");
    let dt = t0.elapsed();
    assert!(out.passed, "svd_8x4 mismatch: {:?}", out.lines);
    assert!(dt < Duration::from_millis(100), "took {dt:?}, budget 0.1 s");
    println!(
        "[PASS] 8x4 fixture: four dual singular values within 5e-4 per part in {dt:?} ({})",
        out.lines.join("; ")
    );
}

/// Criterion 2: the 6x4 fixture with a repeated and a zero standard
/// singular value reproduces its reference values within 5e-4 and reports
/// appreciable rank 3, rank 4.
#[test]
fn golden_singular_values_with_multiplicity_6x4() {
    let _g = quiet_core();
    let out = golden("svd_multiple_6x4");
    assert!(out.passed, "svd_multiple_6x4 mismatch: {:?}", out.lines);
    println!(
        "[PASS] 6x4 fixture: repeated + zero singular values within 5e-4, arank 3, rank 4 ({})",
        out.lines.join("; ")
    );
}

/// Criterion 3: the 10x4 fixture's Gram-matrix eigendecomposition
/// reproduces its reference dual eigenvalues within 5e-3.
#[test]
fn golden_gram_eigenvalues_10x4() {
    let _g = quiet_core();
    let out = golden("eig_10x4");
    assert!(out.passed, "eig_10x4 mismatch: {:?}", out.lines);
    println!(
        "[PASS] 10x4 fixture: four dual Gram eigenvalues within 5e-3 per part ({})",
        out.lines.join("; ")
    );
}

/// Criterion 4: on 200 random matrices with m, n ≤ 30, the decomposition
/// reconstructs to (1e-9, 1e-8) and both factors are unitary to
/// (1e-10, 1e-9), all inside 30 s.
#[test]
fn reconstruction_and_factor_unitarity_on_random_matrices() {
    let _g = quiet_core();
    let mut rng = ChaCha8Rng::seed_from_u64(0xD0A1_0004);
    let t0 = Instant::now();
    let (mut worst_recon, mut worst_unit) = ((0.0f64, 0.0f64), (0.0f64, 0.0f64));
    for trial in 0..200 {
        let m = rng.gen_range(1..=30);
        let n = rng.gen_range(1..=30);
        let inf_scale = [0.5, 1.0, 3.0][trial % 3];
        let a = random_matrix(&mut rng, m, n, 1.0, inf_scale);
        let s = svd(&a).unwrap();
        let d = s.reconstruct().sub(&a).unwrap().fro_norm();
        assert!(
            d.std() <= 1e-9 && d.inf().abs() <= 1e-8,
            "trial {trial} ({m}x{n}): reconstruction error ({:.3e}, {:.3e})",
            d.std(),
            d.inf()
        );
        worst_recon = (worst_recon.0.max(d.std()), worst_recon.1.max(d.inf().abs()));
        for factor in [&s.v, &s.u] {
            let (us, ui) = factor.unitary_deviation();
            assert!(
                us <= 1e-10 && ui <= 1e-9,
                "trial {trial} ({m}x{n}): unitary deviation ({us:.3e}, {ui:.3e})"
            );
            worst_unit = (worst_unit.0.max(us), worst_unit.1.max(ui));
        }
    }
    let dt = t0.elapsed();
    assert!(dt < Duration::from_secs(30), "took {dt:?}, budget 30 s");
    println!(
        "[PASS] 200 random decompositions in {dt:?}: worst reconstruction ({:.2e}, {:.2e}) \
         vs (1e-9, 1e-8), worst unitary deviation ({:.2e}, {:.2e}) vs (1e-10, 1e-9)",
        worst_recon.0, worst_recon.1, worst_unit.0, worst_unit.1
    );
}

/// Criterion 5: rank-k truncation is never beaten in Frobenius error, under
/// the dual total order, by any of 1000 random rank-≤k candidates — for 20
/// random 6x4 matrices and k ∈ {1, 2, 3}, inside 60 s.
#[test]
fn truncation_is_optimal_against_random_low_rank_candidates() {
    let _g = quiet_core();
    let mut rng = ChaCha8Rng::seed_from_u64(0xD0A1_0005);
    let t0 = Instant::now();
    let mut candidates = 0usize;
    for matrix_idx in 0..20 {
        let a = random_matrix(&mut rng, 6, 4, 1.0, 1.0);
        let s = svd(&a).unwrap();
        for k in 1..=3usize {
            let tail = lowrank_error(&s, k).unwrap();
            let ak = truncate(&s, k).unwrap();
            let best = a.sub(&ak).unwrap().fro_norm();
            // The truncation error must equal the discarded-tail norm.
            assert!(
                best.approx_eq(tail, 1e-9, 1e-8),
                "matrix {matrix_idx}, k={k}: truncation error {best:?} vs tail norm {tail:?}"
            );
            for _ in 0..1000 {
                let p = random_matrix(&mut rng, 6, k, 1.0, 1.0);
                let q = random_matrix(&mut rng, k, 4, 1.0, 1.0);
                let b = p.mat_mul(&q).unwrap();
                let err = a.sub(&b).unwrap().fro_norm();
                assert!(
                    best <= err,
                    "matrix {matrix_idx}, k={k}: candidate beat the truncation: \
                     {err:?} < {best:?}"
                );
                candidates += 1;
            }
        }
    }
    let dt = t0.elapsed();
    assert!(dt < Duration::from_secs(60), "took {dt:?}, budget 60 s");
    println!(
        "[PASS] truncation optimal against {candidates} random low-rank candidates \
         (20 matrices x k in 1..=3 x 1000) in {dt:?}"
    );
}

/// Criterion 6: rank and appreciable rank obey the product, stacking and
/// sum inequalities on 100 random structured pairs, and appreciable rank
/// always equals the classical numerical rank of the standard part.
#[test]
fn rank_inequalities_on_random_structured_pairs() {
    let _g = quiet_core();
    let mut rng = ChaCha8Rng::seed_from_u64(0xD0A1_0006);

    // Random matrix with a controlled standard-part rank; one in five draws
    // is purely infinitesimal (zero standard part, low-rank perturbation).
    fn structured(rng: &mut ChaCha8Rng, m: usize, n: usize) -> DCMatrix {
        let r = rng.gen_range(0..=m.min(n));
        let pure_inf = rng.gen_range(0..5) == 0;
        let (std, inf) = if pure_inf {
            (CMatrix::zeros(m, n), low_rank_cmatrix(rng, m, n, r))
        } else {
            (low_rank_cmatrix(rng, m, n, r), dense_cmatrix(rng, m, n))
        };
        DCMatrix::from_parts(std, inf).expect("parts conform")
    }

    for trial in 0..100 {
        let m = rng.gen_range(1..=7);
        let n = rng.gen_range(1..=7);
        let p = rng.gen_range(1..=7);

        // Products: rank(AB) ≤ min(rank A, rank B), same for arank.
        let a = structured(&mut rng, m, n);
        let b = structured(&mut rng, n, p);
        let ab = a.mat_mul(&b).unwrap();
        let (ra, aa) = (rank(&a).unwrap(), arank(&a).unwrap());
        let (rb, ab_a) = (rank(&b).unwrap(), arank(&b).unwrap());
        let (rp, ap) = (rank(&ab).unwrap(), arank(&ab).unwrap());
        assert!(rp <= ra.min(rb), "trial {trial}: rank(AB)={rp} > min({ra},{rb})");
        assert!(ap <= aa.min(ab_a), "trial {trial}: arank(AB)={ap} > min({aa},{ab_a})");

        // Stacking: rank([A; C]) ≤ rank(A) + rank(C), same for arank.
        let q = rng.gen_range(1..=7);
        let c = structured(&mut rng, q, n);
        let stacked = a.vstack(&c).unwrap();
        let (rc, ac) = (rank(&c).unwrap(), arank(&c).unwrap());
        let (rs, as_) = (rank(&stacked).unwrap(), arank(&stacked).unwrap());
        assert!(rs <= ra + rc, "trial {trial}: rank of stack {rs} > {ra}+{rc}");
        assert!(as_ <= aa + ac, "trial {trial}: arank of stack {as_} > {aa}+{ac}");

        // Sums: rank(A) − rank(D) ≤ rank(A+D) ≤ rank(A) + rank(D), both kinds.
        let d = structured(&mut rng, m, n);
        let sum = a.add(&d).unwrap();
        let (rd, ad) = (rank(&d).unwrap(), arank(&d).unwrap());
        let (rsum, asum) = (rank(&sum).unwrap(), arank(&sum).unwrap());
        assert!(
            rsum <= ra + rd && rsum + rd >= ra && rsum + ra >= rd,
            "trial {trial}: rank(A+D)={rsum} outside [|{ra}-{rd}|, {ra}+{rd}]"
        );
        assert!(
            asum <= aa + ad && asum + ad >= aa && asum + aa >= ad,
            "trial {trial}: arank(A+D)={asum} outside [|{aa}-{ad}|, {aa}+{ad}]"
        );

        // Appreciable rank equals the classical numerical rank of the
        // standard part, measured by an independent classical SVD.
        let cs = complex_svd(a.std());
        let smax = cs.sigma.first().copied().unwrap_or(0.0);
        let classical = cs.rank(1e-10 * (m.max(n) as f64) * smax);
        assert_eq!(
            aa, classical,
            "trial {trial}: arank {aa} != classical rank {classical} of the standard part"
        );
    }
    println!(
        "[PASS] product/stacking/sum rank inequalities and arank = classical rank \
         of the standard part on 100 structured random pairs"
    );
}

/// Criterion 7: 10,000 randomized scalar checks at (1e-10, 1e-9): magnitude
/// axioms, the vector-norm triangle inequality and scaling, the sqrt-square
/// round trip, and exact ε² annihilation.
#[test]
fn scalar_algebra_randomized_suite() {
    let _g = quiet_core();
    let mut rng = ChaCha8Rng::seed_from_u64(0xD0A1_0007);
    let zero_c = Complex64::new(0.0, 0.0);

    fn draw(rng: &mut ChaCha8Rng, case: usize, salt: usize) -> DualComplex {
        let style = (case + salt) % 23;
        let (std_scale, inf_scale) = match style {
            0 => (0.0, 3.0),        // purely infinitesimal
            1 => (0.0, 0.0),        // exactly zero
            2 => (3.0, 0.0),        // purely classical
            _ => (3.0, 3.0),
        };
        DualComplex::new(rand_c(rng, std_scale), rand_c(rng, inf_scale)).unwrap()
    }

    for case in 0..10_000 {
        let p = draw(&mut rng, case, 0);
        let q = draw(&mut rng, case, 7);

        // Magnitude is invariant under conjugation.
        assert!(
            p.magnitude().approx_eq(p.conj().magnitude(), 1e-10, 1e-9),
            "case {case}: |p| != |conj p| for {p:?}"
        );

        // Magnitude is nonnegative and definite.
        let mag = p.magnitude();
        assert!(mag >= zero_dual(), "case {case}: |p| < 0 for {p:?}");
        let p_is_zero = p.std() == zero_c && p.inf() == zero_c;
        assert_eq!(
            mag == zero_dual(),
            p_is_zero,
            "case {case}: |p| = 0 iff p = 0 violated for {p:?}"
        );

        // Magnitude is multiplicative.
        let lhs = (p * q).magnitude();
        let rhs = p.magnitude() * q.magnitude();
        assert!(
            lhs.approx_eq(rhs, 1e-10, 1e-9),
            "case {case}: |pq| = ({:.12e}, {:.12e}) but |p||q| = ({:.12e}, {:.12e})",
            lhs.std(),
            lhs.inf(),
            rhs.std(),
            rhs.inf()
        );

        // Triangle inequality for scalars, in the dual total order.
        assert!(
            (p + q)
                .magnitude()
                .approx_le(p.magnitude() + q.magnitude(), 1e-10, 1e-9),
            "case {case}: |p+q| > |p|+|q| for {p:?}, {q:?}"
        );

        // Vector 2-norm: triangle inequality and |q|-homogeneity on DC^3.
        let x = DCVector::from_fn(3, |_| draw(&mut rng, case, 11));
        let y = DCVector::from_fn(3, |_| draw(&mut rng, case, 13));
        assert!(
            x.add(&y)
                .unwrap()
                .norm2()
                .approx_le(x.norm2() + y.norm2(), 1e-10, 1e-9),
            "case {case}: vector triangle inequality violated"
        );
        assert!(
            x.scale(p)
                .norm2()
                .approx_eq(p.magnitude() * x.norm2(), 1e-10, 1e-9),
            "case {case}: ||p·x|| != |p|·||x||"
        );

        // sqrt of a perfect square round-trips.
        let d = DualNumber::new(rng.gen_range(-3.0..3.0), rng.gen_range(-3.0..3.0)).unwrap();
        let square = d * d;
        let root = square.sqrt().expect("squares are nonnegative");
        assert!(
            (root * root).approx_eq(square, 1e-10, 1e-9),
            "case {case}: sqrt({square:?})^2 missed"
        );

        // ε² annihilates exactly: the product of two purely infinitesimal
        // numbers is bitwise zero.
        let e1 = DualComplex::new(zero_c, rand_c(&mut rng, 3.0)).unwrap();
        let e2 = DualComplex::new(zero_c, rand_c(&mut rng, 3.0)).unwrap();
        let prod = e1 * e2;
        assert!(
            prod.std() == zero_c && prod.inf() == zero_c,
            "case {case}: ε·ε did not annihilate"
        );
    }
    println!(
        "[PASS] 10000 scalar cases: magnitude axioms, triangle inequalities, \
         sqrt round trip and exact ε² annihilation at (1e-10, 1e-9)"
    );
}

/// Criterion 8: the Frobenius norm survives multiplication by unitary
/// factors built with the orthonormal-completion routine, on 100 random
/// (U, A, V) triples, to (1e-10, 1e-9).
#[test]
fn frobenius_norm_unitary_invariance() {
    let _g = quiet_core();
    let mut rng = ChaCha8Rng::seed_from_u64(0xD0A1_0008);

    // Random unit dual vector, completed to a full unitary.
    fn completed_unitary(rng: &mut ChaCha8Rng, n: usize) -> DCMatrix {
        let x = DCVector::from_fn(n, |_| {
            DualComplex::new(rand_c(rng, 1.0), rand_c(rng, 1.0)).unwrap()
        });
        let inv = x.norm2().recip().expect("generic vector is appreciable");
        let unit = x.scale(inv.into());
        let seed = DCMatrix::from_fn(n, 1, |i, _| unit.at(i));
        seed.extend_to_unitary(1e-10).expect("unit column extends")
    }

    let mut worst = (0.0f64, 0.0f64);
    for trial in 0..100 {
        let m = rng.gen_range(1..=12);
        let n = rng.gen_range(1..=12);
        let a = random_matrix(&mut rng, m, n, 1.0, 1.0);
        let u = completed_unitary(&mut rng, m);
        let v = completed_unitary(&mut rng, n);
        let rotated = u.mat_mul(&a).unwrap().mat_mul(&v).unwrap();
        let before = a.fro_norm();
        let after = rotated.fro_norm();
        assert!(
            after.approx_eq(before, 1e-10, 1e-9),
            "trial {trial} ({m}x{n}): ||UAV|| = ({:.12e}, {:.12e}) vs ||A|| = ({:.12e}, {:.12e})",
            after.std(),
            after.inf(),
            before.std(),
            before.inf()
        );
        worst = (
            worst.0.max((after.std() - before.std()).abs()),
            worst.1.max((after.inf() - before.inf()).abs()),
        );
    }
    println!(
        "[PASS] Frobenius norm invariant under 100 random completed-unitary rotations: \
         worst drift ({:.2e}, {:.2e}) vs (1e-10, 1e-9)",
        worst.0, worst.1
    );
}

fn splitmix64(x: u64) -> u64 {
    let mut z = x.wrapping_add(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Deterministic wave-plus-noise image; the noise keeps the spectrum of the
/// transform full-rank and well spread.
fn synthetic_image(n: usize, salt: u64) -> GrayImage {
    let mut pixels = Vec::with_capacity(n * n);
    for i in 0..n {
        for j in 0..n {
            let wave = 60.0 * (i as f64 / 5.0).sin() * (j as f64 / 7.0).cos();
            let noise = (splitmix64((i * n + j) as u64 ^ salt) % 51) as f64 - 25.0;
            pixels.push((128.0 + wave + noise).round().clamp(0.0, 255.0));
        }
    }
    GrayImage::new(n, n, pixels).expect("dimensions are consistent")
}

/// Criterion 9: on the shipped 64x64 image pair, the reported relative
/// errors equal the independent discarded-tail computation to (1e-9, 1e-8),
/// the standard parts decrease strictly in k, and the full-rank error is
/// exactly zero; a full 512x512 run finishes inside 60 s.
#[test]
fn image_pipeline_error_table_and_large_run() {
    let _g = quiet_core();
    let fixtures = Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures");
    let std_img = load_pgm(&fixtures.join("image_std_64.pgm")).unwrap();
    let inf_img = load_pgm(&fixtures.join("image_inf_64.pgm")).unwrap();
    let ks: Vec<usize> = (1..=64).collect();
    let summary = run_image(&std_img, &inf_img, &ks, None).unwrap();
    assert_eq!(summary.errors.len(), 64);

    // Independent check: relative error at k is the norm of the discarded
    // singular-value tail over the norm of the matrix, in dual arithmetic.
    let a = images_to_matrix(&std_img, &inf_img).unwrap();
    let inv_norm = a.fro_norm().recip().unwrap();
    let mut worst = (0.0f64, 0.0f64);
    for (k, err) in &summary.errors {
        let mut acc = zero_dual();
        for sv in &summary.svd.sigma[*k..] {
            acc += *sv * *sv;
        }
        let tail = acc.sqrt().unwrap() * inv_norm;
        assert!(
            err.approx_eq(tail, 1e-9, 1e-8),
            "k={k}: reported ({:.12e}, {:.12e}) vs tail ({:.12e}, {:.12e})",
            err.std(),
            err.inf(),
            tail.std(),
            tail.inf()
        );
        worst = (
            worst.0.max((err.std() - tail.std()).abs()),
            worst.1.max((err.inf() - tail.inf()).abs()),
        );
    }

    // Spot-check against the error of the actual reconstruction.
    for k in [1usize, 8, 32] {
        let ak = truncate(&summary.svd, k).unwrap();
        let direct = a.sub(&ak).unwrap().fro_norm() * inv_norm;
        let reported = summary.errors[k - 1].1;
        assert!(
            reported.approx_eq(direct, 1e-9, 1e-8),
            "k={k}: reported error differs from the reconstruction's"
        );
    }

    // The CSV rendering round-trips the same numbers exactly.
    let csv = errors_csv(&summary.errors);
    for (line, (k, err)) in csv.lines().skip(1).zip(&summary.errors) {
        let fields: Vec<&str> = line.split(',').collect();
        assert_eq!(fields[0].parse::<usize>().unwrap(), *k);
        assert_eq!(fields[1].parse::<f64>().unwrap(), err.std());
        assert_eq!(fields[2].parse::<f64>().unwrap(), err.inf());
    }

    // Standard parts strictly decrease, and the full-rank error is zero.
    for w in summary.errors.windows(2) {
        assert!(
            w[0].1.std() > w[1].1.std(),
            "error not strictly decreasing between k={} and k={}",
            w[0].0,
            w[1].0
        );
    }
    let last = summary.errors.last().unwrap().1;
    assert_eq!(last.std(), 0.0, "full-rank standard error must vanish");
    assert_eq!(last.inf(), 0.0, "full-rank infinitesimal error must vanish");

    // Full-size run with file output, inside the budget.
    let big_std = synthetic_image(512, 0x00C0_FFEE);
    let big_inf = synthetic_image(512, 0x0BAD_F00D);
    let out = tempfile::tempdir().unwrap();
    let t0 = Instant::now();
    let big = run_image(&big_std, &big_inf, &[5, 15, 25, 35, 45], Some(out.path())).unwrap();
    let dt = t0.elapsed();
    assert!(dt < Duration::from_secs(60), "512x512 took {dt:?}, budget 60 s");
    assert_eq!(big.errors.len(), 5);
    for w in big.errors.windows(2) {
        assert!(w[0].1.std() > w[1].1.std());
    }
    // errors.csv plus a standard and an infinitesimal reconstruction per k.
    assert_eq!(big.written.len(), 11);
    for path in &big.written {
        assert!(path.exists(), "missing output {path:?}");
    }
    println!(
        "[PASS] image pipeline: 64x64 errors match the tail identity to (1e-9, 1e-8) \
         (worst drift {:.2e}, {:.2e}), strictly decreasing, exact zero at k=64; \
         512x512 run with outputs in {dt:?}",
        worst.0, worst.1
    );
}
