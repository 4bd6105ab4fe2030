//! Acceptance suite. Each test checks one criterion at its pinned tolerance and
//! prints a single PASS/FAIL line (visible with `--nocapture`).

use std::f64::consts::{PI, TAU};
use std::process::Command;
use std::time::{Duration, Instant};

use circkde::cli::parse_density_csv;
use circkde::estimators::{opuc_density_estimate, series_tail_bound, trig_moments, wc_estimate, weighted_series_estimate};
use circkde::kernels::{check_approximate_identity, poisson_kernel, wrapped_cauchy_pdf};
use circkde::selection::{select_n_star, CvCriterion};
use circkde::simlab::{
    mise_experiment, poisson_smoothed_density, poisson_smoothing_error, sample_wrapped_cauchy, EstimatorConfig,
    Method, RngSeed, Smoothing, TrueDensity,
};
use circkde::special::complex_poisson;
use circkde::{
    kernel_estimate, uniform_grid, Angle, AngleSample, Complex, DiskPoint, KernelKind, KernelSpec,
    WrappedCauchyParams, MAX_RADIUS,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn report(id: u32, name: &str, pass: bool, detail: String, elapsed: Duration, budget: Duration) {
    let in_time = elapsed <= budget;
    let status = if pass && in_time { "PASS" } else { "FAIL" };
    println!(
        "[{status}] criterion {id:>2}: {name} | {detail} | {:.2}s (budget {:.0}s)",
        elapsed.as_secs_f64(),
        budget.as_secs_f64()
    );
    assert!(pass, "criterion {id} ({name}) failed: {detail}");
    assert!(in_time, "criterion {id} ({name}) exceeded its runtime budget");
}

fn angle(x: f64) -> Angle {
    Angle::new(x).unwrap()
}

fn random_sample(rng: &mut ChaCha8Rng, n: usize) -> AngleSample {
    AngleSample::new((0..n).map(|_| rng.random_range(-PI..PI))).unwrap()
}

#[test]
fn c01_kernel_caratheodory_equivalence() {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(0xC01);
    let sizes = [1, 2, 10, 100, 1000];
    let radii = [0.0, 0.5, 0.9, 0.99, 1.0 - 1e-6];
    let grid = uniform_grid(512).unwrap();
    let mut worst: f64 = 0.0;
    for case in 0..200 {
        let n = sizes[case % sizes.len()];
        let r = radii[(case / sizes.len()) % radii.len()];
        let sample = random_sample(&mut rng, n);
        let a = wc_estimate(&sample, r, &grid).unwrap();
        let b = opuc_density_estimate(&sample, r, &grid).unwrap();
        worst = worst.max(a.max_abs_diff(&b));
    }
    report(
        1,
        "kernel/OPUC equivalence",
        worst < 1e-10,
        format!("max |wc - opuc| = {worst:.3e} over 200 cases (tol 1e-10)"),
        start.elapsed(),
        Duration::from_secs(10),
    );
}

#[test]
fn c02_poisson_wrapped_cauchy_identity() {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(0xC02);
    let mut worst: f64 = 0.0;
    for _ in 0..10_000 {
        let r = rng.random_range(0.0..1.0);
        let t = angle(rng.random_range(-PI..PI));
        let p = angle(rng.random_range(-PI..PI));
        let pk = poisson_kernel(r, t, p).unwrap();
        let wc = wrapped_cauchy_pdf(t, &WrappedCauchyParams::new(p, r).unwrap());
        worst = worst.max((pk - TAU * wc).abs());
    }
    report(
        2,
        "P_r = 2 pi f_WC",
        worst < 1e-12,
        format!("max abs diff = {worst:.3e} over 10000 triples (tol 1e-12)"),
        start.elapsed(),
        Duration::from_secs(1),
    );
}

#[test]
fn c03_complex_real_poisson_identity() {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(0xC03);
    let mut worst: f64 = 0.0;
    for _ in 0..10_000 {
        let r = rng.random_range(0.0..1.0);
        let t = angle(rng.random_range(-PI..PI));
        let p = angle(rng.random_range(-PI..PI));
        let pk = poisson_kernel(r, t, p).unwrap();
        let c = complex_poisson(DiskPoint::new(r, t).unwrap(), p);
        worst = worst.max((pk - c.re).abs());
    }
    report(
        3,
        "P_r = Re C(z, omega)",
        worst < 1e-12,
        format!("max abs diff = {worst:.3e} over 10000 triples (tol 1e-12)"),
        start.elapsed(),
        Duration::from_secs(1),
    );
}

#[test]
fn c04_series_convergence() {
    const ROUNDING_SLACK: f64 = 1e-13;
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(0xC04);
    let grid = uniform_grid(256).unwrap();
    let mut bound_ok = true;
    let mut worst_ratio: f64 = 0.0;
    let mut worst_selected: f64 = 0.0;
    for _ in 0..100 {
        let n = rng.random_range(1..=100);
        let r = rng.random_range(0.0..0.99);
        let k = rng.random_range(0..=60);
        let sample = random_sample(&mut rng, n);
        let exact = opuc_density_estimate(&sample, r, &grid).unwrap();

        let truncated = weighted_series_estimate(&sample, r, k, &grid).unwrap();
        let bound = series_tail_bound(r, k);
        let err = truncated.max_abs_diff(&exact);
        // the bound is exact-arithmetic; both paths also carry ~1e-16 relative rounding
        if err > bound + ROUNDING_SLACK {
            bound_ok = false;
        }
        if bound > ROUNDING_SLACK {
            worst_ratio = worst_ratio.max(err / bound);
        }

        let n_star = select_n_star(r, 1e-8).unwrap();
        let selected = weighted_series_estimate(&sample, r, n_star, &grid).unwrap();
        worst_selected = worst_selected.max(selected.max_abs_diff(&exact));
    }
    report(
        4,
        "weighted series -> Caratheodory estimate",
        bound_ok && worst_selected < 1e-8,
        format!("max err/bound = {worst_ratio:.3}, max err at selected n* = {worst_selected:.3e} (tol 1e-8)"),
        start.elapsed(),
        Duration::from_secs(10),
    );
}

#[test]
fn c05_approximate_identity_and_smoothing() {
    let start = Instant::now();
    let family = |n: usize| KernelSpec::wrapped_cauchy(1.0 - 1.0 / n as f64);
    let identity = check_approximate_identity(family, 0.5, &[2, 10, 100, 1000]).unwrap();

    let ladder = [0.5, 0.9, 0.99, 0.999];
    let mut all_decreasing = true;
    let mut details = Vec::new();
    for (name, truth) in TrueDensity::builtins() {
        let errs: Vec<f64> = ladder
            .iter()
            .map(|&r| poisson_smoothing_error(&truth, r).unwrap())
            .collect();
        let dec = errs.windows(2).all(|w| w[1] < w[0]);
        all_decreasing &= dec;
        details.push(format!("{name}: {:.2e}", errs[3]));
    }
    let vm_err = poisson_smoothing_error(&TrueDensity::von_mises(0.0, 2.0).unwrap(), 0.999).unwrap();
    let pass = identity.nonnegative && identity.normalized && identity.concentrating && all_decreasing && vm_err < 0.01;
    report(
        5,
        "approximate identity + smoothing convergence",
        pass,
        format!(
            "A={} B={} C={} ladder decreasing={} vm(0,2) err@0.999={vm_err:.3e} [{}]",
            identity.nonnegative,
            identity.normalized,
            identity.concentrating,
            all_decreasing,
            details.join(", ")
        ),
        start.elapsed(),
        Duration::from_secs(30),
    );
}

#[test]
fn c06_normalization() {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(0xC06);
    let grid = uniform_grid(4096).unwrap();
    let mut worst: f64 = 0.0;
    for case in 0..50 {
        let n = rng.random_range(1..=200);
        let sample = random_sample(&mut rng, n);
        let est = match case % 3 {
            0 => wc_estimate(&sample, rng.random_range(0.0..0.99), &grid).unwrap(),
            1 => kernel_estimate(&sample, &KernelSpec::von_mises(rng.random_range(0.0..100.0)).unwrap(), &grid),
            _ => opuc_density_estimate(&sample, rng.random_range(0.0..0.99), &grid).unwrap(),
        };
        worst = worst.max((est.integral() - 1.0).abs());
    }
    report(
        6,
        "kernel estimates integrate to one",
        worst < 1e-8,
        format!("max |integral - 1| = {worst:.3e} over 50 configurations (tol 1e-8)"),
        start.elapsed(),
        Duration::from_secs(5),
    );
}

#[test]
fn c07_closed_form_smoothing() {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(0xC07);
    let grid = uniform_grid(1024).unwrap();
    let mut worst_pointwise: f64 = 0.0;
    let mut worst_sup: f64 = 0.0;
    for _ in 0..4 {
        let mu = rng.random_range(-PI..PI);
        let rho = rng.random_range(0.05..0.95);
        let truth = TrueDensity::wrapped_cauchy(mu, rho).unwrap();
        for &r in &[0.3, 0.6, 0.9, 0.99] {
            let predicted = TrueDensity::wrapped_cauchy(mu, rho * r).unwrap();
            let smoothed = poisson_smoothed_density(&truth, r, &grid).unwrap();
            let mut sup: f64 = 0.0;
            for (&t, s) in grid.points().iter().zip(&smoothed) {
                worst_pointwise = worst_pointwise.max((s - predicted.pdf(t)).abs());
                sup = sup.max((predicted.pdf(t) - truth.pdf(t)).abs());
            }
            let err = poisson_smoothing_error(&truth, r).unwrap();
            worst_sup = worst_sup.max((err - sup).abs());
        }
    }
    report(
        7,
        "Poisson smoothing of WC(rho) is WC(rho r)",
        worst_pointwise < 1e-6 && worst_sup < 1e-6,
        format!("max pointwise = {worst_pointwise:.3e}, sup-error mismatch = {worst_sup:.3e} (tol 1e-6)"),
        start.elapsed(),
        Duration::from_secs(5),
    );
}

#[test]
fn c08_sampler_fidelity() {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(0xC08);
    let n = 10_000;
    let tol = 4.0 / (n as f64).sqrt();
    let mut worst: f64 = 0.0;
    for i in 0..10 {
        let mu = rng.random_range(-PI..PI);
        let rho = rng.random_range(0.0..0.95);
        let params = WrappedCauchyParams::new(angle(mu), rho).unwrap();
        let sample = sample_wrapped_cauchy(&params, n, RngSeed(1000 + i)).unwrap();
        // c_1 = mean of e^{-i theta}; its conjugate is the mean resultant, E = rho e^{i mu}
        let c1 = trig_moments(&sample, 1).unwrap().get(1).unwrap();
        worst = worst.max((c1.conj() - Complex::from_polar(rho, mu)).norm());
    }
    report(
        8,
        "wrapped-Cauchy sampler first moment",
        worst < tol,
        format!("max |c1 - rho e^(i mu)| = {worst:.3e} (tol {tol:.3e})"),
        start.elapsed(),
        Duration::from_secs(5),
    );
}

#[test]
fn c09_consistency_experiment() {
    let start = Instant::now();
    let truth = TrueDensity::wrapped_cauchy(0.0, 0.8).unwrap();
    let config = EstimatorConfig {
        method: Method::Kernel {
            kind: KernelKind::WrappedCauchy,
            smoothing: Smoothing::Cv {
                criterion: CvCriterion::LooLogLik,
                candidates: (1..=19).map(|i| i as f64 * 0.05).collect(),
            },
        },
        grid_size: 512,
    };
    let seed = RngSeed(20_240_901);
    let small = mise_experiment(&truth, &config, 50, 50, seed).unwrap();
    let large = mise_experiment(&truth, &config, 500, 50, seed).unwrap();
    report(
        9,
        "MISE decreases with sample size (CV-selected rho)",
        large.mean < small.mean,
        format!(
            "MISE(50) = {:.4e} ± {:.1e}, MISE(500) = {:.4e} ± {:.1e}",
            small.mean, small.std_err, large.mean, large.std_err
        ),
        start.elapsed(),
        Duration::from_secs(60),
    );
}

#[test]
fn c10_cli_round_trip_and_determinism() {
    let start = Instant::now();
    let dir = tempfile::tempdir().unwrap();
    let bin = env!("CARGO_BIN_EXE_circkde");
    let run = |extra: &[&str], out: &std::path::Path| {
        let status = Command::new(bin)
            .args(extra)
            .arg("--output")
            .arg(out)
            .status()
            .unwrap();
        assert!(status.success());
        std::fs::read(out).unwrap()
    };

    let est_args = [
        "--command", "estimate", "--synthetic", "wc:0:0.8", "--size", "300", "--seed", "17",
        "--concentration", "cv", "--grid", "360",
    ];
    let a = run(&est_args, &dir.path().join("a.csv"));
    let b = run(&est_args, &dir.path().join("b.csv"));
    let identical = a == b;

    // the written grid reproduces the in-process estimate bit for bit
    let rows = parse_density_csv(std::str::from_utf8(&a).unwrap()).unwrap();
    let sample = TrueDensity::wrapped_cauchy(0.0, 0.8).unwrap().sample(300, RngSeed(17)).unwrap();
    let rho = circkde::selection::loo_loglik_cv(
        &sample,
        KernelKind::WrappedCauchy,
        &circkde::selection::default_candidates(KernelKind::WrappedCauchy),
    )
    .unwrap()
    .best;
    let est = wc_estimate(&sample, rho, &uniform_grid(360).unwrap()).unwrap();
    let round_trip = rows.len() == 360
        && rows
            .iter()
            .zip(est.iter())
            .all(|(&(t, v), (t0, v0))| t.to_bits() == t0.to_bits() && v.to_bits() == v0.to_bits());

    let eq = run(
        &["--command", "equivalence", "--synthetic", "vm:1:4", "--size", "1000", "--seed", "3", "--concentration", "0.99"],
        &dir.path().join("eq.csv"),
    );
    let text = String::from_utf8(eq).unwrap();
    let diff: f64 = text.lines().nth(1).unwrap().rsplit(',').next().unwrap().parse().unwrap();

    report(
        10,
        "CLI determinism, round trip, equivalence command",
        identical && round_trip && diff < 1e-10,
        format!("byte-identical={identical} round-trip={round_trip} equivalence max diff={diff:.3e}"),
        start.elapsed(),
        Duration::from_secs(30),
    );
    let _ = MAX_RADIUS;
}
