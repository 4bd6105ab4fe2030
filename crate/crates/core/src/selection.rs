//! Smoothing-parameter selection by cross-validation over a candidate grid,
//! and the truncation point of the weighted series.

use std::f64::consts::TAU;

use rayon::prelude::*;

use crate::angle::{uniform_grid, AngleSample};
use crate::error::{ensure_finite, Error, Result};
use crate::estimators::{kernel_estimate, series_tail_bound};
use crate::kernels::{check_radius, KernelKind, KernelSpec};

/// Nodes used for the integral of the squared estimate in least-squares CV.
pub const LSCV_NODES: usize = 4096;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CvCriterion {
    /// Leave-one-out log-likelihood, maximized.
    LooLogLik,
    /// Least-squares (integrated squared error) CV, minimized.
    Lscv,
}

impl CvCriterion {
    pub fn name(self) -> &'static str {
        match self {
            CvCriterion::LooLogLik => "loo-loglik",
            CvCriterion::Lscv => "lscv",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct CvResult {
    /// Candidates in ascending order.
    pub candidate_grid: Vec<f64>,
    /// One score per candidate, same order.
    pub scores: Vec<f64>,
    pub best: f64,
    pub criterion: CvCriterion,
}

impl CvResult {
    pub fn best_index(&self) -> usize {
        self.candidate_grid
            .iter()
            .position(|&c| c == self.best)
            .expect("best is one of the candidates")
    }
}

/// Pairwise `sin^2((theta_i - theta_j) / 2)`, stored as the strict upper triangle.
struct PairTable {
    n: usize,
    half_sin_sq: Vec<f64>,
}

impl PairTable {
    fn new(sample: &AngleSample) -> Self {
        let t = sample.to_radians_vec();
        let n = t.len();
        let mut half_sin_sq = Vec::with_capacity(n * (n - 1) / 2);
        for i in 0..n {
            for j in i + 1..n {
                let s = (0.5 * (t[i] - t[j])).sin();
                half_sin_sq.push(s * s);
            }
        }
        Self { n, half_sin_sq }
    }

    /// Leave-one-out densities `f_{-i}(theta_i)` for every `i`.
    fn loo_densities(&self, kernel: &KernelSpec) -> Vec<f64> {
        let mut acc = vec![0.0; self.n];
        let mut pairs = self.half_sin_sq.iter();
        for i in 0..self.n {
            for j in i + 1..self.n {
                let k = kernel_at(kernel, *pairs.next().expect("table covers all pairs"));
                acc[i] += k;
                acc[j] += k;
            }
        }
        let inv = 1.0 / (self.n - 1) as f64;
        acc.iter_mut().for_each(|v| *v *= inv);
        acc
    }
}

// Kernel value from s = sin^2(delta / 2); cos(delta) = 1 - 2 s.
#[inline]
fn kernel_at(kernel: &KernelSpec, s: f64) -> f64 {
    let c = kernel.concentration();
    match kernel.kind() {
        KernelKind::WrappedCauchy => {
            let a = 1.0 - c;
            (1.0 - c) * (1.0 + c) / (TAU * (a * a + 4.0 * c * s))
        }
        KernelKind::VonMises => kernel.density(0.0) * (-2.0 * c * s).exp(),
    }
}

fn prepare(sample: &AngleSample, kind: KernelKind, candidates: &[f64]) -> Result<Vec<KernelSpec>> {
    if sample.len() < 2 {
        return Err(Error::SampleTooSmall {
            needed: 2,
            got: sample.len(),
        });
    }
    if candidates.is_empty() {
        return Err(Error::Empty("candidates"));
    }
    let mut sorted = candidates.to_vec();
    for &c in &sorted {
        kind.check_concentration(c)?;
    }
    sorted.sort_by(f64::total_cmp);
    sorted.iter().map(|&c| KernelSpec::new(kind, c)).collect()
}

fn pick(kernels: &[KernelSpec], scores: Vec<f64>, criterion: CvCriterion) -> CvResult {
    let better = |a: f64, b: f64| match criterion {
        CvCriterion::LooLogLik => a > b,
        CvCriterion::Lscv => a < b,
    };
    // strict improvement only, so ties go to the smaller concentration
    let mut best = 0;
    for i in 1..scores.len() {
        if better(scores[i], scores[best]) {
            best = i;
        }
    }
    CvResult {
        candidate_grid: kernels.iter().map(KernelSpec::concentration).collect(),
        best: kernels[best].concentration(),
        scores,
        criterion,
    }
}

/// Leave-one-out log-likelihood CV: `score(c) = sum_i ln f_{-i}(theta_i; c)`, maximized.
pub fn loo_loglik_cv(sample: &AngleSample, kind: KernelKind, candidates: &[f64]) -> Result<CvResult> {
    let kernels = prepare(sample, kind, candidates)?;
    let table = PairTable::new(sample);
    let scores = kernels
        .par_iter()
        .map(|k| table.loo_densities(k).iter().map(|d| d.ln()).sum())
        .collect();
    Ok(pick(&kernels, scores, CvCriterion::LooLogLik))
}

/// Least-squares CV: `score(c) = int f^2 - (2/N) sum_i f_{-i}(theta_i; c)`, minimized.
///
/// The integral uses a periodic trapezoid on [`LSCV_NODES`] points.
pub fn lscv(sample: &AngleSample, kind: KernelKind, candidates: &[f64]) -> Result<CvResult> {
    let kernels = prepare(sample, kind, candidates)?;
    let table = PairTable::new(sample);
    let grid = uniform_grid(LSCV_NODES)?;
    let n = sample.len() as f64;
    let scores = kernels
        .par_iter()
        .map(|k| {
            let est = kernel_estimate(sample, k, &grid);
            let squares: Vec<f64> = est.values().iter().map(|v| v * v).collect();
            let loo: f64 = table.loo_densities(k).iter().sum();
            grid.integrate(&squares) - 2.0 / n * loo
        })
        .collect();
    Ok(pick(&kernels, scores, CvCriterion::Lscv))
}

pub fn cross_validate(
    sample: &AngleSample,
    kind: KernelKind,
    candidates: &[f64],
    criterion: CvCriterion,
) -> Result<CvResult> {
    match criterion {
        CvCriterion::LooLogLik => loo_loglik_cv(sample, kind, candidates),
        CvCriterion::Lscv => lscv(sample, kind, candidates),
    }
}

/// Smallest `n*` whose tail bound `r^(n*+1) / (pi (1 - r))` is at most `tail_tol`.
///
/// With that many terms the weighted series is within `tail_tol` of the
/// Carathéodory (equivalently wrapped-Cauchy) estimate at radius `r`.
pub fn select_n_star(r: f64, tail_tol: f64) -> Result<usize> {
    check_radius("r", r)?;
    ensure_finite("tail_tol", tail_tol)?;
    if tail_tol <= 0.0 {
        return Err(Error::OutOfRange {
            name: "tail_tol",
            value: tail_tol,
            range: "(0, inf)",
        });
    }
    if r == 0.0 {
        return Ok(0);
    }
    let fits = |n: usize| series_tail_bound(r, n) <= tail_tol;
    // start from the log solution and correct for rounding either way
    let guess = ((tail_tol * std::f64::consts::PI * (1.0 - r)).ln() / r.ln() - 1.0).ceil();
    let mut n = if guess.is_finite() && guess > 0.0 { guess as usize } else { 0 };
    while n > 0 && fits(n - 1) {
        n -= 1;
    }
    while !fits(n) {
        n += 1;
    }
    Ok(n)
}

/// Default candidate grid for a kernel kind: `0.05, 0.10, ..., 0.95` for the
/// wrapped Cauchy and a log-spaced ladder on `[0.25, 100]` for von Mises.
pub fn default_candidates(kind: KernelKind) -> Vec<f64> {
    match kind {
        // finer near one so large samples are not pinned to the top candidate
        KernelKind::WrappedCauchy => (1..=19)
            .map(|i| i as f64 * 0.05)
            .chain([0.97, 0.98, 0.99])
            .collect(),
        KernelKind::VonMises => (0..=20)
            .map(|i| 0.25 * 400f64.powf(i as f64 / 20.0))
            .map(|v| v.min(crate::MAX_VON_MISES_CONCENTRATION))
            .collect(),
    }
}
