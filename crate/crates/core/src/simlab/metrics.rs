use rayon::prelude::*;

use super::{RngSeed, TrueDensity};
use crate::angle::{uniform_grid, AngleSample, DensityEstimate, EvalGrid};
use crate::error::{Error, Result};
use crate::estimators::{kernel_estimate, series_estimate};
use crate::kernels::{check_radius, wc_density, KernelKind, KernelSpec};
use crate::selection::{cross_validate, CvCriterion};

/// Smallest uniform grid accepted by [`ise`].
pub const MIN_ISE_GRID: usize = 256;
/// Quadrature nodes for the smoothing integral in [`poisson_smoothed_density`].
pub const SMOOTHING_NODES: usize = 8192;
/// Grid on which [`poisson_smoothing_error`] takes its maximum.
pub const SMOOTHING_EVAL_POINTS: usize = 1024;

/// Integrated squared error of an estimate against a known density.
///
/// The estimate must live on a uniform grid with at least 256 points.
pub fn ise(estimate: &DensityEstimate, truth: &TrueDensity) -> Result<f64> {
    let grid = estimate.grid();
    if !grid.is_uniform() || grid.len() < MIN_ISE_GRID {
        return Err(Error::GridTooSmall {
            needed: MIN_ISE_GRID,
            got: if grid.is_uniform() { grid.len() } else { 0 },
        });
    }
    let sq: Vec<f64> = estimate
        .iter()
        .map(|(t, v)| {
            let d = v - truth.pdf(t);
            d * d
        })
        .collect();
    Ok(grid.integrate(&sq))
}

/// Smoothing rule for a kernel estimator.
#[derive(Debug, Clone, PartialEq)]
pub enum Smoothing {
    Fixed(f64),
    /// Chosen per sample by cross-validation over `candidates`.
    Cv {
        criterion: CvCriterion,
        candidates: Vec<f64>,
    },
}

#[derive(Debug, Clone, PartialEq)]
pub enum Method {
    Kernel { kind: KernelKind, smoothing: Smoothing },
    Series { n_star: usize },
}

#[derive(Debug, Clone, PartialEq)]
pub struct EstimatorConfig {
    pub method: Method,
    /// Uniform evaluation grid size, at least 256.
    pub grid_size: usize,
}

impl EstimatorConfig {
    /// Fits the configured estimator; returns it with the concentration used, if any.
    pub fn fit(&self, sample: &AngleSample) -> Result<(DensityEstimate, Option<f64>)> {
        let grid = uniform_grid(self.grid_size)?;
        match &self.method {
            Method::Kernel { kind, smoothing } => {
                let c = match smoothing {
                    Smoothing::Fixed(c) => *c,
                    Smoothing::Cv {
                        criterion,
                        candidates,
                    } => cross_validate(sample, *kind, candidates, *criterion)?.best,
                };
                let spec = KernelSpec::new(*kind, c)?;
                Ok((kernel_estimate(sample, &spec, &grid), Some(c)))
            }
            Method::Series { n_star } => Ok((series_estimate(sample, *n_star, &grid), None)),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct MiseReport {
    pub sample_size: usize,
    pub mean: f64,
    /// Standard error of `mean` (sample standard deviation over `sqrt(reps)`).
    pub std_err: f64,
    pub ises: Vec<f64>,
    /// Concentration used in each replication (kernel methods only).
    pub chosen: Vec<Option<f64>>,
}

/// Mean integrated squared error over `reps` independent samples of size `n`.
///
/// Replication `i` samples from stream `i` of the master seed, so the report
/// is identical however the replications are scheduled.
pub fn mise_experiment(
    truth: &TrueDensity,
    config: &EstimatorConfig,
    n: usize,
    reps: usize,
    seed: RngSeed,
) -> Result<MiseReport> {
    if reps < 2 {
        return Err(Error::OutOfRange {
            name: "reps",
            value: reps as f64,
            range: "[2, inf)",
        });
    }
    if config.grid_size < MIN_ISE_GRID {
        return Err(Error::GridTooSmall {
            needed: MIN_ISE_GRID,
            got: config.grid_size,
        });
    }
    let runs = (0..reps as u64)
        .into_par_iter()
        .map(|i| {
            let sample = truth.sample_with(n, &mut seed.stream(i))?;
            let (est, c) = config.fit(&sample)?;
            Ok((ise(&est, truth)?, c))
        })
        .collect::<Result<Vec<_>>>()?;
    let (ises, chosen): (Vec<f64>, Vec<Option<f64>>) = runs.into_iter().unzip();
    let k = ises.len() as f64;
    let mean = ises.iter().sum::<f64>() / k;
    let var = ises.iter().map(|x| (x - mean).powi(2)).sum::<f64>() / (k - 1.0);
    Ok(MiseReport {
        sample_size: n,
        mean,
        std_err: (var / k).sqrt(),
        ises,
        chosen,
    })
}

/// `f*(theta) = int f(eta) f_WC(theta; eta, r) d eta` at each grid point,
/// by the periodic trapezoid on 8192 nodes.
pub fn poisson_smoothed_density(truth: &TrueDensity, r: f64, grid: &EvalGrid) -> Result<Vec<f64>> {
    check_radius("r", r)?;
    let nodes = uniform_grid(SMOOTHING_NODES)?;
    let h = std::f64::consts::TAU / SMOOTHING_NODES as f64;
    let f: Vec<f64> = nodes.points().iter().map(|&eta| truth.pdf(eta)).collect();
    if grid.is_uniform() && SMOOTHING_NODES.is_multiple_of(grid.len()) {
        // grid points coincide with nodes: the kernel only depends on the index offset
        let stride = SMOOTHING_NODES / grid.len();
        let kernel: Vec<f64> = (0..SMOOTHING_NODES).map(|d| wc_density(r, d as f64 * h)).collect();
        return Ok((0..grid.len())
            .into_par_iter()
            .map(|i| {
                let at = i * stride;
                h * f
                    .iter()
                    .enumerate()
                    .map(|(j, fe)| fe * kernel[(at + SMOOTHING_NODES - j) % SMOOTHING_NODES])
                    .sum::<f64>()
            })
            .collect());
    }
    Ok(grid
        .points()
        .par_iter()
        .map(|&theta| {
            h * nodes
                .points()
                .iter()
                .zip(&f)
                .map(|(&eta, &fe)| fe * wc_density(r, theta - eta))
                .sum::<f64>()
        })
        .collect())
}

/// `max |f* - f|` over a 1024-point uniform grid, with `f*` the Poisson
/// (wrapped-Cauchy) smoothing of `truth` at radius `r`.
pub fn poisson_smoothing_error(truth: &TrueDensity, r: f64) -> Result<f64> {
    let grid = uniform_grid(SMOOTHING_EVAL_POINTS)?;
    let smoothed = poisson_smoothed_density(truth, r, &grid)?;
    Ok(grid
        .points()
        .iter()
        .zip(&smoothed)
        .map(|(&t, s)| (s - truth.pdf(t)).abs())
        .fold(0.0, f64::max))
}
