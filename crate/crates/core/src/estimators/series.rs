use std::f64::consts::{PI, TAU};

use rayon::prelude::*;

use crate::angle::{AngleSample, DensityEstimate, EstimateMeta, EstimatorKind, EvalGrid};
use crate::error::{Error, Result};
use crate::kernels::check_radius;
use crate::special::Complex;

/// Empirical trigonometric moments `c_n = (1/N) sum_j e^{-i n theta_j}`, `n = 1..=n_star`.
#[derive(Debug, Clone, PartialEq)]
pub struct TrigMomentVector {
    moments: Vec<Complex>,
}

impl TrigMomentVector {
    pub fn n_star(&self) -> usize {
        self.moments.len()
    }

    /// Moment of order `n` (1-based).
    pub fn get(&self, n: usize) -> Option<Complex> {
        n.checked_sub(1).and_then(|i| self.moments.get(i)).copied()
    }

    pub fn as_slice(&self) -> &[Complex] {
        &self.moments
    }
}

pub fn trig_moments(sample: &AngleSample, n_star: usize) -> Result<TrigMomentVector> {
    if n_star == 0 {
        return Err(Error::OutOfRange {
            name: "n_star",
            value: 0.0,
            range: "[1, inf)",
        });
    }
    Ok(TrigMomentVector {
        moments: moments(sample, n_star),
    })
}

fn moments(sample: &AngleSample, n_star: usize) -> Vec<Complex> {
    let inv_n = 1.0 / sample.len() as f64;
    (1..=n_star)
        .into_par_iter()
        .map(|n| {
            let k = n as f64;
            let (re, im) = sample.iter().fold((0.0, 0.0), |(re, im), t| {
                let (s, c) = (k * t).sin_cos();
                (re + c, im - s)
            });
            Complex::new(re * inv_n, im * inv_n)
        })
        .collect()
}

/// `(1 / 2 pi) (1 + 2 sum_n w_n Re(c_n e^{i n theta}))` at each grid point.
fn weighted_sum(moments: &[Complex], weights: &[f64], grid: &EvalGrid) -> Vec<f64> {
    grid.points()
        .par_iter()
        .map(|&theta| {
            let tail: f64 = moments
                .iter()
                .zip(weights)
                .enumerate()
                .map(|(i, (c, w))| {
                    let (s, co) = ((i + 1) as f64 * theta).sin_cos();
                    w * (c.re * co - c.im * s)
                })
                .sum();
            (1.0 + 2.0 * tail) / TAU
        })
        .collect()
}

fn meta(kind: EstimatorKind, r: Option<f64>, n_star: usize, sample: &AngleSample) -> EstimateMeta {
    EstimateMeta {
        kind,
        concentration: r,
        n_star: Some(n_star),
        sample_size: sample.len(),
        has_negative: false,
    }
}

/// Truncated orthogonal-series estimate with `n_star` harmonics.
///
/// Negative values are kept as-is and flagged in the metadata.
pub fn series_estimate(sample: &AngleSample, n_star: usize, grid: &EvalGrid) -> DensityEstimate {
    let m = moments(sample, n_star);
    let values = weighted_sum(&m, &vec![1.0; n_star], grid);
    DensityEstimate::build(grid, values, meta(EstimatorKind::Series, None, n_star, sample))
}

/// Same estimate as [`series_estimate`], evaluated as the double sum
/// `1/(2 pi) + 1/(pi N) sum_j sum_n cos n(theta - theta_j)` without moments.
pub fn series_estimate_direct(sample: &AngleSample, n_star: usize, grid: &EvalGrid) -> DensityEstimate {
    let n = sample.len() as f64;
    let values = grid
        .points()
        .par_iter()
        .map(|&theta| {
            let s: f64 = sample
                .iter()
                .map(|t| (1..=n_star).map(|k| (k as f64 * (theta - t)).cos()).sum::<f64>())
                .sum();
            1.0 / TAU + s / (PI * n)
        })
        .collect();
    DensityEstimate::build(grid, values, meta(EstimatorKind::Series, None, n_star, sample))
}

/// Series of the empirical Carathéodory function at radius `r`, truncated at `n_star`:
/// `(1 / 2 pi) (1 + 2 sum_{n <= n_star} r^n Re(c_n e^{i n theta}))`.
///
/// Differs from the Carathéodory estimate by at most [`series_tail_bound`].
pub fn weighted_series_estimate(
    sample: &AngleSample,
    r: f64,
    n_star: usize,
    grid: &EvalGrid,
) -> Result<DensityEstimate> {
    check_radius("r", r)?;
    let m = moments(sample, n_star);
    let mut w = 1.0;
    let weights: Vec<f64> = (0..n_star)
        .map(|_| {
            w *= r;
            w
        })
        .collect();
    let values = weighted_sum(&m, &weights, grid);
    Ok(DensityEstimate::build(
        grid,
        values,
        meta(EstimatorKind::WeightedSeries, Some(r), n_star, sample),
    ))
}

/// Upper bound `r^(n_star + 1) / (pi (1 - r))` on the sup-distance between the
/// weighted series truncated at `n_star` and its infinite sum.
pub fn series_tail_bound(r: f64, n_star: usize) -> f64 {
    r.powf(n_star as f64 + 1.0) / (PI * (1.0 - r))
}
