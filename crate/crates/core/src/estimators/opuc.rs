use std::f64::consts::TAU;

use rayon::prelude::*;

use crate::angle::{Angle, AngleSample, DensityEstimate, EstimateMeta, EstimatorKind, EvalGrid};
use crate::error::Result;
use crate::kernels::check_radius;
use crate::special::{complex_poisson, Complex, DiskPoint};

/// The empirical Carathéodory function at one disk point.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CaratheodoryEval {
    pub z: DiskPoint,
    /// `F_N(z) = (1/N) sum_j (e^{i theta_j} + z) / (e^{i theta_j} - z)`.
    pub value: Complex,
    /// `Re F_N(z) / (2 pi)`.
    pub density_part: f64,
}

fn empirical_caratheodory(sample: &AngleSample, z: DiskPoint) -> Complex {
    let sum = sample
        .angles()
        .iter()
        .fold(Complex::new(0.0, 0.0), |acc, &omega| acc + complex_poisson(z, omega));
    sum / sample.len() as f64
}

/// Evaluates `F_N` at `z`; `|z|` may not exceed `1 - 1e-8`.
pub fn caratheodory_estimate(sample: &AngleSample, z: DiskPoint) -> Result<CaratheodoryEval> {
    check_radius("r", z.r())?;
    let value = empirical_caratheodory(sample, z);
    Ok(CaratheodoryEval {
        z,
        value,
        density_part: value.re / TAU,
    })
}

/// Density estimate `Re F_N(r e^{i theta}) / (2 pi)` on the grid.
pub fn opuc_density_estimate(sample: &AngleSample, r: f64, grid: &EvalGrid) -> Result<DensityEstimate> {
    check_radius("r", r)?;
    let points = grid
        .points()
        .iter()
        .map(|&t| DiskPoint::new(r, Angle::new(t)?))
        .collect::<Result<Vec<_>>>()?;
    let values = points
        .par_iter()
        .map(|&z| empirical_caratheodory(sample, z).re / TAU)
        .collect();
    Ok(DensityEstimate::build(
        grid,
        values,
        EstimateMeta {
            kind: EstimatorKind::Opuc,
            concentration: Some(r),
            n_star: None,
            sample_size: sample.len(),
            has_negative: false,
        },
    ))
}
