use rayon::prelude::*;

use crate::angle::{AngleSample, DensityEstimate, EstimateMeta, EstimatorKind, EvalGrid};
use crate::error::Result;
use crate::kernels::{check_radius, KernelKind, KernelSpec};

/// Kernel density estimate `(1/N) sum_j k(theta - theta_j)` on every grid point.
///
/// Grid points are evaluated independently; within a point the sum runs in
/// sample order, so the output does not depend on thread scheduling.
pub fn kernel_estimate(sample: &AngleSample, spec: &KernelSpec, grid: &EvalGrid) -> DensityEstimate {
    let inv_n = 1.0 / sample.len() as f64;
    let values = grid
        .points()
        .par_iter()
        .map(|&theta| sample.iter().map(|t| spec.density(theta - t)).sum::<f64>() * inv_n)
        .collect();
    let kind = match spec.kind() {
        KernelKind::WrappedCauchy => EstimatorKind::WrappedCauchy,
        KernelKind::VonMises => EstimatorKind::VonMises,
    };
    DensityEstimate::build(
        grid,
        values,
        EstimateMeta {
            kind,
            concentration: Some(spec.concentration()),
            n_star: None,
            sample_size: sample.len(),
            has_negative: false,
        },
    )
}

/// Wrapped-Cauchy kernel estimate with concentration `rho` in `[0, 1 - 1e-8]`.
pub fn wc_estimate(sample: &AngleSample, rho: f64, grid: &EvalGrid) -> Result<DensityEstimate> {
    let spec = KernelSpec::wrapped_cauchy(check_radius("rho", rho)?)?;
    Ok(kernel_estimate(sample, &spec, grid))
}

/// Von Mises kernel estimate with concentration `nu` in `[0, 100]`.
pub fn von_mises_estimate(sample: &AngleSample, nu: f64, grid: &EvalGrid) -> Result<DensityEstimate> {
    let spec = KernelSpec::von_mises(nu)?;
    Ok(kernel_estimate(sample, &spec, grid))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::angle::uniform_grid;
    use std::f64::consts::{FRAC_PI_2, PI, TAU};

    fn one_point(theta: f64) -> EvalGrid {
        EvalGrid::from_points(vec![theta]).unwrap()
    }

    #[test]
    fn single_point_sample_is_the_kernel() {
        let s = AngleSample::new([0.0]).unwrap();
        let est = wc_estimate(&s, 0.5, &one_point(0.0)).unwrap();
        assert!((est.values()[0] - 3.0 / TAU).abs() < 1e-14);
        let est = wc_estimate(&s, 0.5, &one_point(-PI)).unwrap();
        assert!((est.values()[0] - 1.0 / (6.0 * PI)).abs() < 1e-14);
    }

    #[test]
    fn flat_kernels_give_uniform() {
        let s = AngleSample::new([0.3, -2.0, 2.9]).unwrap();
        let g = uniform_grid(16).unwrap();
        for spec in [KernelSpec::wrapped_cauchy(0.0).unwrap(), KernelSpec::von_mises(0.0).unwrap()] {
            let est = kernel_estimate(&s, &spec, &g);
            assert!(est.values().iter().all(|v| (v - 1.0 / TAU).abs() < 1e-15));
        }
    }

    #[test]
    fn two_point_average() {
        let s = AngleSample::new([-FRAC_PI_2, FRAC_PI_2]).unwrap();
        let est = wc_estimate(&s, 0.5, &one_point(0.0)).unwrap();
        // each term: (1 - 0.25) / (1 + 0.25 - 0) / (2 pi)
        let expected = 0.75 / 1.25 / TAU;
        assert!((est.values()[0] - expected).abs() < 1e-15);
        assert!((est.values()[0] - 0.09549).abs() < 1e-5);
    }

    #[test]
    fn meta_is_filled() {
        let s = AngleSample::new([0.0, 1.0]).unwrap();
        let est = von_mises_estimate(&s, 2.0, &uniform_grid(8).unwrap()).unwrap();
        assert_eq!(est.meta().kind, EstimatorKind::VonMises);
        assert_eq!(est.meta().concentration, Some(2.0));
        assert_eq!(est.meta().sample_size, 2);
        assert!(!est.meta().has_negative);
    }

    #[test]
    fn rho_range_enforced() {
        let s = AngleSample::new([0.0]).unwrap();
        let g = uniform_grid(4).unwrap();
        assert!(wc_estimate(&s, 1.0, &g).is_err());
        assert!(wc_estimate(&s, -0.2, &g).is_err());
        assert!(wc_estimate(&s, crate::MAX_RADIUS, &g).is_ok());
    }
}
