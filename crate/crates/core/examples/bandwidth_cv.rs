//! Cross-validated concentration for both kernels and both criteria.

use circkde::selection::{cross_validate, default_candidates, CvCriterion};
use circkde::simlab::{ise, RngSeed, TrueDensity};
use circkde::{kernel_estimate, uniform_grid, KernelKind, KernelSpec};

fn main() -> circkde::Result<()> {
    let truth = TrueDensity::wrapped_cauchy(0.0, 0.8)?;
    let sample = truth.sample(500, RngSeed(21))?;
    let grid = uniform_grid(1024)?;

    for kind in [KernelKind::WrappedCauchy, KernelKind::VonMises] {
        for criterion in [CvCriterion::LooLogLik, CvCriterion::Lscv] {
            let cv = cross_validate(&sample, kind, &default_candidates(kind), criterion)?;
            let est = kernel_estimate(&sample, &KernelSpec::new(kind, cv.best)?, &grid);
            println!(
                "{:>3} {:>10}: best {:>8.4}  ISE {:.4e}",
                kind.name(),
                criterion.name(),
                cv.best,
                ise(&est, &truth)?
            );
        }
    }
    Ok(())
}
