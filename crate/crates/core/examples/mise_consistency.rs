//! Monte-Carlo MISE of the CV-tuned wrapped-Cauchy estimator as the sample grows.

use circkde::selection::{default_candidates, CvCriterion};
use circkde::simlab::{mise_experiment, EstimatorConfig, Method, RngSeed, Smoothing, TrueDensity};
use circkde::KernelKind;

fn main() -> circkde::Result<()> {
    let truth = TrueDensity::wrapped_cauchy(0.0, 0.8)?;
    let config = EstimatorConfig {
        method: Method::Kernel {
            kind: KernelKind::WrappedCauchy,
            smoothing: Smoothing::Cv {
                criterion: CvCriterion::LooLogLik,
                candidates: default_candidates(KernelKind::WrappedCauchy),
            },
        },
        grid_size: 512,
    };
    println!("{:>6} {:>12} {:>10} {:>10}", "N", "MISE", "std err", "mean rho");
    for n in [25, 50, 100, 200, 400, 800] {
        let report = mise_experiment(&truth, &config, n, 50, RngSeed(2024))?;
        let rho = report.chosen.iter().flatten().sum::<f64>() / report.chosen.len() as f64;
        println!("{n:>6} {:>12.4e} {:>10.2e} {rho:>10.3}", report.mean, report.std_err);
    }
    Ok(())
}
