//! Approximate-identity checks for kernel families, and Poisson smoothing of
//! known densities as r approaches one.

use circkde::kernels::check_approximate_identity;
use circkde::simlab::{poisson_smoothing_error, TrueDensity};
use circkde::KernelSpec;

fn main() -> circkde::Result<()> {
    let ns = [2, 10, 100, 1000];
    let wc = check_approximate_identity(|n| KernelSpec::wrapped_cauchy(1.0 - 1.0 / n as f64), 0.5, &ns)?;
    // small nu still spreads mass past delta, so the von Mises ladder starts at 10
    let vm = check_approximate_identity(|n| KernelSpec::von_mises(n as f64), 0.5, &[10, 30, 60, 100])?;
    for (name, report) in [("wrapped Cauchy, rho = 1 - 1/n", &wc), ("von Mises, nu = n", &vm)] {
        println!("{name}: holds = {}", report.holds());
        for row in &report.rows {
            println!("  {row:?}");
        }
    }

    println!("\nsup |f* - f| under Poisson smoothing");
    for (name, truth) in TrueDensity::builtins() {
        let errs: Vec<String> = [0.5, 0.9, 0.99, 0.999]
            .iter()
            .map(|&r| poisson_smoothing_error(&truth, r).map(|e| format!("{e:.2e}")))
            .collect::<circkde::Result<_>>()?;
        println!("  {name:<28} {}", errs.join("  "));
    }
    Ok(())
}
