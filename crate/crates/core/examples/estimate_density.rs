//! Kernel density estimates of a bimodal sample with both kernels.
//!
//! Run with `cargo run --example estimate_density`.

use circkde::simlab::{RngSeed, TrueDensity};
use circkde::{kernel_estimate, uniform_grid, KernelSpec};

fn main() -> circkde::Result<()> {
    let truth = TrueDensity::mixture(vec![
        (0.6, TrueDensity::von_mises(-1.0, 6.0)?),
        (0.4, TrueDensity::wrapped_cauchy(2.0, 0.7)?),
    ])?;
    let sample = truth.sample(400, RngSeed(17))?;
    let grid = uniform_grid(24)?;

    let wc = kernel_estimate(&sample, &KernelSpec::wrapped_cauchy(0.85)?, &grid);
    let vm = kernel_estimate(&sample, &KernelSpec::von_mises(12.0)?, &grid);

    println!("{:>8} {:>9} {:>9} {:>9}", "theta", "truth", "wc(.85)", "vm(12)");
    for ((t, w), v) in wc.iter().zip(vm.values()) {
        println!("{t:>8.3} {:>9.4} {w:>9.4} {v:>9.4}", truth.pdf(t));
    }
    // a 24-point table is too coarse for quadrature; integrate on a fine grid instead
    let fine = uniform_grid(4096)?;
    println!(
        "integrals: wc {:.12}, vm {:.12}",
        kernel_estimate(&sample, &KernelSpec::wrapped_cauchy(0.85)?, &fine).integral(),
        kernel_estimate(&sample, &KernelSpec::von_mises(12.0)?, &fine).integral()
    );
    Ok(())
}
