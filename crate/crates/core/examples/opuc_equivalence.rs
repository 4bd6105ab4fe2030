//! The wrapped-Cauchy kernel estimate and the real part of the empirical
//! Carathéodory function agree on every circle |z| = r.

use circkde::estimators::caratheodory_estimate;
use circkde::simlab::{RngSeed, TrueDensity};
use circkde::{opuc_density_estimate, uniform_grid, wc_estimate, DiskPoint};

fn main() -> circkde::Result<()> {
    let sample = TrueDensity::von_mises(0.5, 3.0)?.sample(250, RngSeed(5))?;
    let grid = uniform_grid(512)?;

    println!("{:>10} {:>14}", "r", "max |diff|");
    for r in [0.0, 0.3, 0.6, 0.9, 0.99, 1.0 - 1e-6] {
        let kernel = wc_estimate(&sample, r, &grid)?;
        let disk = opuc_density_estimate(&sample, r, &grid)?;
        println!("{r:>10.6} {:>14.3e}", kernel.max_abs_diff(&disk));
    }

    // F_N at a single interior point
    let z = DiskPoint::from_polar(0.7, 0.5)?;
    let f = caratheodory_estimate(&sample, z)?;
    println!("F_N(0.7 e^0.5i) = {:.6} (density part {:.6})", f.value, f.density_part);
    Ok(())
}
