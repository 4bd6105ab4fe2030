//! Truncated series estimates: the plain series may go negative, while the
//! r^n-weighted series converges geometrically to the kernel estimate.

use circkde::estimators::series_tail_bound;
use circkde::selection::select_n_star;
use circkde::simlab::{RngSeed, TrueDensity};
use circkde::{opuc_density_estimate, series_estimate, uniform_grid, weighted_series_estimate};

fn main() -> circkde::Result<()> {
    let sample = TrueDensity::wrapped_normal(0.0, 0.4)?.sample(60, RngSeed(2))?;
    let grid = uniform_grid(512)?;
    let r = 0.9;
    let exact = opuc_density_estimate(&sample, r, &grid)?;

    println!("{:>4} {:>12} {:>12}", "n*", "error", "bound");
    for n_star in [0, 5, 10, 20, 40, 80, 160] {
        let est = weighted_series_estimate(&sample, r, n_star, &grid)?;
        println!("{n_star:>4} {:>12.3e} {:>12.3e}", est.max_abs_diff(&exact), series_tail_bound(r, n_star));
    }
    let n_star = select_n_star(r, 1e-10)?;
    println!("selected n* for tolerance 1e-10: {n_star}");

    for n_star in [3, 15, 40] {
        let plain = series_estimate(&sample, n_star, &grid);
        println!(
            "plain series n*={n_star:>2}: min {:+.4}, negative values: {}",
            plain.min_value(),
            plain.meta().has_negative
        );
    }
    Ok(())
}
