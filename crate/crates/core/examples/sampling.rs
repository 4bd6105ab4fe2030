//! Seeded draws from the built-in laws and their first trigonometric moments.

use circkde::estimators::trig_moments;
use circkde::simlab::{sample_mixture_with_labels, RngSeed, TrueDensity};

fn main() -> circkde::Result<()> {
    let n = 20_000;
    for (name, truth) in TrueDensity::builtins() {
        let sample = truth.sample(n, RngSeed(8))?;
        // c_1 uses e^{-i theta}; its conjugate is the mean resultant vector
        let m = trig_moments(&sample, 1)?.get(1).expect("one moment").conj();
        println!("{name:<28} mean direction {:+.3}  resultant length {:.3}", m.arg(), m.norm());
    }

    let mix = TrueDensity::mixture(vec![
        (0.3, TrueDensity::von_mises(-2.0, 8.0)?),
        (0.7, TrueDensity::wrapped_cauchy(1.0, 0.6)?),
    ])?;
    let (_, labels) = sample_mixture_with_labels(&mix, n, RngSeed(9))?;
    let first = labels.iter().filter(|&&k| k == 0).count();
    println!("mixture: {:.4} of draws from component 0 (weight 0.3)", first as f64 / n as f64);
    Ok(())
}
