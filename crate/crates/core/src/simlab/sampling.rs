use std::f64::consts::PI;

use rand::Rng;
use rand_distr::{Cauchy, Distribution, Normal};

use super::{RngSeed, TrueDensity, WrappedNormalParams};
use crate::angle::{wrap, Angle, AngleSample};
use crate::error::{Error, Result};
use crate::kernels::{VonMisesParams, WrappedCauchyParams};

fn uniform_angle<R: Rng + ?Sized>(rng: &mut R) -> f64 {
    rng.random_range(-PI..PI)
}

/// Cauchy draw with location `mu` and scale `-ln rho`, wrapped onto the circle.
fn draw_wrapped_cauchy<R: Rng + ?Sized>(p: &WrappedCauchyParams, rng: &mut R) -> f64 {
    if p.rho() == 0.0 {
        return uniform_angle(rng);
    }
    let cauchy = Cauchy::new(p.mu.radians(), -p.rho().ln()).expect("positive scale");
    wrap(cauchy.sample(rng))
}

/// Best & Fisher (1979) rejection sampler.
fn draw_von_mises<R: Rng + ?Sized>(p: &VonMisesParams, rng: &mut R) -> f64 {
    let kappa = p.nu();
    if kappa == 0.0 {
        return uniform_angle(rng);
    }
    let root = (1.0 + 4.0 * kappa * kappa).sqrt();
    let tau = 1.0 + root;
    // (tau - sqrt(2 tau)) / (2 kappa), rearranged to avoid cancellation at small kappa
    let rho = 2.0 * kappa * tau / ((root + 1.0) * (tau + (2.0 * tau).sqrt()));
    let s = (1.0 + rho * rho) / (2.0 * rho);
    loop {
        let u1: f64 = rng.random();
        let u2: f64 = rng.random();
        let u3: f64 = rng.random();
        let z = (PI * u1).cos();
        let f = (1.0 + s * z) / (s + z);
        let c = kappa * (s - f);
        if c * (2.0 - c) - u2 > 0.0 || (c / u2).ln() + 1.0 - c >= 0.0 {
            let w = f.clamp(-1.0, 1.0).acos();
            let theta = if u3 > 0.5 { w } else { -w };
            return wrap(p.mu.radians() + theta);
        }
    }
}

fn draw_wrapped_normal<R: Rng + ?Sized>(p: &WrappedNormalParams, rng: &mut R) -> f64 {
    let normal = Normal::new(p.mu.radians(), p.sigma()).expect("positive sigma");
    wrap(normal.sample(rng))
}

impl TrueDensity {
    /// One draw, plus the index of the mixture component it came from (0 for non-mixtures).
    fn draw_labeled<R: Rng + ?Sized>(&self, rng: &mut R) -> (f64, usize) {
        match self {
            TrueDensity::WrappedCauchy(p) => (draw_wrapped_cauchy(p, rng), 0),
            TrueDensity::VonMises(p) => (draw_von_mises(p, rng), 0),
            TrueDensity::WrappedNormal(p) => (draw_wrapped_normal(p, rng), 0),
            TrueDensity::Mixture(parts) => {
                let u: f64 = rng.random();
                let mut acc = 0.0;
                let mut pick = parts.len() - 1;
                for (i, (w, _)) in parts.iter().enumerate() {
                    acc += w;
                    if u < acc {
                        pick = i;
                        break;
                    }
                }
                (parts[pick].1.draw_labeled(rng).0, pick)
            }
        }
    }

    /// `n` i.i.d. draws using the supplied generator.
    pub fn sample_with<R: Rng + ?Sized>(&self, n: usize, rng: &mut R) -> Result<AngleSample> {
        if n == 0 {
            return Err(Error::SampleTooSmall { needed: 1, got: 0 });
        }
        AngleSample::from_angles((0..n).map(|_| Angle(self.draw_labeled(rng).0)).collect())
    }

    /// `n` i.i.d. draws from a ChaCha8 generator seeded with `seed`.
    pub fn sample(&self, n: usize, seed: RngSeed) -> Result<AngleSample> {
        self.sample_with(n, &mut seed.rng())
    }
}

pub fn sample_wrapped_cauchy(params: &WrappedCauchyParams, n: usize, seed: RngSeed) -> Result<AngleSample> {
    TrueDensity::WrappedCauchy(*params).sample(n, seed)
}

pub fn sample_von_mises(params: &VonMisesParams, n: usize, seed: RngSeed) -> Result<AngleSample> {
    TrueDensity::VonMises(*params).sample(n, seed)
}

/// Draws from a mixture: a component is picked by weight, then sampled.
pub fn sample_mixture(density: &TrueDensity, n: usize, seed: RngSeed) -> Result<AngleSample> {
    sample_mixture_with_labels(density, n, seed).map(|(s, _)| s)
}

/// Like [`sample_mixture`], also returning the component index of each draw.
pub fn sample_mixture_with_labels(
    density: &TrueDensity,
    n: usize,
    seed: RngSeed,
) -> Result<(AngleSample, Vec<usize>)> {
    if !matches!(density, TrueDensity::Mixture(_)) {
        return Err(Error::InvalidMixture("not a mixture".into()));
    }
    if n == 0 {
        return Err(Error::SampleTooSmall { needed: 1, got: 0 });
    }
    let mut rng = seed.rng();
    let (angles, labels): (Vec<Angle>, Vec<usize>) = (0..n)
        .map(|_| {
            let (t, k) = density.draw_labeled(&mut rng);
            (Angle(t), k)
        })
        .unzip();
    Ok((AngleSample::from_angles(angles)?, labels))
}
