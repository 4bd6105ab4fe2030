//! Synthetic circular laws, samplers and Monte-Carlo error metrics.

mod metrics;
mod sampling;

use std::f64::consts::{PI, TAU};

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::angle::{wrap, Angle};
use crate::error::{ensure_finite, Error, Result};
use crate::kernels::{von_mises_pdf, wrapped_cauchy_pdf, VonMisesParams, WrappedCauchyParams};

pub use metrics::{
    ise, mise_experiment, poisson_smoothed_density, poisson_smoothing_error, EstimatorConfig, Method,
    MiseReport, Smoothing,
};
pub use sampling::{sample_mixture, sample_mixture_with_labels, sample_von_mises, sample_wrapped_cauchy};

/// Seed for the ChaCha8 generator used by every sampler.
///
/// Replication `i` of an experiment draws from stream `i` of the generator
/// seeded with the master seed, so replications are independent of each
/// other and of how they are scheduled.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct RngSeed(pub u64);

impl RngSeed {
    pub fn rng(self) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(self.0)
    }

    pub fn stream(self, index: u64) -> ChaCha8Rng {
        let mut rng = self.rng();
        rng.set_stream(index);
        rng
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WrappedNormalParams {
    pub mu: Angle,
    sigma: f64,
}

impl WrappedNormalParams {
    /// `sigma` is the standard deviation of the unwrapped normal law, `> 0`.
    pub fn new(mu: Angle, sigma: f64) -> Result<Self> {
        ensure_finite("sigma", sigma)?;
        if sigma <= 0.0 {
            return Err(Error::OutOfRange {
                name: "sigma",
                value: sigma,
                range: "(0, inf)",
            });
        }
        Ok(Self { mu, sigma })
    }

    pub fn sigma(&self) -> f64 {
        self.sigma
    }

    /// Wrapping sum `sum_k phi((theta - mu + 2 pi k) / sigma) / sigma`, cut once
    /// both new terms drop below 1e-16.
    pub fn pdf(&self, theta: f64) -> f64 {
        let d = wrap(theta - self.mu.radians());
        let norm = 1.0 / (self.sigma * TAU.sqrt());
        let term = |x: f64| norm * (-0.5 * (x / self.sigma).powi(2)).exp();
        let mut sum = term(d);
        let mut k = 1.0;
        loop {
            let plus = term(d + TAU * k);
            let minus = term(d - TAU * k);
            sum += plus + minus;
            if plus < 1e-16 && minus < 1e-16 {
                break;
            }
            k += 1.0;
        }
        sum
    }
}

/// A known circular density used as the target of simulation studies.
#[derive(Debug, Clone, PartialEq)]
pub enum TrueDensity {
    WrappedCauchy(WrappedCauchyParams),
    VonMises(VonMisesParams),
    WrappedNormal(WrappedNormalParams),
    /// Positive weights summing to one, each paired with a component law.
    Mixture(Vec<(f64, TrueDensity)>),
}

impl TrueDensity {
    pub fn uniform() -> Self {
        TrueDensity::WrappedCauchy(WrappedCauchyParams::new(Angle::ZERO, 0.0).expect("rho = 0 is valid"))
    }

    pub fn wrapped_cauchy(mu: f64, rho: f64) -> Result<Self> {
        Ok(TrueDensity::WrappedCauchy(WrappedCauchyParams::new(Angle::new(mu)?, rho)?))
    }

    pub fn von_mises(mu: f64, nu: f64) -> Result<Self> {
        Ok(TrueDensity::VonMises(VonMisesParams::new(Angle::new(mu)?, nu)?))
    }

    pub fn wrapped_normal(mu: f64, sigma: f64) -> Result<Self> {
        Ok(TrueDensity::WrappedNormal(WrappedNormalParams::new(Angle::new(mu)?, sigma)?))
    }

    pub fn mixture(components: Vec<(f64, TrueDensity)>) -> Result<Self> {
        if components.is_empty() {
            return Err(Error::InvalidMixture("no components".into()));
        }
        if let Some((w, _)) = components.iter().find(|(w, _)| !(w.is_finite() && *w > 0.0)) {
            return Err(Error::InvalidMixture(format!("weight {w} is not positive")));
        }
        let total: f64 = components.iter().map(|(w, _)| w).sum();
        if (total - 1.0).abs() > 1e-12 {
            return Err(Error::InvalidMixture(format!("weights sum to {total}, not 1")));
        }
        Ok(TrueDensity::Mixture(components))
    }

    /// Density per radian at `theta`.
    pub fn pdf(&self, theta: f64) -> f64 {
        match self {
            TrueDensity::WrappedCauchy(p) => wrapped_cauchy_pdf(Angle(wrap(theta)), p),
            TrueDensity::VonMises(p) => {
                von_mises_pdf(Angle(wrap(theta)), p).expect("validated concentration")
            }
            TrueDensity::WrappedNormal(p) => p.pdf(theta),
            TrueDensity::Mixture(parts) => parts.iter().map(|(w, d)| w * d.pdf(theta)).sum(),
        }
    }

    /// The truths used by the smoothing-error and simulation checks: a
    /// wrapped Cauchy, a von Mises, a wrapped normal, a symmetric bimodal and
    /// an asymmetric bimodal mixture.
    pub fn builtins() -> Vec<(&'static str, TrueDensity)> {
        let vm = |mu: f64, nu: f64| TrueDensity::von_mises(mu, nu).expect("valid");
        vec![
            ("wc(0,0.5)", TrueDensity::wrapped_cauchy(0.0, 0.5).expect("valid")),
            ("vm(0,2)", vm(0.0, 2.0)),
            ("wn(1,0.6)", TrueDensity::wrapped_normal(1.0, 0.6).expect("valid")),
            (
                "vm(-pi/2,5)+vm(pi/2,5)",
                TrueDensity::mixture(vec![(0.5, vm(-PI / 2.0, 5.0)), (0.5, vm(PI / 2.0, 5.0))]).expect("valid"),
            ),
            (
                "0.3 vm(-2,8)+0.7 wc(1,0.6)",
                TrueDensity::mixture(vec![
                    (0.3, vm(-2.0, 8.0)),
                    (0.7, TrueDensity::wrapped_cauchy(1.0, 0.6).expect("valid")),
                ])
                .expect("valid"),
            ),
        ]
    }

    pub fn is_uniform(&self) -> bool {
        match self {
            TrueDensity::WrappedCauchy(p) => p.rho() == 0.0,
            TrueDensity::VonMises(p) => p.nu() == 0.0,
            TrueDensity::WrappedNormal(_) => false,
            TrueDensity::Mixture(parts) => parts.iter().all(|(_, d)| d.is_uniform()),
        }
    }
}
