//! Special functions and complex helpers on the unit disk.

use crate::angle::Angle;
use crate::error::{ensure_finite, Error, Result};

pub use num_complex::Complex64 as Complex;

/// Modified Bessel function of the first kind, order zero.
///
/// Summed from the ascending series `sum_k (x/2)^(2k) / (k!)^2`, stopping once
/// the next term is below `1e-17` of the running sum. All terms are positive,
/// so the result is accurate to a few ulps for the concentrations used here
/// (`x <= 100`); it overflows past `x ~ 700`.
pub fn bessel_i0(x: f64) -> Result<f64> {
    ensure_finite("bessel argument", x)?;
    if x < 0.0 {
        return Err(Error::OutOfRange {
            name: "bessel argument",
            value: x,
            range: "[0, inf)",
        });
    }
    let q = 0.25 * x * x;
    let mut term = 1.0;
    let mut sum = 1.0;
    let mut k = 0.0_f64;
    loop {
        k += 1.0;
        term *= q / (k * k);
        sum += term;
        if term <= 1e-17 * sum {
            break;
        }
    }
    Ok(sum)
}

/// A point `r e^{i theta}` strictly inside the unit disk.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DiskPoint {
    r: f64,
    theta: Angle,
}

impl DiskPoint {
    pub fn new(r: f64, theta: Angle) -> Result<Self> {
        ensure_finite("radius", r)?;
        if !(0.0..1.0).contains(&r) {
            return Err(Error::OutOfRange {
                name: "radius",
                value: r,
                range: "[0, 1)",
            });
        }
        Ok(Self { r, theta })
    }

    pub fn from_polar(r: f64, theta: f64) -> Result<Self> {
        Self::new(r, Angle::new(theta)?)
    }

    pub fn r(&self) -> f64 {
        self.r
    }

    pub fn theta(&self) -> Angle {
        self.theta
    }

    pub fn to_complex(&self) -> Complex {
        Complex::from_polar(self.r, self.theta.radians())
    }
}

/// Complex Poisson kernel `(omega + z) / (omega - z)` with `omega = e^{i phi}`.
///
/// Evaluated in the frame rotated by `-phi`, where it reads `(1 + w) / (1 - w)`
/// with `w = r e^{i(theta - phi)}`. The real part of `1 - w` is formed as
/// `(1 - r) + 2 r sin^2((theta - phi) / 2)` so it stays accurate when `z`
/// approaches `omega`.
pub fn complex_poisson(z: DiskPoint, omega_angle: Angle) -> Complex {
    let delta = z.theta.radians() - omega_angle.radians();
    let r = z.r;
    let (sin_d, cos_d) = delta.sin_cos();
    let half = (0.5 * delta).sin();
    let numerator = Complex::new(1.0 + r * cos_d, r * sin_d);
    let denominator = Complex::new((1.0 - r) + 2.0 * r * half * half, -r * sin_d);
    numerator / denominator
}
