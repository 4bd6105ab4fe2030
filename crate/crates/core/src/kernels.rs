//! Circular kernels: wrapped Cauchy, von Mises and the real Poisson kernel.

use std::f64::consts::{PI, TAU};

use crate::angle::{uniform_grid, Angle};
use crate::error::{ensure_finite, Error, Result};
use crate::special::bessel_i0;
use crate::{MAX_RADIUS, MAX_VON_MISES_CONCENTRATION};

pub(crate) fn check_radius(name: &'static str, r: f64) -> Result<f64> {
    ensure_finite(name, r)?;
    if !(0.0..=MAX_RADIUS).contains(&r) {
        return Err(Error::OutOfRange {
            name,
            value: r,
            range: "[0, 1 - 1e-8]",
        });
    }
    Ok(r)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WrappedCauchyParams {
    pub mu: Angle,
    rho: f64,
}

impl WrappedCauchyParams {
    /// `rho` must lie in `[0, 1 - 1e-8]`.
    pub fn new(mu: Angle, rho: f64) -> Result<Self> {
        Ok(Self {
            mu,
            rho: check_radius("rho", rho)?,
        })
    }

    pub fn rho(&self) -> f64 {
        self.rho
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct VonMisesParams {
    pub mu: Angle,
    nu: f64,
}

impl VonMisesParams {
    /// `nu >= 0`; `nu = 0` is the circular uniform law.
    pub fn new(mu: Angle, nu: f64) -> Result<Self> {
        ensure_finite("nu", nu)?;
        if nu < 0.0 {
            return Err(Error::OutOfRange {
                name: "nu",
                value: nu,
                range: "[0, inf)",
            });
        }
        Ok(Self { mu, nu })
    }

    pub fn nu(&self) -> f64 {
        self.nu
    }
}

/// `(1 - r)^2 + 4 r sin^2(delta / 2)`, i.e. `1 + r^2 - 2 r cos(delta)` without
/// the cancellation near `delta = 0`, `r = 1`.
#[inline]
fn poisson_denominator(r: f64, delta: f64) -> f64 {
    let s = (0.5 * delta).sin();
    let a = 1.0 - r;
    a * a + 4.0 * r * s * s
}

/// Wrapped Cauchy density `(1 - rho^2) / (2 pi (1 + rho^2 - 2 rho cos(theta - mu)))`.
pub fn wrapped_cauchy_pdf(theta: Angle, params: &WrappedCauchyParams) -> f64 {
    wc_density(params.rho, theta.radians() - params.mu.radians())
}

#[inline]
pub(crate) fn wc_density(rho: f64, delta: f64) -> f64 {
    (1.0 - rho) * (1.0 + rho) / (TAU * poisson_denominator(rho, delta))
}

/// Von Mises density `exp(nu cos(theta - mu)) / (2 pi I0(nu))`.
pub fn von_mises_pdf(theta: Angle, params: &VonMisesParams) -> Result<f64> {
    let norm = TAU * bessel_i0(params.nu)?;
    Ok((params.nu * (theta.radians() - params.mu.radians()).cos()).exp() / norm)
}

/// Real Poisson kernel `P_r(theta, phi) = (1 - r^2) / (1 + r^2 - 2 r cos(theta - phi))`.
pub fn poisson_kernel(r: f64, theta: Angle, phi: Angle) -> Result<f64> {
    ensure_finite("r", r)?;
    if !(0.0..1.0).contains(&r) {
        return Err(Error::OutOfRange {
            name: "r",
            value: r,
            range: "[0, 1)",
        });
    }
    let delta = theta.radians() - phi.radians();
    Ok((1.0 - r) * (1.0 + r) / poisson_denominator(r, delta))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum KernelKind {
    WrappedCauchy,
    VonMises,
}

impl KernelKind {
    pub fn name(self) -> &'static str {
        match self {
            KernelKind::WrappedCauchy => "wc",
            KernelKind::VonMises => "vm",
        }
    }

    /// Checks `c` against the legal concentration range of this kind.
    pub fn check_concentration(self, c: f64) -> Result<f64> {
        match self {
            KernelKind::WrappedCauchy => check_radius("rho", c),
            KernelKind::VonMises => {
                ensure_finite("nu", c)?;
                if !(0.0..=MAX_VON_MISES_CONCENTRATION).contains(&c) {
                    return Err(Error::OutOfRange {
                        name: "nu",
                        value: c,
                        range: "[0, 100]",
                    });
                }
                Ok(c)
            }
        }
    }
}

/// A circular kernel density centred at zero, with its concentration.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct KernelSpec {
    kind: KernelKind,
    concentration: f64,
    // 1 / (2 pi I0(nu)) for von Mises; unused otherwise
    vm_norm: f64,
}

impl KernelSpec {
    pub fn new(kind: KernelKind, concentration: f64) -> Result<Self> {
        let concentration = kind.check_concentration(concentration)?;
        let vm_norm = match kind {
            KernelKind::WrappedCauchy => 0.0,
            KernelKind::VonMises => 1.0 / (TAU * bessel_i0(concentration)?),
        };
        Ok(Self {
            kind,
            concentration,
            vm_norm,
        })
    }

    pub fn wrapped_cauchy(rho: f64) -> Result<Self> {
        Self::new(KernelKind::WrappedCauchy, rho)
    }

    pub fn von_mises(nu: f64) -> Result<Self> {
        Self::new(KernelKind::VonMises, nu)
    }

    pub fn kind(&self) -> KernelKind {
        self.kind
    }

    pub fn concentration(&self) -> f64 {
        self.concentration
    }

    /// Kernel density at angular displacement `delta` (any real; the kernel is periodic).
    #[inline]
    pub fn density(&self, delta: f64) -> f64 {
        match self.kind {
            KernelKind::WrappedCauchy => wc_density(self.concentration, delta),
            KernelKind::VonMises => (self.concentration * delta.cos()).exp() * self.vm_norm,
        }
    }
}

/// One row of an approximate-identity check.
#[derive(Debug, Clone, PartialEq)]
pub struct IdentityRow {
    pub index: usize,
    pub concentration: f64,
    /// Smallest value of `K_n = 2 pi * density` over the quadrature nodes.
    pub min_value: f64,
    /// `(1 / 2 pi) * integral of K_n`.
    pub normalization: f64,
    /// Largest `K_n(theta)` over `|theta| >= delta`.
    pub tail_max: f64,
    /// Trapezoid nodes used for `normalization`.
    pub nodes: usize,
}

#[derive(Debug, Clone, PartialEq)]
pub struct IdentityReport {
    pub delta: f64,
    pub rows: Vec<IdentityRow>,
    /// `K_n >= 0` everywhere checked.
    pub nonnegative: bool,
    /// Every normalization within `NORMALIZATION_TOL` of one.
    pub normalized: bool,
    pub tail_strictly_decreasing: bool,
    /// Finite stand-in for the vanishing tail: strictly decreasing and the
    /// last tail maximum below 1% of the first.
    pub concentrating: bool,
}

impl IdentityReport {
    pub fn holds(&self) -> bool {
        self.nonnegative && self.normalized && self.concentrating
    }
}

pub const NORMALIZATION_TOL: f64 = 1e-8;
const MIN_NODES: usize = 4096;
const MAX_NODES: usize = 1 << 22;

fn trapezoid_nodes(kernel: &KernelSpec) -> Result<(usize, Vec<f64>, f64)> {
    // Start at 4096 nodes and double until the periodic trapezoid has
    // stopped moving; sharply peaked kernels alias on coarse grids.
    let mut m = MIN_NODES;
    let eval = |m: usize| -> Result<(Vec<f64>, f64)> {
        let grid = uniform_grid(m)?;
        let k: Vec<f64> = grid.points().iter().map(|&t| TAU * kernel.density(t)).collect();
        let norm = grid.integrate(&k) / TAU;
        Ok((k, norm))
    };
    let (mut values, mut norm) = eval(m)?;
    while m < MAX_NODES {
        let (finer, finer_norm) = eval(2 * m)?;
        let settled = (finer_norm - norm).abs() <= 1e-13;
        m *= 2;
        values = finer;
        norm = finer_norm;
        if settled {
            break;
        }
    }
    Ok((m, values, norm))
}

/// Checks the approximate-identity conditions for a kernel family indexed by `n`.
///
/// `family(n)` yields the kernel density for index `n`; the checker works with
/// `K_n = 2 pi * density`. The vanishing-tail condition is a limit, so it is
/// replaced by strict decrease of the tail maxima over `n_list` together with a
/// 100-fold reduction from the first to the last index.
pub fn check_approximate_identity<F>(family: F, delta: f64, n_list: &[usize]) -> Result<IdentityReport>
where
    F: Fn(usize) -> Result<KernelSpec>,
{
    if n_list.is_empty() {
        return Err(Error::Empty("n_list"));
    }
    ensure_finite("delta", delta)?;
    if !(delta > 0.0 && delta < PI) {
        return Err(Error::OutOfRange {
            name: "delta",
            value: delta,
            range: "(0, pi)",
        });
    }
    let mut rows = Vec::with_capacity(n_list.len());
    for &n in n_list {
        let kernel = family(n)?;
        let (nodes, values, normalization) = trapezoid_nodes(&kernel)?;
        let grid = uniform_grid(nodes)?;
        let min_value = values.iter().copied().fold(f64::INFINITY, f64::min);
        let tail_max = grid
            .points()
            .iter()
            .zip(&values)
            .filter(|(t, _)| t.abs() >= delta)
            .map(|(_, &k)| k)
            .chain([TAU * kernel.density(delta), TAU * kernel.density(-delta)])
            .fold(f64::NEG_INFINITY, f64::max);
        rows.push(IdentityRow {
            index: n,
            concentration: kernel.concentration(),
            min_value,
            normalization,
            tail_max,
            nodes,
        });
    }
    let nonnegative = rows.iter().all(|r| r.min_value >= 0.0);
    let normalized = rows
        .iter()
        .all(|r| (r.normalization - 1.0).abs() <= NORMALIZATION_TOL);
    let tail_strictly_decreasing = rows.windows(2).all(|w| w[1].tail_max < w[0].tail_max);
    let first = rows[0].tail_max;
    let last = rows[rows.len() - 1].tail_max;
    let concentrating = rows.len() >= 2 && tail_strictly_decreasing && last < 0.01 * first;
    Ok(IdentityReport {
        delta,
        rows,
        nonnegative,
        normalized,
        tail_strictly_decreasing,
        concentrating,
    })
}
