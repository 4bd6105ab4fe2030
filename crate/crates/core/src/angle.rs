//! Angles, samples, evaluation grids and the density-estimate result type.

use std::f64::consts::{PI, TAU};
use std::fmt;

use crate::error::{ensure_finite, Error, Result};

/// An angle in radians, normalized to the half-open interval `[-pi, pi)`.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
#[repr(transparent)]
pub struct Angle(pub(crate) f64);

impl Angle {
    pub const ZERO: Angle = Angle(0.0);

    /// Normalizes `radians` into `[-pi, pi)`.
    pub fn new(radians: f64) -> Result<Self> {
        normalize_angle(radians)
    }

    pub fn from_degrees(degrees: f64) -> Result<Self> {
        ensure_finite("angle", degrees)?;
        normalize_angle(degrees.to_radians())
    }

    #[inline]
    pub fn radians(self) -> f64 {
        self.0
    }

    pub fn degrees(self) -> f64 {
        self.0.to_degrees()
    }

    /// Rotates by `alpha` radians and renormalizes.
    pub fn rotate(self, alpha: f64) -> Result<Self> {
        normalize_angle(self.0 + alpha)
    }
}

impl fmt::Display for Angle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl From<Angle> for f64 {
    fn from(a: Angle) -> f64 {
        a.0
    }
}

/// Reduces `x` into `[-pi, pi)`. Values already in range are returned unchanged.
pub fn normalize_angle(x: f64) -> Result<Angle> {
    ensure_finite("angle", x)?;
    Ok(Angle(wrap(x)))
}

pub(crate) fn wrap(x: f64) -> f64 {
    if (-PI..PI).contains(&x) {
        return x;
    }
    let y = (x + PI).rem_euclid(TAU) - PI;
    // rem_euclid can round up to exactly TAU
    if y >= PI {
        y - TAU
    } else {
        y.max(-PI)
    }
}

/// Shortest arc length between two angles, in `[0, pi]`.
pub fn circular_distance(a: Angle, b: Angle) -> f64 {
    let d = (a.0 - b.0).abs();
    d.min(TAU - d)
}

/// An ordered, non-empty collection of observed angles.
#[derive(Debug, Clone, PartialEq)]
pub struct AngleSample {
    angles: Vec<Angle>,
}

impl AngleSample {
    /// Builds a sample from raw radians, normalizing each value.
    pub fn new<I>(radians: I) -> Result<Self>
    where
        I: IntoIterator<Item = f64>,
    {
        let angles = radians
            .into_iter()
            .map(normalize_angle)
            .collect::<Result<Vec<_>>>()?;
        Self::from_angles(angles)
    }

    pub fn from_angles(angles: Vec<Angle>) -> Result<Self> {
        if angles.is_empty() {
            return Err(Error::SampleTooSmall { needed: 1, got: 0 });
        }
        Ok(Self { angles })
    }

    pub fn len(&self) -> usize {
        self.angles.len()
    }

    /// Always false; kept for API symmetry with `len`.
    pub fn is_empty(&self) -> bool {
        self.angles.is_empty()
    }

    pub fn angles(&self) -> &[Angle] {
        &self.angles
    }

    pub fn iter(&self) -> impl Iterator<Item = f64> + '_ {
        self.angles.iter().map(|a| a.0)
    }

    pub fn to_radians_vec(&self) -> Vec<f64> {
        self.iter().collect()
    }

    /// Every angle shifted by `alpha`.
    pub fn rotated(&self, alpha: f64) -> Result<Self> {
        ensure_finite("rotation", alpha)?;
        Self::new(self.iter().map(|t| t + alpha))
    }

    /// The sample with observation `index` removed, or `None` if that would leave it empty.
    pub fn without(&self, index: usize) -> Option<Self> {
        if self.angles.len() < 2 || index >= self.angles.len() {
            return None;
        }
        let mut angles = self.angles.clone();
        angles.remove(index);
        Some(Self { angles })
    }

    /// Concatenation of two samples.
    pub fn pooled(&self, other: &AngleSample) -> Self {
        let mut angles = self.angles.clone();
        angles.extend_from_slice(&other.angles);
        Self { angles }
    }
}

/// Strictly increasing evaluation points in `[-pi, pi)`.
#[derive(Debug, Clone, PartialEq)]
pub struct EvalGrid {
    points: Vec<f64>,
    uniform: bool,
}

/// `M` equally spaced points starting at `-pi` with spacing `2 pi / M`.
pub fn uniform_grid(m: usize) -> Result<EvalGrid> {
    if m < 2 {
        return Err(Error::GridTooSmall { needed: 2, got: m });
    }
    let step = TAU / m as f64;
    let points = (0..m).map(|k| -PI + step * k as f64).collect();
    Ok(EvalGrid {
        points,
        uniform: true,
    })
}

impl EvalGrid {
    pub fn uniform(m: usize) -> Result<Self> {
        uniform_grid(m)
    }

    /// Arbitrary grid. Points must be strictly increasing and lie in `[-pi, pi)`.
    pub fn from_points(points: Vec<f64>) -> Result<Self> {
        if points.is_empty() {
            return Err(Error::GridTooSmall { needed: 1, got: 0 });
        }
        let in_range = points.iter().all(|p| p.is_finite() && (-PI..PI).contains(p));
        let increasing = points.windows(2).all(|w| w[0] < w[1]);
        if !in_range || !increasing {
            return Err(Error::InvalidGrid);
        }
        let m = points.len();
        let step = TAU / m as f64;
        let uniform = m >= 2
            && points
                .iter()
                .enumerate()
                .all(|(k, &p)| (p - (-PI + step * k as f64)).abs() <= 1e-12);
        Ok(Self { points, uniform })
    }

    pub fn points(&self) -> &[f64] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// True when the grid is `-pi + 2 pi k / M` (to within 1e-12).
    pub fn is_uniform(&self) -> bool {
        self.uniform
    }

    /// Periodic trapezoidal rule over one full turn.
    ///
    /// The segment from the last point back to the first (shifted by `2 pi`)
    /// is included, so on a uniform grid this is `2 pi / M * sum(values)`.
    pub fn integrate(&self, values: &[f64]) -> f64 {
        assert_eq!(values.len(), self.points.len(), "one value per grid point");
        let m = self.points.len();
        if self.uniform {
            return TAU / m as f64 * values.iter().sum::<f64>();
        }
        (0..m)
            .map(|k| {
                let (next_x, next_v) = if k + 1 == m {
                    (self.points[0] + TAU, values[0])
                } else {
                    (self.points[k + 1], values[k + 1])
                };
                0.5 * (values[k] + next_v) * (next_x - self.points[k])
            })
            .sum()
    }
}

/// Which estimator produced a [`DensityEstimate`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EstimatorKind {
    WrappedCauchy,
    VonMises,
    /// Real part of the empirical Carathéodory function.
    Opuc,
    /// Truncated trigonometric series.
    Series,
    /// Trigonometric series with radial weights `r^n`.
    WeightedSeries,
    /// Values supplied from outside (a known density, a file).
    Tabulated,
}

impl EstimatorKind {
    pub fn name(self) -> &'static str {
        match self {
            EstimatorKind::WrappedCauchy => "wc",
            EstimatorKind::VonMises => "vm",
            EstimatorKind::Opuc => "opuc",
            EstimatorKind::Series => "series",
            EstimatorKind::WeightedSeries => "weighted-series",
            EstimatorKind::Tabulated => "tabulated",
        }
    }
}

impl fmt::Display for EstimatorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct EstimateMeta {
    pub kind: EstimatorKind,
    /// rho, r or nu depending on `kind`.
    pub concentration: Option<f64>,
    pub n_star: Option<usize>,
    pub sample_size: usize,
    /// Set when any value is below zero (possible only for truncated series).
    pub has_negative: bool,
}

/// Density values per radian on an evaluation grid.
#[derive(Debug, Clone, PartialEq)]
pub struct DensityEstimate {
    grid: EvalGrid,
    values: Vec<f64>,
    meta: EstimateMeta,
}

impl DensityEstimate {
    /// Assembles an estimate from its parts. `meta.has_negative` is recomputed from `values`.
    pub fn from_parts(grid: EvalGrid, values: Vec<f64>, mut meta: EstimateMeta) -> Result<Self> {
        if values.len() != grid.len() {
            return Err(Error::Unsupported(format!(
                "{} values for a grid of {} points",
                values.len(),
                grid.len()
            )));
        }
        if let Some(&v) = values.iter().find(|v| !v.is_finite()) {
            return Err(Error::NotFinite {
                name: "density value",
                value: v,
            });
        }
        meta.has_negative = values.iter().any(|&v| v < 0.0);
        Ok(Self { grid, values, meta })
    }

    pub(crate) fn build(grid: &EvalGrid, values: Vec<f64>, meta: EstimateMeta) -> Self {
        let has_negative = values.iter().any(|&v| v < 0.0);
        Self {
            grid: grid.clone(),
            values,
            meta: EstimateMeta { has_negative, ..meta },
        }
    }

    pub fn grid(&self) -> &EvalGrid {
        &self.grid
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn meta(&self) -> &EstimateMeta {
        &self.meta
    }

    /// `(theta, density)` pairs in grid order.
    pub fn iter(&self) -> impl Iterator<Item = (f64, f64)> + '_ {
        self.grid.points.iter().copied().zip(self.values.iter().copied())
    }

    /// Periodic trapezoidal integral of the values.
    pub fn integral(&self) -> f64 {
        self.grid.integrate(&self.values)
    }

    pub fn min_value(&self) -> f64 {
        self.values.iter().copied().fold(f64::INFINITY, f64::min)
    }

    /// Largest pointwise absolute difference to another estimate on the same grid.
    pub fn max_abs_diff(&self, other: &DensityEstimate) -> f64 {
        assert_eq!(self.grid.len(), other.grid.len(), "estimates on different grids");
        self.values
            .iter()
            .zip(&other.values)
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max)
    }
}
