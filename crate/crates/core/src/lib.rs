//! Nonparametric density estimation for circular (angular) data.
//!
//! The crate implements three views of the same smoothing procedure and keeps
//! them as separate code paths so that their agreement can be checked
//! numerically:
//!
//! * the wrapped-Cauchy kernel estimator
//!   `f_WC(theta; rho) = (1/N) sum_j f_WC(theta; theta_j, rho)`,
//! * the real part of the empirical Carathéodory function on the unit disk,
//!   `(1 / 2 pi) Re F_N(r e^{i theta})` with
//!   `F_N(z) = (1/N) sum_j (e^{i theta_j} + z) / (e^{i theta_j} - z)`,
//! * the (weighted) trigonometric series built from the empirical moments
//!   `c_n = (1/N) sum_j e^{-i n theta_j}`.
//!
//! Alongside the estimators there is a von Mises kernel, cross-validated
//! smoothing selection ([`selection`]), samplers and error metrics for
//! simulation studies ([`simlab`]) and a small command-line front end
//! ([`cli`]).
//!
//! All angles are radians in `[-pi, pi)` and all densities are per radian, so
//! the circular uniform density is `1 / (2 pi)`.

pub mod angle;
pub mod cli;
pub mod error;
pub mod estimators;
pub mod kernels;
pub mod selection;
pub mod simlab;
pub mod special;

pub use angle::{circular_distance, normalize_angle, uniform_grid, Angle, AngleSample, DensityEstimate, EstimateMeta, EstimatorKind, EvalGrid};
pub use error::{Error, Result};
pub use estimators::{
    caratheodory_estimate, kernel_estimate, opuc_density_estimate, series_estimate, trig_moments,
    wc_estimate, weighted_series_estimate, CaratheodoryEval, TrigMomentVector,
};
pub use kernels::{KernelKind, KernelSpec, VonMisesParams, WrappedCauchyParams};
pub use special::{Complex, DiskPoint};

/// Largest admissible wrapped-Cauchy concentration / disk radius.
///
/// The boundary `r = 1` is only reached as a limit; capping here keeps the
/// kernel peak `(1 + r) / (1 - r)` finite and well conditioned.
pub const MAX_RADIUS: f64 = 1.0 - 1e-8;

/// Largest von Mises concentration accepted by [`KernelSpec`] and the
/// selection routines.
pub const MAX_VON_MISES_CONCENTRATION: f64 = 100.0;
