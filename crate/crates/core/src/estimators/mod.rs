//! Density estimators.
//!
//! The kernel estimator ([`wc_estimate`]) and the Carathéodory estimator
//! ([`opuc_density_estimate`]) compute the same function through different
//! arithmetic: a real trigonometric closed form on one side, complex division
//! on the other. They are intentionally kept apart so each can serve as the
//! other's oracle. The series estimators expand the same function in
//! empirical trigonometric moments.

mod kernel;
mod opuc;
mod series;

pub use kernel::{kernel_estimate, von_mises_estimate, wc_estimate};
pub use opuc::{caratheodory_estimate, opuc_density_estimate, CaratheodoryEval};
pub use series::{
    series_estimate, series_estimate_direct, series_tail_bound, trig_moments, weighted_series_estimate,
    TrigMomentVector,
};
