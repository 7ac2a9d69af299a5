//! Closed-form CDFs built on Marcum-Q and Φ₃: the bivariate Nakagami-m
//! envelope CDF (with its Rayleigh special case) and the minimum-eigenvalue
//! CDF of a complex non-central Wishart matrix with rank-one mean.

mod nakagami;
mod wishart;

pub use nakagami::{
    bivariate_nakagami_cdf, bivariate_nakagami_cdf_normalized, bivariate_rayleigh_cdf,
    NakagamiBivariate,
};
pub use wishart::{
    mimo_min_distance_bound, mimo_outage_upper_bound, wishart_min_eig_cdf_marcum,
    wishart_min_eig_cdf_phi3, WishartModel,
};

use crate::error::{Error, Result};

/// Slack allowed outside [0, 1] before a computed probability is treated as
/// a numerical failure instead of rounding.
pub const PROBABILITY_SLACK: f64 = 1e-9;

fn checked_probability(value: f64, what: &'static str) -> Result<f64> {
    if (-PROBABILITY_SLACK..=1.0 + PROBABILITY_SLACK).contains(&value) {
        Ok(value.clamp(0.0, 1.0))
    } else {
        Err(Error::Probability { what, value })
    }
}
