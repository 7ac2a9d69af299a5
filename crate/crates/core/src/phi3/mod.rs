//! The confluent hypergeometric function of two variables,
//!
//! ```text
//! Φ₃(b, c; w, z) = Σ_k Σ_m (b)_k / (c)_{k+m} · w^k z^m / (k! m!)
//! Φ̃₃(b, c; w, z) = Φ₃(b, c; w, z) / Γ(c)
//! ```
//!
//! evaluated three ways: the double series ([`phi3_tilde_series`]), the
//! finite reduction to first parameter 1 ([`phi3_tilde_recursive`]), and the
//! finite Marcum-Q expansion for integer `b > 0`, integer `c`
//! ([`phi3_tilde_via_marcum`]).

mod coeffs;
mod recursive;
mod series;
mod theorem;

pub use coeffs::{coeff_polynomial, CoeffPolynomial};
pub use recursive::phi3_tilde_recursive;
pub use series::{phi3_series, phi3_tilde_series};
pub use theorem::phi3_tilde_via_marcum;

pub(crate) use series::phi3_tilde_series_log;
pub(crate) use theorem::phi3_tilde_via_marcum_log;

use crate::error::{Error, Result};

/// Parameters (b, c) and arguments (w, z) of Φ₃ / Φ̃₃.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Phi3Args {
    pub b: f64,
    pub c: f64,
    pub w: f64,
    pub z: f64,
}

impl Phi3Args {
    pub fn new(b: f64, c: f64, w: f64, z: f64) -> Self {
        Self { b, c, w, z }
    }

    pub(crate) fn check_finite(&self) -> Result<()> {
        if [self.b, self.c, self.w, self.z].iter().all(|v| v.is_finite()) {
            Ok(())
        } else {
            Err(Error::domain(format!("Phi3 arguments must be finite: {self:?}")))
        }
    }

    /// `b` as a positive integer, as required by the finite expansions.
    pub(crate) fn positive_integer_b(&self) -> Result<u32> {
        if self.b >= 1.0 && self.b.fract() == 0.0 && self.b <= f64::from(u32::MAX) {
            Ok(self.b as u32)
        } else {
            Err(Error::domain(format!(
                "finite Phi3 expansion needs a positive integer b, got {}",
                self.b
            )))
        }
    }
}
