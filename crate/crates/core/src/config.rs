use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Truncation, tolerance and sampling parameters shared by every evaluator.
///
/// Evaluation is deterministic: the same config and inputs always produce
/// bit-identical outputs, including the Monte Carlo estimators, which are
/// driven entirely by `seed`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct EvalConfig {
    /// Relative truncation tolerance for series.
    pub rel_tol: f64,
    /// Absolute floor below which a term or integrand counts as zero.
    pub abs_tol: f64,
    /// Hard cap on the number of series terms (or anti-diagonals).
    pub max_terms: usize,
    /// Panel budget for adaptive quadrature.
    pub quad_points: usize,
    /// Sample count for Monte Carlo estimates.
    pub mc_samples: usize,
    pub seed: u64,
}

pub const DEFAULT_SEED: u64 = 42;

impl Default for EvalConfig {
    fn default() -> Self {
        Self {
            rel_tol: 1e-12,
            abs_tol: 1e-300,
            max_terms: 10_000,
            quad_points: 1 << 15,
            mc_samples: 1_000_000,
            seed: DEFAULT_SEED,
        }
    }
}

impl EvalConfig {
    pub fn validate(&self) -> Result<()> {
        if !(self.rel_tol > 0.0 && self.rel_tol.is_finite()) {
            return Err(Error::domain(format!("rel_tol must be > 0, got {}", self.rel_tol)));
        }
        if !(self.abs_tol >= 0.0 && self.abs_tol.is_finite()) {
            return Err(Error::domain(format!("abs_tol must be >= 0, got {}", self.abs_tol)));
        }
        if self.max_terms == 0 {
            return Err(Error::domain("max_terms must be >= 1"));
        }
        if self.quad_points == 0 {
            return Err(Error::domain("quad_points must be >= 1"));
        }
        if self.mc_samples == 0 {
            return Err(Error::domain("mc_samples must be >= 1"));
        }
        Ok(())
    }

    pub fn with_rel_tol(mut self, rel_tol: f64) -> Self {
        self.rel_tol = rel_tol;
        self
    }

    pub fn with_max_terms(mut self, max_terms: usize) -> Self {
        self.max_terms = max_terms;
        self
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self
    }

    pub fn with_samples(mut self, mc_samples: usize) -> Self {
        self.mc_samples = mc_samples;
        self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn defaults_are_valid() {
        let cfg = EvalConfig::default();
        cfg.validate().unwrap();
        assert_eq!(cfg.rel_tol, 1e-12);
        assert_eq!(cfg.max_terms, 10_000);
        assert_eq!(cfg.mc_samples, 1_000_000);
    }

    #[test]
    fn rejects_bad_tolerances() {
        assert!(EvalConfig::default().with_rel_tol(0.0).validate().is_err());
        assert!(EvalConfig::default().with_rel_tol(f64::NAN).validate().is_err());
        assert!(EvalConfig::default().with_max_terms(0).validate().is_err());
        let cfg = EvalConfig {
            abs_tol: -1.0,
            ..Default::default()
        };
        assert!(cfg.validate().is_err());
    }
}
