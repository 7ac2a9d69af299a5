use super::gamma::RecipGammaSeq;
use super::SignedLog;
use crate::config::EvalConfig;
use crate::error::{Error, Result};

/// Regularized Kummer function ₁F̃₁(b; c; w) = Σ_k (b)_k w^k / (Γ(c+k) k!).
///
/// Entire in c: the poles of Γ(c+k) only remove leading terms.
pub fn reg_confluent_1f1(b: f64, c: f64, w: f64, cfg: &EvalConfig) -> Result<f64> {
    if ![b, c, w].iter().all(|v| v.is_finite()) {
        return Err(Error::domain("1F1 arguments must be finite"));
    }
    if w == 0.0 {
        return Ok(super::recip_gamma(c).to_f64());
    }
    let ln_w = w.abs().ln();
    let w_sign: i8 = if w < 0.0 { -1 } else { 1 };
    let mut head = SignedLog::ONE; // (b)_k w^k / k!
    let mut rgamma = RecipGammaSeq::new(c);
    let mut sum = 0.0f64;
    let mut small_run = 0;
    for k in 0..cfg.max_terms {
        let term = (head * rgamma.next().unwrap_or(SignedLog::ZERO)).to_f64();
        sum += term;
        if term.abs() < cfg.rel_tol * sum.abs() || term.abs() <= cfg.abs_tol {
            small_run += 1;
        } else {
            small_run = 0;
        }
        let kf = k as f64;
        if small_run >= 3 && kf > w.abs() && kf > -c {
            return finite(sum);
        }
        let step = b + kf;
        if step == 0.0 {
            // (b)_k vanishes from here on
            return finite(sum);
        }
        head = SignedLog::new(
            head.sign * w_sign * if step < 0.0 { -1 } else { 1 },
            head.ln_abs + step.abs().ln() + ln_w - (kf + 1.0).ln(),
        );
    }
    Err(Error::Convergence {
        what: "1F1 series",
        terms: cfg.max_terms,
    })
}

fn finite(v: f64) -> Result<f64> {
    if v.is_finite() {
        Ok(v)
    } else {
        Err(Error::Overflow("1F1 series"))
    }
}
