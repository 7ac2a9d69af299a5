//! Generalized Marcum-Q function of integer order.
//!
//! ```text
//! Q_m(a, b) = ∫_b^∞ x^m / a^{m-1} · exp(-(a² + x²)/2) · I_{m-1}(a x) dx
//! ```
//!
//! The production path is the Poisson mixture of regularized incomplete
//! gammas,
//!
//! ```text
//! Q_m(a, b)     = Σ_k e^{-a²/2} (a²/2)^k / k! · Γ̄(m + k, b²/2)
//! 1 - Q_m(a, b) = Σ_k e^{-a²/2} (a²/2)^k / k! · P(m + k, b²/2)
//! ```
//!
//! Both sums have positive terms. Non-positive orders go through
//! Q_m(a, b) = 1 - Q_{1-m}(b, a) and are summed with the second form, so the
//! result never comes from subtracting two numbers close to one.

use crate::config::EvalConfig;
use crate::error::{Error, Result};
use crate::phi3::{self, Phi3Args};
use crate::special::{ln_factorial, regularized_gamma_pair, SignedLog};

/// Arguments of Q_m(a, b): integer order, a > 0, b ≥ 0.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MarcumArgs {
    pub m: i32,
    pub a: f64,
    pub b: f64,
}

impl MarcumArgs {
    pub fn new(m: i32, a: f64, b: f64) -> Result<Self> {
        if !(a > 0.0) || !a.is_finite() {
            return Err(Error::domain(format!("Marcum-Q requires finite a > 0, got {a}")));
        }
        if !(b >= 0.0) || !b.is_finite() {
            return Err(Error::domain(format!("Marcum-Q requires finite b >= 0, got {b}")));
        }
        Ok(Self { m, a, b })
    }
}

/// Q_m(a, b) for any integer order.
pub fn marcum_q(args: &MarcumArgs, cfg: &EvalConfig) -> Result<f64> {
    if args.m >= 1 {
        if args.b == 0.0 {
            return Ok(1.0);
        }
        poisson_gamma_series(args.m, args.a, args.b, Tail::Upper, cfg)
    } else {
        marcum_q_negative_order(args, cfg)
    }
}

/// Q_m(a, b) = 1 - Q_{1-m}(b, a) for m ≤ 0.
///
/// The swapped call needs a positive first argument, so b = 0 is rejected:
/// the identity is indeterminate there and no limit is substituted.
pub fn marcum_q_negative_order(args: &MarcumArgs, cfg: &EvalConfig) -> Result<f64> {
    if args.m > 0 {
        return Err(Error::domain(format!(
            "negative-order identity needs m <= 0, got {}",
            args.m
        )));
    }
    if args.b == 0.0 {
        return Err(Error::domain(
            "Q_m(a, 0) with m <= 0 maps to Q_{1-m}(0, a), whose first argument must be positive",
        ));
    }
    poisson_gamma_series(1 - args.m, args.b, args.a, Tail::Lower, cfg)
}

/// 1 - Q_m(a, b) for m ≥ 1, summed directly rather than by subtraction.
pub fn marcum_q_complement(args: &MarcumArgs, cfg: &EvalConfig) -> Result<f64> {
    if args.m < 1 {
        return Err(Error::domain("complement series is defined for m >= 1"));
    }
    if args.b == 0.0 {
        return Ok(0.0);
    }
    poisson_gamma_series(args.m, args.a, args.b, Tail::Lower, cfg)
}

#[derive(Clone, Copy)]
enum Tail {
    Upper,
    Lower,
}

fn poisson_gamma_series(order: i32, a: f64, b: f64, tail: Tail, cfg: &EvalConfig) -> Result<f64> {
    debug_assert!(order >= 1);
    let lambda = 0.5 * a * a;
    let y = 0.5 * b * b;
    let ln_lambda = lambda.ln();
    let mut sum = 0.0;
    let mut small_run = 0;
    for k in 0..cfg.max_terms {
        let ln_weight = -lambda + k as f64 * ln_lambda - ln_factorial(k);
        let (p, q) = regularized_gamma_pair(f64::from(order) + k as f64, y)?;
        let g = match tail {
            Tail::Upper => q,
            Tail::Lower => p,
        };
        let term = if g > 0.0 { (ln_weight + g.ln()).exp() } else { 0.0 };
        sum += term;
        if term < cfg.rel_tol * sum || term <= cfg.abs_tol {
            small_run += 1;
        } else {
            small_run = 0;
        }
        // stopping before the Poisson mode would drop most of the mass
        if small_run >= 3 && k as f64 > lambda {
            return Ok(sum);
        }
    }
    Err(Error::Convergence {
        what: "Marcum-Q series",
        terms: cfg.max_terms,
    })
}

/// Q_m(a, b) through the regularized Φ₃ function,
///
/// ```text
/// Q_m(a, b) = (a²/2)^{1-m} exp(-(a² + b²)/2) Φ̃₃(1, 2 - m; a²/2, a²b²/4),
/// ```
///
/// which is free of subtraction and so keeps relative accuracy in both
/// tails. It shares no code with [`marcum_q`] beyond the special-function
/// layer and exists to cross-check it.
pub fn marcum_q_via_phi3(args: &MarcumArgs, cfg: &EvalConfig) -> Result<f64> {
    if args.m <= 0 && args.b == 0.0 {
        return Err(Error::domain(
            "Q_m(a, 0) with m <= 0 is left undefined (see marcum_q_negative_order)",
        ));
    }
    let (a2, b2) = (args.a * args.a, args.b * args.b);
    let w = 0.5 * a2;
    let phi = phi3::phi3_tilde_series_log(
        &Phi3Args::new(1.0, f64::from(2 - args.m), w, 0.25 * a2 * b2),
        cfg,
    )?;
    let ln_prefactor = f64::from(1 - args.m) * w.ln() - 0.5 * (a2 + b2);
    finite(phi.scale_exp(ln_prefactor), "Marcum-Q via Phi3")
}

/// Q_ν(a, b) = 1 - (b²/2)^ν exp(-(a² + b²)/2) Φ̃₃(1, ν + 1; b²/2, a²b²/4),
/// valid for real order ν.
///
/// Loses relative accuracy where Q is small (the subtraction cancels), so it
/// is a consistency check for moderate arguments rather than an evaluator.
pub fn marcum_q_real_order(order: f64, a: f64, b: f64, cfg: &EvalConfig) -> Result<f64> {
    MarcumArgs::new(0, a, b)?;
    if b == 0.0 {
        if order > 0.0 {
            return Ok(1.0);
        }
        return Err(Error::domain("real-order form needs b > 0 when the order is <= 0"));
    }
    let (a2, b2) = (a * a, b * b);
    let y = 0.5 * b2;
    let phi = phi3::phi3_tilde_series_log(&Phi3Args::new(1.0, order + 1.0, y, 0.25 * a2 * b2), cfg)?;
    let second = phi.scale_exp(order * y.ln() - 0.5 * (a2 + b2));
    Ok(1.0 - finite(second, "Marcum-Q real-order form")?)
}

fn finite(v: SignedLog, what: &'static str) -> Result<f64> {
    let x = v.to_f64();
    if x.is_finite() {
        Ok(x)
    } else {
        Err(Error::Overflow(what))
    }
}
