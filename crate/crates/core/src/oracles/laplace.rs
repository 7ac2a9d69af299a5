use std::cell::RefCell;

use super::quadrature::{integrate, QuadTolerance};
use crate::config::EvalConfig;
use crate::error::{Error, Result};
use crate::phi3::{phi3_tilde_series_log, Phi3Args};

const LAPLACE_QUAD_REL: f64 = 1e-10;

/// Both sides of the transform pair
///
/// ```text
/// ∫_0^∞ t^{c-1} Φ̃₃(b, c; x t, y t) e^{-s t} dt = s^{-c} (1 - x/s)^{-b} e^{y/s}
/// ```
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LaplaceCheck {
    pub numeric: f64,
    pub closed_form: f64,
}

impl LaplaceCheck {
    pub fn rel_error(&self) -> f64 {
        (self.numeric - self.closed_form).abs() / self.closed_form.abs()
    }
}

/// Integrates the left side to a cutoff T where the integrand has dropped
/// below `cfg.abs_tol` and compares it with the closed form. For c < 1 the
/// variable change t = u^{1/c} removes the endpoint singularity.
pub fn laplace_transform_check(
    b: f64,
    c: f64,
    x: f64,
    y: f64,
    s: f64,
    cfg: &EvalConfig,
) -> Result<LaplaceCheck> {
    if !(c > 0.0) || !(x >= 0.0) || !(y >= 0.0) || !(s > x) || !b.is_finite() || !s.is_finite() {
        return Err(Error::domain(format!(
            "Laplace check needs c > 0, x, y >= 0 and s > x; got b={b}, c={c}, x={x}, y={y}, s={s}"
        )));
    }
    let closed_form = (-c * s.ln() - b * (1.0 - x / s).ln() + y / s).exp();

    let failure = RefCell::new(None);
    // sign and log-magnitude of t^{c-1} Φ̃₃(b, c; x t, y t) e^{-s t}
    let log_integrand = |t: f64| -> (f64, f64) {
        match phi3_tilde_series_log(&Phi3Args::new(b, c, x * t, y * t), cfg) {
            Ok(p) if p.is_zero() => (0.0, f64::NEG_INFINITY),
            Ok(p) => (f64::from(p.sign), (c - 1.0) * t.ln() - s * t + p.ln_abs),
            Err(e) => {
                failure.borrow_mut().get_or_insert(e);
                (f64::NAN, f64::NAN)
            }
        }
    };
    let ln_integrand = |t: f64| log_integrand(t).1;

    let floor = cfg.abs_tol.max(f64::MIN_POSITIVE).ln();
    let mut cutoff = 1.0;
    while !(ln_integrand(cutoff) < floor && ln_integrand(2.0 * cutoff) < ln_integrand(cutoff)) {
        cutoff *= 2.0;
        if let Some(e) = failure.borrow_mut().take() {
            return Err(e);
        }
        if cutoff > 1e6 {
            return Err(Error::Convergence { what: "Laplace cutoff search", terms: 20 });
        }
    }

    let p = if c < 1.0 { 1.0 / c } else { 1.0 };
    let integrand = |u: f64| {
        let (sign, ln) = log_integrand(u.powf(p));
        sign * (ln + p.ln() + (p - 1.0) * u.ln()).exp()
    };
    let tol = QuadTolerance {
        abs: cfg.abs_tol,
        rel: LAPLACE_QUAD_REL,
        max_panels: cfg.quad_points,
    };
    let result = integrate(integrand, 0.0, cutoff.powf(1.0 / p), tol);
    if let Some(e) = failure.into_inner() {
        return Err(e);
    }
    Ok(LaplaceCheck {
        numeric: result?.value,
        closed_form,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn constant_case_is_euler_integral() {
        let cfg = EvalConfig::default();
        for &(b, c, s) in &[(1.0, 2.0, 3.0), (2.5, 0.5, 1.5), (1.0, 1.0, 2.0)] {
            let r = laplace_transform_check(b, c, 0.0, 0.0, s, &cfg).unwrap();
            assert!((r.closed_form - s.powf(-c)).abs() < 1e-15);
            assert!(r.rel_error() < 1e-6, "{b},{c},{s}: {r:?}");
        }
    }

    #[test]
    fn nontrivial_points() {
        let cfg = EvalConfig::default();
        for &(b, c, x, y, s) in &[(1.0, 2.0, 0.5, 0.0, 4.0), (2.0, 3.0, 0.5, 1.0, 4.0), (0.5, 0.5, 1.0, 2.0, 3.0), (-1.0, 1.0, 2.0, 2.0, 6.0)] {
            let r = laplace_transform_check(b, c, x, y, s, &cfg).unwrap();
            assert!(r.rel_error() < 1e-6, "{r:?}");
        }
    }

    #[test]
    fn rejects_divergent_transform() {
        let cfg = EvalConfig::default();
        assert!(laplace_transform_check(1.0, 1.0, 2.0, 0.0, 1.0, &cfg).is_err());
        assert!(laplace_transform_check(1.0, 0.0, 0.0, 0.0, 1.0, &cfg).is_err());
    }
}
