use super::{coeff_polynomial, series::phi3_tilde_series_log, Phi3Args};
use crate::config::EvalConfig;
use crate::error::{Error, Result};
use crate::special::SignedLog;

/// Φ̃₃(b, c; w, z) for integer b ≥ 1 as a finite combination of first
/// parameter 1:
///
/// ```text
/// Φ̃₃(b,c;w,z) = (z/w)^{b-1} Σ_{i=0}^{2(b-1)} z^{-i} A_i(b,c;z) Φ̃₃(1, c-i; w, z)
/// ```
///
/// Each Φ̃₃(1, ·) is taken from the double series. Both w and z must be
/// nonzero because of the (z/w)^{b-1} z^{-i} factors.
pub fn phi3_tilde_recursive(args: &Phi3Args, cfg: &EvalConfig) -> Result<f64> {
    args.check_finite()?;
    let b = args.positive_integer_b()?;
    if args.w == 0.0 {
        return Err(Error::domain("recursive form divides by w; w must be nonzero"));
    }
    if args.z == 0.0 {
        return Err(Error::domain("recursive form divides by z; z must be nonzero"));
    }
    let Phi3Args { c, w, z, .. } = *args;
    let (wl, zl) = (SignedLog::from_f64(w), SignedLog::from_f64(z));
    let ratio = (zl / wl).powi(b as i32 - 1);
    let mut terms = Vec::with_capacity(2 * b as usize - 1);
    for i in 0..=2 * (b as usize - 1) {
        let poly = coeff_polynomial(b, c, i)?.eval_log(z);
        if poly.is_zero() {
            continue;
        }
        let inner = phi3_tilde_series_log(&Phi3Args::new(1.0, c - i as f64, w, z), cfg)?;
        terms.push(ratio * zl.powi(-(i as i32)) * poly * inner);
    }
    let v = SignedLog::sum(terms).to_f64();
    if v.is_finite() {
        Ok(v)
    } else {
        Err(Error::Overflow("recursive Phi3"))
    }
}
