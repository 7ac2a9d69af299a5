use super::{coeff_polynomial, Phi3Args};
use crate::config::EvalConfig;
use crate::error::{Error, Result};
use crate::marcum::{marcum_q, MarcumArgs};
use crate::special::SignedLog;

/// Φ̃₃(b, c; w, z) for integer b > 0, integer c and w, z > 0 as a finite
/// sum of Marcum-Q functions:
///
/// ```text
/// Φ̃₃(b,c;w,z) = (z/w)^{b-1} Σ_{i=0}^{2(b-1)} A_i(b,c;z) / (w^{c-i-1} z^i)
///                 · e^{w + z/w} Q_{2-c+i}(√(2w), √(2z/w))
/// ```
///
/// Negative w or z would call for complex Marcum arguments and are rejected.
pub fn phi3_tilde_via_marcum(args: &Phi3Args, cfg: &EvalConfig) -> Result<f64> {
    let v = phi3_tilde_via_marcum_log(args, 0.0, cfg)?.to_f64();
    if v.is_finite() {
        Ok(v)
    } else {
        Err(Error::Overflow("Phi3 via Marcum-Q"))
    }
}

/// e^{shift} · Φ̃₃(b, c; w, z), with the shift folded into every term before
/// exponentiation.
pub(crate) fn phi3_tilde_via_marcum_log(
    args: &Phi3Args,
    shift: f64,
    cfg: &EvalConfig,
) -> Result<SignedLog> {
    args.check_finite()?;
    let b = args.positive_integer_b()?;
    let Phi3Args { c, w, z, .. } = *args;
    if c.fract() != 0.0 || c.abs() > f64::from(i32::MAX / 2) {
        return Err(Error::domain(format!("Marcum-Q expansion needs integer c, got {c}")));
    }
    if !(w > 0.0) || !(z > 0.0) {
        return Err(Error::domain(format!(
            "Marcum-Q expansion needs w > 0 and z > 0, got w = {w}, z = {z}"
        )));
    }
    let c_int = c as i32;
    let (ln_w, ln_z) = (w.ln(), z.ln());
    let marcum = MarcumArgs::new(0, (2.0 * w).sqrt(), (2.0 * z / w).sqrt())?;
    let common = shift + f64::from(b - 1) * (ln_z - ln_w) + w + z / w;

    let mut terms = Vec::with_capacity(2 * b as usize - 1);
    for i in 0..=2 * (b as usize - 1) {
        let poly = coeff_polynomial(b, c, i)?.eval_log(z);
        if poly.is_zero() {
            continue;
        }
        let ii = i as i32;
        let q = marcum_q(&MarcumArgs { m: 2 - c_int + ii, ..marcum }, cfg)?;
        if q == 0.0 {
            continue;
        }
        let w_power = c_int - ii - 1;
        let mut ln_mag = common - f64::from(ii) * ln_z + q.ln();
        if w_power != 0 {
            ln_mag -= f64::from(w_power) * ln_w;
        }
        terms.push(poly.scale_exp(ln_mag));
    }
    Ok(SignedLog::sum(terms))
}
