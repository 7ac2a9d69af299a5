use super::Phi3Args;
use crate::config::EvalConfig;
use crate::error::{Error, Result};
use crate::special::{
    bessel_i_scaled, ln_factorial, reg_confluent_1f1, LogAccumulator, RecipGammaSeq, SignedLog,
};

/// Φ̃₃(b, c; w, z) from the defining double series.
///
/// Terms are grouped by anti-diagonal n = k + m,
///
/// ```text
/// D_n = 1/Γ(c+n) · Σ_{k=0}^{n} (b)_k w^k / k! · z^{n-k} / (n-k)!,
/// ```
///
/// and summation stops once three consecutive D_n fall below
/// `rel_tol · |partial sum|` with n past 2(√|w| + √|z|). The axes w = 0 and
/// z = 0 reduce to a Bessel function and to ₁F̃₁ respectively.
pub fn phi3_tilde_series(args: &Phi3Args, cfg: &EvalConfig) -> Result<f64> {
    let v = phi3_tilde_series_log(args, cfg)?;
    let x = v.to_f64();
    if x.is_finite() {
        Ok(x)
    } else {
        Err(Error::Overflow("Phi3 series"))
    }
}

/// Φ₃(b, c; w, z) = Γ(c) Φ̃₃(b, c; w, z); undefined for c = 0, -1, -2, ...
pub fn phi3_series(args: &Phi3Args, cfg: &EvalConfig) -> Result<f64> {
    args.check_finite()?;
    if args.c <= 0.0 && args.c.fract() == 0.0 {
        return Err(Error::domain(format!(
            "Phi3 is undefined for nonpositive integer c = {}",
            args.c
        )));
    }
    let gamma_c = crate::special::recip_gamma(args.c).recip();
    let x = (phi3_tilde_series_log(args, cfg)? * gamma_c).to_f64();
    if x.is_finite() {
        Ok(x)
    } else {
        Err(Error::Overflow("Phi3 series"))
    }
}

pub(crate) fn phi3_tilde_series_log(args: &Phi3Args, cfg: &EvalConfig) -> Result<SignedLog> {
    args.check_finite()?;
    let Phi3Args { b, c, w, z } = *args;
    if w == 0.0 && z == 0.0 {
        return Ok(crate::special::recip_gamma(c));
    }
    if z == 0.0 {
        return Ok(SignedLog::from_f64(reg_confluent_1f1(b, c, w, cfg)?));
    }
    if w == 0.0 && z > 0.0 && (c >= 1.0 || c.fract() == 0.0) {
        // z^{(1-c)/2} I_{c-1}(2√z), with I_{-n} = I_n for integer orders
        let x = 2.0 * z.sqrt();
        let scaled = bessel_i_scaled((c - 1.0).abs(), x)?;
        return Ok(SignedLog::from_f64(scaled).scale_exp(0.5 * (1.0 - c) * z.ln() + x));
    }
    diagonal_series(b, c, w, z, cfg)
}

fn diagonal_series(b: f64, c: f64, w: f64, z: f64, cfg: &EvalConfig) -> Result<SignedLog> {
    let (ln_w, ln_z) = (w.abs().ln(), z.abs().ln());
    let w_neg = w < 0.0;
    let z_neg = z < 0.0;
    let min_diagonals = 2.0 * (w.abs().sqrt() + z.abs().sqrt());
    let ln_rel_tol = cfg.rel_tol.ln();
    let ln_abs_tol = cfg.abs_tol.ln();

    // (b)_k w^k / k!, extended lazily; stays ZERO once (b)_k hits a zero
    let mut heads: Vec<SignedLog> = Vec::with_capacity(64);
    // z^j / j!
    let mut tails: Vec<SignedLog> = Vec::with_capacity(64);
    let mut rgamma = RecipGammaSeq::new(c);
    let mut total = LogAccumulator::new();
    let mut small_run = 0;
    let mut scratch: Vec<SignedLog> = Vec::with_capacity(64);

    for n in 0..cfg.max_terms {
        let head = match heads.last() {
            None => SignedLog::ONE,
            Some(_) if w == 0.0 => SignedLog::ZERO,
            Some(prev) => {
                let k = (n - 1) as f64;
                let step = SignedLog::from_f64(b + k);
                let sign = if w_neg { -1 } else { 1 };
                *prev * step * SignedLog::new(sign, ln_w - (k + 1.0).ln())
            }
        };
        heads.push(head);
        let sign = if z_neg && n % 2 == 1 { -1 } else { 1 };
        tails.push(SignedLog::new(sign, n as f64 * ln_z - ln_factorial(n)));

        let rg = rgamma.next().unwrap_or(SignedLog::ZERO);
        let diagonal = if rg.is_zero() {
            SignedLog::ZERO
        } else {
            scratch.clear();
            scratch.extend((0..=n).map(|k| heads[k] * tails[n - k]));
            SignedLog::sum(scratch.iter().copied()) * rg
        };
        total.add(diagonal);

        let partial = total.value();
        let small = diagonal.ln_abs < ln_rel_tol + partial.ln_abs || diagonal.ln_abs <= ln_abs_tol;
        small_run = if small { small_run + 1 } else { 0 };
        let nf = n as f64;
        if small_run >= 3 && nf > min_diagonals && nf > -c {
            return Ok(partial);
        }
    }
    Err(Error::Convergence {
        what: "Phi3 double series",
        terms: cfg.max_terms,
    })
}
