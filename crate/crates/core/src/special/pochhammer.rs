use super::gamma::ln_gamma_signed;
use super::SignedLog;

/// Past this length a Pochhammer symbol with positive base is taken from
/// log-Gamma differences instead of the explicit product.
const PRODUCT_LIMIT: usize = 1024;

/// (t)_r = Γ(t+r)/Γ(t) in sign/log form.
///
/// Uses the product t (t+1) ... (t+r-1) so nonpositive integer bases give an
/// exact zero whenever the product crosses it, and (t)_0 = 1 for every t.
pub fn pochhammer_log(t: f64, r: usize) -> SignedLog {
    if r == 0 {
        return SignedLog::ONE;
    }
    if t > 0.0 && r > PRODUCT_LIMIT {
        let hi = ln_gamma_signed(t + r as f64);
        let lo = ln_gamma_signed(t);
        return SignedLog::new(1, hi.ln_abs - lo.ln_abs);
    }
    let mut sign = 1i8;
    let mut ln_abs = 0.0;
    for j in 0..r {
        let f = t + j as f64;
        if f == 0.0 {
            return SignedLog::ZERO;
        }
        if f < 0.0 {
            sign = -sign;
        }
        ln_abs += f.abs().ln();
    }
    SignedLog::new(sign, ln_abs)
}

/// (t)_r as a plain product.
pub fn pochhammer(t: f64, r: usize) -> f64 {
    (0..r).map(|j| t + j as f64).product()
}
