use crate::phi3::Phi3Args;
use crate::special::{ln_factorial, pochhammer_log, recip_gamma, SignedLog};

/// Φ̃₃(b, c; w, z) truncated to the rectangle 0 ≤ k < `rows`, 0 ≤ j < `cols`,
///
/// ```text
/// Σ_k Σ_j (b)_k / Γ(c + k + j) · w^k z^j / (k! j!)
/// ```
///
/// with every term formed independently from log-gamma values.
pub fn phi3_tilde_rectangular(args: &Phi3Args, rows: usize, cols: usize) -> f64 {
    let Phi3Args { b, c, w, z } = *args;
    let (wl, zl) = (SignedLog::from_f64(w), SignedLog::from_f64(z));
    let mut terms = Vec::with_capacity(rows * cols);
    for k in 0..rows {
        let head = pochhammer_log(b, k) * wl.powi(k as i32);
        if head.is_zero() {
            continue;
        }
        for j in 0..cols {
            let t = head * zl.powi(j as i32) * recip_gamma(c + (k + j) as f64);
            terms.push(t.scale_exp(-ln_factorial(k) - ln_factorial(j)));
        }
    }
    SignedLog::sum(terms).to_f64()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn constant_and_exponential_axes() {
        // Φ̃₃(b, 1; 0, z) = Σ z^j / j!²  = I₀(2√z); Φ̃₃(b, c; 0, 0) = 1/Γ(c)
        assert!((phi3_tilde_rectangular(&Phi3Args::new(2.0, 3.0, 0.0, 0.0), 5, 5) - 0.5).abs() < 1e-16);
        let v = phi3_tilde_rectangular(&Phi3Args::new(1.0, 1.0, 0.0, 0.25), 1, 40);
        assert!((v - 1.266_065_877_752_008_4).abs() < 1e-15);
    }
}
