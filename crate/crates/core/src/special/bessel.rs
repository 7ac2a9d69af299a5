use super::gamma::ln_gamma_signed;
use crate::error::{Error, Result};

/// Below this argument the ascending series is summed directly.
const SERIES_LIMIT: f64 = 30.0;
const MAX_TERMS: usize = 100_000;

/// e^{-x} I_ν(x), the exponentially scaled modified Bessel function of the
/// first kind, for ν ≥ 0 and x ≥ 0.
///
/// For x < 30 the ascending series is used; beyond that the large-argument
/// expansion e^{-x} I_ν(x) ~ (2πx)^{-1/2} Σ (-1)^k a_k(ν) / x^k, falling back
/// to the ascending series summed in the log domain when the expansion stalls
/// before reaching machine precision (ν large relative to √x).
pub fn bessel_i_scaled(nu: f64, x: f64) -> Result<f64> {
    if !(nu >= 0.0) || !nu.is_finite() {
        return Err(Error::domain(format!("bessel order must be >= 0, got {nu}")));
    }
    if !(x >= 0.0) || !x.is_finite() {
        return Err(Error::domain(format!("bessel argument must be finite and >= 0, got {x}")));
    }
    if x == 0.0 {
        return Ok(if nu == 0.0 { 1.0 } else { 0.0 });
    }
    if x < SERIES_LIMIT {
        return ascending_series(nu, x);
    }
    match large_argument(nu, x) {
        Some(v) => Ok(v),
        None => ascending_series(nu, x),
    }
}

/// Σ_k (x/2)^{2k+ν} / (k! Γ(k+ν+1)), scaled by e^{-x}. All terms are
/// positive; each is formed in the log domain so large x cannot overflow.
fn ascending_series(nu: f64, x: f64) -> Result<f64> {
    let quarter_x2 = 0.25 * x * x;
    let mut ln_term = nu * (0.5 * x).ln() - ln_gamma_signed(nu + 1.0).ln_abs - x;
    let mut sum = 0.0;
    let mut past_peak = false;
    for k in 0..MAX_TERMS {
        let term = ln_term.exp();
        sum += term;
        let kf = k as f64;
        let ratio = quarter_x2 / ((kf + 1.0) * (kf + nu + 1.0));
        past_peak |= ratio < 1.0;
        if past_peak && term <= f64::EPSILON * 0.25 * sum {
            return Ok(sum);
        }
        ln_term += ratio.ln();
    }
    Err(Error::Convergence {
        what: "bessel ascending series",
        terms: MAX_TERMS,
    })
}

fn large_argument(nu: f64, x: f64) -> Option<f64> {
    let mu = 4.0 * nu * nu;
    let mut term = 1.0;
    let mut sum = 1.0;
    let mut prev_abs = f64::INFINITY;
    for k in 1..200 {
        let odd = (2 * k - 1) as f64;
        term *= -(mu - odd * odd) / (8.0 * k as f64 * x);
        if term == 0.0 {
            break;
        }
        let a = term.abs();
        sum += term;
        if a <= 0.25 * f64::EPSILON * sum.abs() {
            return Some(sum / (2.0 * std::f64::consts::PI * x).sqrt());
        }
        // once past the terms where 4ν² dominates, growth means divergence
        if a > prev_abs && odd * odd > mu {
            return None;
        }
        prev_abs = a;
    }
    Some(sum / (2.0 * std::f64::consts::PI * x).sqrt())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn scaled_i0_oracle(x: f64) -> f64 {
        // Σ (x/2)^{2k} / (k!)², plain f64, no shared code path
        let mut term = 1.0;
        let mut sum = 1.0;
        let mut k = 0.0;
        while term > 1e-18 * sum {
            k += 1.0;
            term *= (0.5 * x) * (0.5 * x) / (k * k);
            sum += term;
        }
        sum * (-x).exp()
    }

    #[test]
    fn trivial_values() {
        assert_eq!(bessel_i_scaled(0.0, 0.0).unwrap(), 1.0);
        assert_eq!(bessel_i_scaled(1.0, 0.0).unwrap(), 0.0);
        assert!(bessel_i_scaled(0.0, -1.0).is_err());
        assert!(bessel_i_scaled(-1.0, 1.0).is_err());
    }

    #[test]
    fn i0_matches_ascending_series_oracle() {
        let v = bessel_i_scaled(0.0, 2.0).unwrap();
        // I_0(2) = 2.2795853023360673
        assert!((v - 2.279_585_302_336_067_3 * (-2.0f64).exp()).abs() < 1e-15);
        for &x in &[0.01, 0.5, 2.0, 7.5, 15.0, 29.0] {
            let o = scaled_i0_oracle(x);
            assert!((bessel_i_scaled(0.0, x).unwrap() - o).abs() < 1e-14 * o, "{x}");
        }
    }

    #[test]
    fn scaled_i0_lies_in_unit_interval() {
        for k in 0..=400 {
            let x = k as f64 * 0.25;
            let v = bessel_i_scaled(0.0, x).unwrap();
            assert!(v > 0.0 && v <= 1.0, "{x}: {v}");
        }
    }

    #[test]
    fn branches_agree_at_switch_point() {
        for &nu in &[0.0, 0.5, 1.0, 3.0, 6.0, 10.0] {
            let series = ascending_series(nu, SERIES_LIMIT).unwrap();
            let asym = large_argument(nu, SERIES_LIMIT).unwrap();
            assert!((series - asym).abs() < 1e-13 * series, "{nu}: {series} {asym}");
        }
    }

    #[test]
    fn large_order_falls_back_to_series() {
        assert!(large_argument(40.0, 31.0).is_none());
        let v = bessel_i_scaled(40.0, 31.0).unwrap();
        let s = ascending_series(40.0, 31.0).unwrap();
        assert_eq!(v, s);
        assert!(v > 0.0 && v < 1.0);
    }

    #[test]
    fn three_term_recurrence() {
        // I_{ν-1}(x) - I_{ν+1}(x) = (2ν/x) I_ν(x)
        for &nu in &[1.0, 2.0, 3.5, 5.0] {
            let mut x = 0.1;
            while x <= 50.0 {
                let lhs = bessel_i_scaled(nu - 1.0, x).unwrap() - bessel_i_scaled(nu + 1.0, x).unwrap();
                let rhs = 2.0 * nu / x * bessel_i_scaled(nu, x).unwrap();
                assert!((lhs - rhs).abs() <= 1e-11 * rhs.abs(), "nu={nu} x={x}");
                x *= 1.17;
            }
        }
    }
}
