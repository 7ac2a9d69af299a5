use serde::Serialize;

use super::checked_probability;
use crate::config::EvalConfig;
use crate::error::{Error, Result};
use crate::marcum::{marcum_q, MarcumArgs};
use crate::phi3::coeff_polynomial;
use crate::special::{ln_factorial, regularized_lower_gamma, SignedLog};

/// Below this correlation the pair is treated as independent.
pub const RHO_INDEPENDENT: f64 = 1e-6;
/// Largest accepted correlation; the closed form degenerates as ρ → 1.
pub const RHO_MAX: f64 = 1.0 - 1e-6;

/// Two correlated Nakagami-m envelopes with fading index `m`, mean powers
/// `omega1`, `omega2` and power correlation `rho`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct NakagamiBivariate {
    pub m: u32,
    pub omega1: f64,
    pub omega2: f64,
    pub rho: f64,
    /// √(2m / (1 - ρ))
    pub alpha: f64,
    /// alpha · √ρ
    pub beta: f64,
}

impl NakagamiBivariate {
    pub fn new(m: u32, omega1: f64, omega2: f64, rho: f64) -> Result<Self> {
        if m == 0 {
            return Err(Error::domain("Nakagami fading index m must be >= 1"));
        }
        for (name, v) in [("omega1", omega1), ("omega2", omega2)] {
            if !(v > 0.0 && v.is_finite()) {
                return Err(Error::domain(format!("{name} must be finite and > 0, got {v}")));
            }
        }
        if !(0.0..=RHO_MAX).contains(&rho) {
            return Err(Error::domain(format!("rho must lie in [0, {RHO_MAX}], got {rho}")));
        }
        let alpha = (2.0 * f64::from(m) / (1.0 - rho)).sqrt();
        Ok(Self {
            m,
            omega1,
            omega2,
            rho,
            alpha,
            beta: alpha * rho.sqrt(),
        })
    }

    /// Unit mean powers.
    pub fn normalized(m: u32, rho: f64) -> Result<Self> {
        Self::new(m, 1.0, 1.0, rho)
    }

    /// P(R̂ ≤ r) for one unit-power envelope: P(m, m r²).
    fn marginal(&self, r: f64) -> Result<f64> {
        let m = f64::from(self.m);
        regularized_lower_gamma(m, m * r * r)
    }
}

fn check_radius(r: f64, name: &str) -> Result<()> {
    if r >= 0.0 {
        Ok(())
    } else {
        Err(Error::domain(format!("{name} must be >= 0, got {r}")))
    }
}

/// Joint CDF of the unit-power envelopes, P(R̂₁ ≤ r1, R̂₂ ≤ r2).
///
/// ```text
/// F = P(m, m r2²)
///   - e^{-m r1²} Σ_{k<m} (m r1²)^k / k! · Q_{1-k}(r2 α, r1 β)
///   + e^{-m r2²} Σ_{k<m} Σ_{i=1}^{m-k} Σ_{r=0}^{2(i-1)} (1-ρ)^r / (k! ρ^r)
///         (m r1² / ρ)^{k+i-r-1} A_r(i, k+i; (r1 r2 α β)²/4) Q_{2-k-i+r}(r2 β, r1 α)
/// ```
///
/// Note that α multiplies r2 in the first Marcum sum and r1 in the second.
pub fn bivariate_nakagami_cdf_normalized(
    model: &NakagamiBivariate,
    r1: f64,
    r2: f64,
    cfg: &EvalConfig,
) -> Result<f64> {
    check_radius(r1, "r1")?;
    check_radius(r2, "r2")?;
    if r1 == 0.0 || r2 == 0.0 {
        return Ok(0.0);
    }
    match (r1.is_infinite(), r2.is_infinite()) {
        (true, true) => return Ok(1.0),
        (true, false) => return model.marginal(r2),
        (false, true) => return model.marginal(r1),
        (false, false) => {}
    }
    if model.rho < RHO_INDEPENDENT {
        return Ok(model.marginal(r1)? * model.marginal(r2)?);
    }

    let m = model.m as usize;
    let mf = f64::from(model.m);
    let (alpha, beta, rho) = (model.alpha, model.beta, model.rho);
    let (ln_rho, ln_one_minus_rho) = (rho.ln(), (1.0 - rho).ln());
    let u1 = mf * r1 * r1;
    let u2 = mf * r2 * r2;
    let ln_u1 = u1.ln();
    let x = (r1 * r2 * alpha * beta).powi(2) / 4.0;

    let mut terms = vec![SignedLog::from_f64(model.marginal(r2)?)];
    for k in 0..m {
        let q = marcum_q(&MarcumArgs::new(1 - k as i32, r2 * alpha, r1 * beta)?, cfg)?;
        if q > 0.0 {
            let ln = -u1 + k as f64 * ln_u1 - ln_factorial(k) + q.ln();
            terms.push(SignedLog::new(-1, ln));
        }
    }
    let marcum = MarcumArgs::new(0, r2 * beta, r1 * alpha)?;
    for k in 0..m {
        for i in 1..=(m - k) {
            for r in 0..=2 * (i - 1) {
                let poly = coeff_polynomial(i as u32, (k + i) as f64, r)?.eval_log(x);
                if poly.is_zero() {
                    continue;
                }
                let order = 2 - (k + i) as i32 + r as i32;
                let q = marcum_q(&MarcumArgs { m: order, ..marcum }, cfg)?;
                if q == 0.0 {
                    continue;
                }
                let power = (k + i) as f64 - r as f64 - 1.0;
                let ln = -u2 + r as f64 * (ln_one_minus_rho - ln_rho) - ln_factorial(k)
                    + power * (ln_u1 - ln_rho)
                    + q.ln();
                terms.push(poly.scale_exp(ln));
            }
        }
    }
    checked_probability(SignedLog::sum(terms).to_f64(), "bivariate Nakagami CDF")
}

/// Joint CDF of envelopes with mean powers Ω₁, Ω₂: F(r1/√Ω₁, r2/√Ω₂).
pub fn bivariate_nakagami_cdf(
    model: &NakagamiBivariate,
    r1: f64,
    r2: f64,
    cfg: &EvalConfig,
) -> Result<f64> {
    check_radius(r1, "r1")?;
    check_radius(r2, "r2")?;
    bivariate_nakagami_cdf_normalized(model, r1 / model.omega1.sqrt(), r2 / model.omega2.sqrt(), cfg)
}

/// Unit-power bivariate Rayleigh CDF,
///
/// ```text
/// 1 - e^{-r2²} - e^{-r1²} Q₁(r2 α, r1 β) + e^{-r2²} Q₁(r2 β, r1 α)
/// ```
///
/// with α, β taken at m = 1.
pub fn bivariate_rayleigh_cdf(rho: f64, r1: f64, r2: f64, cfg: &EvalConfig) -> Result<f64> {
    let model = NakagamiBivariate::normalized(1, rho)?;
    check_radius(r1, "r1")?;
    check_radius(r2, "r2")?;
    if r1 == 0.0 || r2 == 0.0 {
        return Ok(0.0);
    }
    if r1.is_infinite() || r2.is_infinite() || rho < RHO_INDEPENDENT {
        return bivariate_nakagami_cdf_normalized(&model, r1, r2, cfg);
    }
    let (alpha, beta) = (model.alpha, model.beta);
    let q_a = marcum_q(&MarcumArgs::new(1, r2 * alpha, r1 * beta)?, cfg)?;
    let q_b = marcum_q(&MarcumArgs::new(1, r2 * beta, r1 * alpha)?, cfg)?;
    let e1 = (-r1 * r1).exp();
    let e2 = (-r2 * r2).exp();
    // 1 - e2 computed as -expm1 to keep small r2 accurate
    let v = -(-r2 * r2).exp_m1() - e1 * q_a + e2 * q_b;
    checked_probability(v, "bivariate Rayleigh CDF")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cfg() -> EvalConfig {
        EvalConfig::default()
    }

    #[test]
    fn model_validation() {
        assert!(NakagamiBivariate::normalized(0, 0.5).is_err());
        assert!(NakagamiBivariate::normalized(2, -0.1).is_err());
        assert!(NakagamiBivariate::normalized(2, 1.0).is_err());
        assert!(NakagamiBivariate::new(2, 0.0, 1.0, 0.5).is_err());
        let m = NakagamiBivariate::normalized(2, 0.5).unwrap();
        assert!((m.alpha - 8f64.sqrt()).abs() < 1e-15);
        assert!(m.beta < m.alpha);
    }

    #[test]
    fn trivial_edges() {
        let m = NakagamiBivariate::normalized(3, 0.4).unwrap();
        assert_eq!(bivariate_nakagami_cdf_normalized(&m, 0.0, 1.0, &cfg()).unwrap(), 0.0);
        assert_eq!(bivariate_nakagami_cdf_normalized(&m, 1.0, 0.0, &cfg()).unwrap(), 0.0);
        let marginal = regularized_lower_gamma(3.0, 3.0 * 0.81).unwrap();
        let v = bivariate_nakagami_cdf_normalized(&m, f64::INFINITY, 0.9, &cfg()).unwrap();
        assert_eq!(v, marginal);
        // a large finite r1 approaches the marginal through the closed form
        let v = bivariate_nakagami_cdf_normalized(&m, 6.0, 0.9, &cfg()).unwrap();
        assert!((v - marginal).abs() < 1e-12, "{v} vs {marginal}");
        assert!(bivariate_nakagami_cdf_normalized(&m, -1.0, 1.0, &cfg()).is_err());
    }

    #[test]
    fn scaling_by_mean_power() {
        let scaled = NakagamiBivariate::new(2, 4.0, 1.0, 0.5).unwrap();
        let unit = NakagamiBivariate::normalized(2, 0.5).unwrap();
        let a = bivariate_nakagami_cdf(&scaled, 2.0, 0.7, &cfg()).unwrap();
        let b = bivariate_nakagami_cdf_normalized(&unit, 1.0, 0.7, &cfg()).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn unit_index_matches_rayleigh_form() {
        for &rho in &[0.1, 0.5, 0.9] {
            let m = NakagamiBivariate::normalized(1, rho).unwrap();
            for &(r1, r2) in &[(0.3, 0.4), (1.0, 1.0), (2.0, 0.5), (0.6, 2.5)] {
                let n = bivariate_nakagami_cdf_normalized(&m, r1, r2, &cfg()).unwrap();
                let r = bivariate_rayleigh_cdf(rho, r1, r2, &cfg()).unwrap();
                assert!((n - r).abs() < 1e-10, "rho={rho} ({r1},{r2}): {n} vs {r}");
            }
        }
    }

    #[test]
    fn rayleigh_independence_limit() {
        let (r1, r2): (f64, f64) = (0.8, 1.3);
        let indep = (1.0 - (-r1 * r1).exp()) * (1.0 - (-r2 * r2).exp());
        let v = bivariate_rayleigh_cdf(2e-6, r1, r2, &cfg()).unwrap();
        assert!((v - indep).abs() < 1e-6);
        let v = bivariate_rayleigh_cdf(0.0, r1, r2, &cfg()).unwrap();
        assert!((v - indep).abs() < 1e-15);
    }

    #[test]
    fn monte_carlo_reference_values() {
        // 4·10⁵-sample estimates from an independent complex-Gaussian simulation;
        // the bound is 4 binomial standard errors.
        let cases = [
            (2, 0.5, 1.0, 1.0, 0.432_962_5),
            (4, 0.9, 1.0, 1.0, 0.495_782_5),
            (1, 0.1, 0.5, 0.5, 0.053_445),
            (3, 0.3, 1.2, 0.7, 0.166_435),
        ];
        for &(m, rho, r1, r2, emp) in &cases {
            let model = NakagamiBivariate::normalized(m, rho).unwrap();
            let v = bivariate_nakagami_cdf_normalized(&model, r1, r2, &cfg()).unwrap();
            let se = (emp * (1.0 - emp) / 4e5_f64).sqrt();
            assert!((v - emp).abs() < 4.0 * se, "m={m} rho={rho}: {v} vs {emp}");
        }
    }

    #[test]
    fn nondecreasing_in_each_argument() {
        let model = NakagamiBivariate::normalized(3, 0.6).unwrap();
        let grid: Vec<f64> = (1..=12).map(|i| 0.2 * f64::from(i)).collect();
        for &r2 in &grid {
            let mut prev = 0.0;
            for &r1 in &grid {
                let v = bivariate_nakagami_cdf_normalized(&model, r1, r2, &cfg()).unwrap();
                assert!(v >= prev - 1e-12);
                prev = v;
            }
        }
    }
}
