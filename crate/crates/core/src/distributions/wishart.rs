use nalgebra::DMatrix;
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

use super::checked_probability;
use crate::config::EvalConfig;
use crate::error::{Error, Result};
use crate::phi3::{phi3_tilde_series_log, phi3_tilde_via_marcum_log, Phi3Args};
use crate::special::log_gamma;

/// Largest ratio σ₂/σ₁ of singular values for which Υ counts as rank one.
pub const RANK_ONE_RATIO: f64 = 1e-10;
const HERMITIAN_TOL: f64 = 1e-12;

/// X ~ CN(Υ, I ⊗ Σ) with square m×m X, and W = X^H X.
///
/// Construction checks that Σ is Hermitian positive definite and that Υ has
/// rank at most one, then caches the scalars the minimum-eigenvalue CDF
/// depends on.
#[derive(Debug, Clone, PartialEq)]
pub struct WishartModel {
    pub m: usize,
    pub sigma: DMatrix<Complex64>,
    pub upsilon: DMatrix<Complex64>,
    /// Σ⁻¹ Υ^H Υ
    pub theta: DMatrix<Complex64>,
    /// tr Θ
    pub eta: f64,
    /// tr(Θ Σ⁻¹)
    pub mu: f64,
    /// tr Σ⁻¹
    pub trace_sigma_inv: f64,
}

impl WishartModel {
    pub fn new(sigma: DMatrix<Complex64>, upsilon: DMatrix<Complex64>) -> Result<Self> {
        let m = sigma.nrows();
        if m == 0 || !sigma.is_square() || upsilon.shape() != (m, m) {
            return Err(Error::LinearAlgebra(format!(
                "need square Σ and Υ of equal size, got {:?} and {:?}",
                sigma.shape(),
                upsilon.shape()
            )));
        }
        if sigma.iter().chain(upsilon.iter()).any(|z| !z.re.is_finite() || !z.im.is_finite()) {
            return Err(Error::domain("Σ and Υ must have finite entries"));
        }
        let asym = (&sigma - sigma.adjoint()).norm();
        if asym > HERMITIAN_TOL * sigma.norm() {
            return Err(Error::LinearAlgebra(format!("Σ is not Hermitian (‖Σ - Σᴴ‖ = {asym:e})")));
        }
        let eig = sigma.clone().symmetric_eigen();
        let min_eig = eig.eigenvalues.min();
        if !(min_eig > 0.0) {
            return Err(Error::LinearAlgebra(format!(
                "Σ is not positive definite (smallest eigenvalue {min_eig:e})"
            )));
        }
        let inv_diag = DMatrix::from_diagonal(&eig.eigenvalues.map(|l| Complex64::from(1.0 / l)));
        let sigma_inv = &eig.eigenvectors * inv_diag * eig.eigenvectors.adjoint();

        let mut sv: Vec<f64> = upsilon.clone().singular_values().iter().copied().collect();
        sv.sort_by(|a, b| b.total_cmp(a));
        if sv[0] > 0.0 && sv.len() > 1 && sv[1] / sv[0] >= RANK_ONE_RATIO {
            return Err(Error::LinearAlgebra(format!(
                "Υ must have rank <= 1 (singular value ratio {:e})",
                sv[1] / sv[0]
            )));
        }

        let theta = &sigma_inv * upsilon.adjoint() * &upsilon;
        let eta = theta.trace().re.max(0.0);
        let mu = (&theta * &sigma_inv).trace().re.max(0.0);
        let trace_sigma_inv = sigma_inv.trace().re;
        Ok(Self {
            m,
            sigma,
            upsilon,
            theta,
            eta,
            mu,
            trace_sigma_inv,
        })
    }

    /// Σ = I, Υ = 0.
    pub fn central_identity(m: usize) -> Result<Self> {
        Self::new(DMatrix::identity(m, m), DMatrix::zeros(m, m))
    }

    /// A random valid model: Σ = A Aᴴ/m + I/2 and Υ = 0.7 u vᴴ with A, u, v
    /// standard complex Gaussian, drawn from a seeded ChaCha8 stream.
    pub fn random_rank_one(m: usize, seed: u64) -> Result<Self> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut cn = || {
            let re: f64 = rng.sample(StandardNormal);
            let im: f64 = rng.sample(StandardNormal);
            Complex64::new(re, im) * std::f64::consts::FRAC_1_SQRT_2
        };
        let a = DMatrix::from_fn(m, m, |_, _| cn());
        let u = DMatrix::from_fn(m, 1, |_, _| cn());
        let v = DMatrix::from_fn(m, 1, |_, _| cn());
        let mut sigma = &a * a.adjoint() / Complex64::from(m as f64)
            + DMatrix::identity(m, m) * Complex64::from(0.5);
        // exact Hermitian symmetry after rounding in the product
        sigma = (&sigma + sigma.adjoint()) * Complex64::from(0.5);
        let upsilon = u * v.adjoint() * Complex64::from(0.7);
        Self::new(sigma, upsilon)
    }

    fn check_lambda(lambda: f64) -> Result<()> {
        if lambda >= 0.0 {
            Ok(())
        } else {
            Err(Error::domain(format!("λ must be >= 0, got {lambda}")))
        }
    }

    /// -η - λ tr Σ⁻¹ + ln Γ(m), the log prefactor shared by both paths.
    fn log_prefactor(&self, lambda: f64) -> Result<f64> {
        Ok(-self.eta - lambda * self.trace_sigma_inv + log_gamma(self.m as f64)?)
    }
}

/// P(λ_min ≤ λ) = 1 - exp(-η - λ tr Σ⁻¹) Φ₃(m, m; η, λμ), with Φ₃ summed as
/// a double series.
pub fn wishart_min_eig_cdf_phi3(model: &WishartModel, lambda: f64, cfg: &EvalConfig) -> Result<f64> {
    WishartModel::check_lambda(lambda)?;
    if lambda == 0.0 {
        return Ok(0.0);
    }
    if lambda.is_infinite() {
        return Ok(1.0);
    }
    let m = model.m as f64;
    let tail = phi3_tilde_series_log(&Phi3Args::new(m, m, model.eta, lambda * model.mu), cfg)?
        .scale_exp(model.log_prefactor(lambda)?);
    checked_probability(1.0 - tail.to_f64(), "Wishart minimum-eigenvalue CDF")
}

/// The same CDF with Φ₃(m, m; η, λμ) replaced by its finite Marcum-Q
/// expansion. λ = 0, η = 0 or μ = 0 fall back to the series path.
pub fn wishart_min_eig_cdf_marcum(model: &WishartModel, lambda: f64, cfg: &EvalConfig) -> Result<f64> {
    WishartModel::check_lambda(lambda)?;
    let z = lambda * model.mu;
    if lambda == 0.0 || lambda.is_infinite() || model.eta == 0.0 || z == 0.0 {
        return wishart_min_eig_cdf_phi3(model, lambda, cfg);
    }
    let m = model.m as f64;
    let tail = phi3_tilde_via_marcum_log(&Phi3Args::new(m, m, model.eta, z), model.log_prefactor(lambda)?, cfg)?;
    checked_probability(1.0 - tail.to_f64(), "Wishart minimum-eigenvalue CDF")
}

/// d_min ≥ √λ_min · d₀.
pub fn mimo_min_distance_bound(lambda_min: f64, d0: f64) -> Result<f64> {
    if !(lambda_min >= 0.0) {
        return Err(Error::domain(format!("λ_min must be >= 0, got {lambda_min}")));
    }
    if !(d0 > 0.0) {
        return Err(Error::domain(format!("d0 must be > 0, got {d0}")));
    }
    Ok(lambda_min.sqrt() * d0)
}

/// Upper bound on P(SINR < threshold) for zero-forcing detection, using
/// SINR ≥ E_s/(N_t σ²) · λ_min: returns F_{λ_min}(threshold · N_t / snr).
pub fn mimo_outage_upper_bound(
    model: &WishartModel,
    snr_per_symbol: f64,
    nt: usize,
    sinr_threshold: f64,
    cfg: &EvalConfig,
) -> Result<f64> {
    if nt != model.m {
        return Err(Error::domain(format!(
            "channel has {} transmit antennas but the model dimension is {}",
            nt, model.m
        )));
    }
    if !(snr_per_symbol > 0.0) || !snr_per_symbol.is_finite() {
        return Err(Error::domain(format!("snr must be finite and > 0, got {snr_per_symbol}")));
    }
    if !(sinr_threshold >= 0.0) {
        return Err(Error::domain(format!("threshold must be >= 0, got {sinr_threshold}")));
    }
    wishart_min_eig_cdf_marcum(model, sinr_threshold * nt as f64 / snr_per_symbol, cfg)
}
