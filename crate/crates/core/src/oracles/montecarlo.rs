use nalgebra::DMatrix;
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::distributions::{NakagamiBivariate, WishartModel};
use crate::error::{Error, Result};

/// Samples per independent sub-stream. Chunk j is drawn from the ChaCha8
/// generator seeded with `seed` on stream j, so results do not depend on
/// the number of worker threads.
pub const CHUNK: usize = 1 << 14;
/// Smallest sample count accepted by [`empirical_cdf`].
pub const MIN_SAMPLES: usize = 10_000;

/// Draws from a seeded sampler, in generation order.
#[derive(Debug, Clone, PartialEq)]
pub struct McSamples<T> {
    pub values: Vec<T>,
    pub seed: u64,
}

/// Empirical probability with its binomial standard error.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct McResult {
    pub estimate: f64,
    pub std_error: f64,
    pub samples: usize,
    pub seed: u64,
}

fn chunk_rng(seed: u64, chunk: usize) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(chunk as u64);
    rng
}

/// Standard complex Gaussian: real and imaginary parts each of variance ½.
fn complex_normal<R: Rng>(rng: &mut R) -> Complex64 {
    let re: f64 = rng.sample(StandardNormal);
    let im: f64 = rng.sample(StandardNormal);
    Complex64::new(re, im) * std::f64::consts::FRAC_1_SQRT_2
}

fn chunked<T: Send, F>(n: usize, seed: u64, draw: F) -> McSamples<T>
where
    F: Fn(&mut ChaCha8Rng) -> T + Sync,
{
    let chunks = n.div_ceil(CHUNK);
    let parts: Vec<Vec<T>> = (0..chunks)
        .into_par_iter()
        .map(|j| {
            let mut rng = chunk_rng(seed, j);
            let len = CHUNK.min(n - j * CHUNK);
            (0..len).map(|_| draw(&mut rng)).collect()
        })
        .collect();
    McSamples {
        values: parts.into_iter().flatten().collect(),
        seed,
    }
}

/// Envelope pairs (R₁, R₂): for each draw, m pairs of standard complex
/// Gaussians g, h = √ρ g + √(1-ρ) ε, then R̂₁² = Σ|g|²/m, R̂₂² = Σ|h|²/m,
/// scaled by √Ω₁ and √Ω₂.
pub fn sample_bivariate_nakagami(
    model: &NakagamiBivariate,
    n: usize,
    seed: u64,
) -> McSamples<(f64, f64)> {
    let m = model.m as usize;
    let (sr, sc) = (model.rho.sqrt(), (1.0 - model.rho).sqrt());
    let (s1, s2) = (model.omega1.sqrt(), model.omega2.sqrt());
    chunked(n, seed, |rng| {
        let (mut p1, mut p2) = (0.0, 0.0);
        for _ in 0..m {
            let g = complex_normal(rng);
            let e = complex_normal(rng);
            let h = g * sr + e * sc;
            p1 += g.norm_sqr();
            p2 += h.norm_sqr();
        }
        (s1 * (p1 / m as f64).sqrt(), s2 * (p2 / m as f64).sqrt())
    })
}

/// Hermitian square root through the eigendecomposition.
fn hermitian_sqrt(sigma: &DMatrix<Complex64>) -> Result<DMatrix<Complex64>> {
    let eig = sigma.clone().symmetric_eigen();
    if eig.eigenvalues.iter().any(|&l| !(l > 0.0)) {
        return Err(Error::LinearAlgebra("Σ^{1/2} needs a positive definite Σ".into()));
    }
    let root = DMatrix::from_diagonal(&eig.eigenvalues.map(|l| Complex64::from(l.sqrt())));
    Ok(&eig.eigenvectors * root * eig.eigenvectors.adjoint())
}

/// Smallest eigenvalue of W = Xᴴ X with X = Υ + G Σ^{1/2}, G having
/// independent standard complex Gaussian entries.
pub fn sample_wishart_min_eig(model: &WishartModel, n: usize, seed: u64) -> Result<McSamples<f64>> {
    let root = hermitian_sqrt(&model.sigma)?;
    let m = model.m;
    Ok(chunked(n, seed, |rng| {
        let g = DMatrix::from_fn(m, m, |_, _| complex_normal(rng));
        let x = &model.upsilon + g * &root;
        (x.adjoint() * x).symmetric_eigenvalues().min()
    }))
}

/// Fraction of samples satisfying `hit`, with binomial standard error.
pub fn empirical_cdf<T: Sync, F>(samples: &McSamples<T>, hit: F) -> Result<McResult>
where
    F: Fn(&T) -> bool + Sync,
{
    let n = samples.values.len();
    if n < MIN_SAMPLES {
        return Err(Error::domain(format!(
            "empirical CDF needs at least {MIN_SAMPLES} samples, got {n}"
        )));
    }
    let count = samples.values.par_iter().filter(|v| hit(v)).count();
    let p = count as f64 / n as f64;
    Ok(McResult {
        estimate: p,
        std_error: (p * (1.0 - p) / n as f64).sqrt(),
        samples: n,
        seed: samples.seed,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    const N: usize = 200_000;

    #[test]
    fn nakagami_unit_power_and_correlation() {
        for &(m, rho) in &[(1, 0.3), (3, 0.8)] {
            let model = NakagamiBivariate::normalized(m, rho).unwrap();
            let s = sample_bivariate_nakagami(&model, N, 9);
            let n = N as f64;
            let x: Vec<f64> = s.values.iter().map(|p| p.0 * p.0).collect();
            let y: Vec<f64> = s.values.iter().map(|p| p.1 * p.1).collect();
            let mean = |v: &[f64]| v.iter().sum::<f64>() / n;
            let (mx, my) = (mean(&x), mean(&y));
            assert!((mx - 1.0).abs() < 3.0 / n.sqrt() && (my - 1.0).abs() < 3.0 / n.sqrt());
            let cov = x.iter().zip(&y).map(|(a, b)| (a - mx) * (b - my)).sum::<f64>() / n;
            let var = |v: &[f64], mu: f64| v.iter().map(|a| (a - mu) * (a - mu)).sum::<f64>() / n;
            let corr = cov / (var(&x, mx) * var(&y, my)).sqrt();
            assert!((corr - rho).abs() < 5.0 / n.sqrt(), "m={m}: corr {corr}");
        }
    }

    #[test]
    fn wishart_central_law_and_first_moment() {
        let model = WishartModel::central_identity(2).unwrap();
        let s = sample_wishart_min_eig(&model, N, 3).unwrap();
        let lambda = 0.4;
        let r = empirical_cdf(&s, |&l| l > lambda).unwrap();
        assert!((r.estimate - (-2.0 * lambda).exp()).abs() < 3.0 * r.std_error);

        // E[tr W] = tr(Υᴴ Υ) + m tr Σ
        let model = WishartModel::random_rank_one(3, 5).unwrap();
        let root = hermitian_sqrt(&model.sigma).unwrap();
        let mut rng = chunk_rng(1, 0);
        let trials = 40_000;
        let mut total = 0.0;
        for _ in 0..trials {
            let g = DMatrix::from_fn(3, 3, |_, _| complex_normal(&mut rng));
            let x = &model.upsilon + g * &root;
            total += (x.adjoint() * x).trace().re;
        }
        let expected = (model.upsilon.adjoint() * &model.upsilon).trace().re + 3.0 * model.sigma.trace().re;
        assert!((total / trials as f64 - expected).abs() < 0.02 * expected);
    }

    #[test]
    fn reproducible_and_thread_independent() {
        let model = NakagamiBivariate::normalized(2, 0.5).unwrap();
        let a = sample_bivariate_nakagami(&model, 50_000, 42);
        let b = sample_bivariate_nakagami(&model, 50_000, 42);
        assert_eq!(a, b);
        let single = rayon::ThreadPoolBuilder::new().num_threads(1).build().unwrap();
        let c = single.install(|| sample_bivariate_nakagami(&model, 50_000, 42));
        assert_eq!(a, c);
        let ra = empirical_cdf(&a, |p| p.0 <= 1.0 && p.1 <= 1.0).unwrap();
        let rb = empirical_cdf(&b, |p| p.0 <= 1.0 && p.1 <= 1.0).unwrap();
        assert_eq!(ra, rb);
        assert_ne!(a, sample_bivariate_nakagami(&model, 50_000, 43));
    }

    #[test]
    fn empirical_cdf_edges() {
        let s = McSamples { values: vec![0.5; MIN_SAMPLES], seed: 0 };
        let all = empirical_cdf(&s, |&v| v <= 1.0).unwrap();
        assert_eq!((all.estimate, all.std_error), (1.0, 0.0));
        assert_eq!(empirical_cdf(&s, |_| false).unwrap().estimate, 0.0);
        let short = McSamples { values: vec![0.5; 10], seed: 0 };
        assert!(empirical_cdf(&short, |_| true).is_err());
    }
}
