use phi3q_core::distributions::{
    bivariate_nakagami_cdf, bivariate_rayleigh_cdf, wishart_min_eig_cdf_marcum, wishart_min_eig_cdf_phi3,
};
use phi3q_core::marcum::{marcum_q, marcum_q_via_phi3};
use phi3q_core::oracles::marcum_quadrature;
use phi3q_core::phi3::{phi3_series, phi3_tilde_recursive, phi3_tilde_series, phi3_tilde_via_marcum};
use phi3q_core::{EvalConfig, Error, MarcumArgs, NakagamiBivariate, Phi3Args, WishartModel};

use crate::args::Function;
use crate::error::CliError;
use crate::params::Params;

fn method<'a>(params: &'a Params, allowed: &[&'a str]) -> Result<&'a str, CliError> {
    let chosen = params.raw("method").unwrap_or(allowed[0]);
    allowed
        .iter()
        .copied()
        .find(|m| *m == chosen)
        .ok_or_else(|| CliError::Usage(format!("method must be one of {}, got '{chosen}'", allowed.join(", "))))
}

fn order<T: TryFrom<i64>>(params: &Params, key: &str) -> Result<T, CliError> {
    let v = params.int(key)?;
    T::try_from(v).map_err(|_| CliError::Core(Error::Domain(format!("{key} = {v} is out of range"))))
}

fn phi3_args(params: &Params) -> Result<Phi3Args, CliError> {
    Ok(Phi3Args::new(params.f64("b")?, params.f64("c")?, params.f64("w")?, params.f64("z")?))
}

fn wishart_model(params: &Params, cfg: &EvalConfig) -> Result<WishartModel, CliError> {
    let m: usize = order(params, "m")?;
    let model = match params.raw("model").unwrap_or("random") {
        "random" => {
            let seed = params.int_or("model-seed", cfg.seed as i64)?;
            let seed = u64::try_from(seed).map_err(|_| CliError::Usage("model-seed must be >= 0".into()))?;
            WishartModel::random_rank_one(m, seed)?
        }
        "central" => WishartModel::central_identity(m)?,
        other => return Err(CliError::Usage(format!("model must be random or central, got '{other}'"))),
    };
    Ok(model)
}

/// Parameters, by function:
///
/// * marcum: m a b [method=series|phi3|quadrature]
/// * phi3, phi3-tilde: b c w z [method=series|marcum|recursive for phi3-tilde]
/// * nakagami-cdf: m rho r1 r2 [omega1=1 omega2=1]
/// * rayleigh-cdf: rho r1 r2
/// * wishart-cdf: m lambda [model=random|central model-seed=<seed> method=marcum|series]
pub fn evaluate(function: Function, params: &Params, cfg: &EvalConfig) -> Result<f64, CliError> {
    let value = match function {
        Function::Marcum => {
            let args = MarcumArgs::new(order(params, "m")?, params.f64("a")?, params.f64("b")?)?;
            match method(params, &["series", "phi3", "quadrature"])? {
                "series" => marcum_q(&args, cfg)?,
                "phi3" => marcum_q_via_phi3(&args, cfg)?,
                _ => marcum_quadrature(&args, cfg)?,
            }
        }
        Function::Phi3 => phi3_series(&phi3_args(params)?, cfg)?,
        Function::Phi3Tilde => {
            let args = phi3_args(params)?;
            match method(params, &["series", "marcum", "recursive"])? {
                "series" => phi3_tilde_series(&args, cfg)?,
                "marcum" => phi3_tilde_via_marcum(&args, cfg)?,
                _ => phi3_tilde_recursive(&args, cfg)?,
            }
        }
        Function::NakagamiCdf => {
            let model = NakagamiBivariate::new(
                order(params, "m")?,
                params.f64_or("omega1", 1.0)?,
                params.f64_or("omega2", 1.0)?,
                params.f64("rho")?,
            )?;
            bivariate_nakagami_cdf(&model, params.f64("r1")?, params.f64("r2")?, cfg)?
        }
        Function::RayleighCdf => bivariate_rayleigh_cdf(params.f64("rho")?, params.f64("r1")?, params.f64("r2")?, cfg)?,
        Function::WishartCdf => {
            let model = wishart_model(params, cfg)?;
            let lambda = params.f64("lambda")?;
            match method(params, &["marcum", "series"])? {
                "marcum" => wishart_min_eig_cdf_marcum(&model, lambda, cfg)?,
                _ => wishart_min_eig_cdf_phi3(&model, lambda, cfg)?,
            }
        }
    };
    Ok(value)
}
