use rayon::prelude::*;

use super::report::{Check, Metric};
use super::VerifyOptions;
use crate::distributions::{
    bivariate_nakagami_cdf, bivariate_nakagami_cdf_normalized, bivariate_rayleigh_cdf,
    wishart_min_eig_cdf_marcum, wishart_min_eig_cdf_phi3, NakagamiBivariate, WishartModel,
};
use crate::error::Result;
use crate::marcum::{marcum_q, marcum_q_via_phi3, MarcumArgs};
use crate::oracles::{
    empirical_cdf, laplace_transform_check, marcum_quadrature, phi3_tilde_rectangular,
    sample_bivariate_nakagami, sample_wishart_min_eig,
};
use crate::phi3::{phi3_tilde_recursive, phi3_tilde_series, phi3_tilde_via_marcum, Phi3Args};

const PHI3_WZ: [f64; 5] = [0.1, 0.5, 1.0, 2.0, 5.0];
const RECTANGLE: usize = 96;
const MC_SIGMAS: f64 = 3.0;

fn log_grid(lo: f64, hi: f64, n: usize) -> Vec<f64> {
    let (l, h) = (lo.ln(), hi.ln());
    (0..n)
        .map(|i| (l + (h - l) * i as f64 / (n - 1) as f64).exp())
        .collect()
}

fn lin_grid(lo: f64, hi: f64, n: usize) -> Vec<f64> {
    (0..n).map(|i| lo + (hi - lo) * i as f64 / (n - 1) as f64).collect()
}

fn par_checks<T: Sync, F>(jobs: &[T], f: F) -> Vec<Check>
where
    F: Fn(&T) -> Vec<Check> + Sync + Send,
{
    jobs.par_iter().map(f).collect::<Vec<_>>().into_iter().flatten().collect()
}

/// Analytical value against an empirical CDF, within three binomial
/// standard errors evaluated at the analytical probability.
fn mc_check(suite: &str, inputs: &[(&str, f64)], analytic: Result<f64>, empirical: f64, n: usize) -> Check {
    let p = analytic.as_ref().map_or(empirical, |&p| p);
    let tol = MC_SIGMAS * (p * (1.0 - p) / n as f64).sqrt();
    Check::compare(suite, "cdf-vs-simulation", inputs, analytic, Ok(empirical), Metric::Absolute, tol)
}

fn phi3_grid(opts: &VerifyOptions) -> Vec<Phi3Args> {
    let wz: Vec<f64> = match opts.grid {
        Some(n) => log_grid(0.1, 5.0, n.max(2)),
        None => PHI3_WZ.to_vec(),
    };
    let mut out = Vec::new();
    for b in 1..=4 {
        for c in -2..=4 {
            for &w in &wz {
                for &z in &wz {
                    out.push(Phi3Args::new(f64::from(b), f64::from(c), w, z));
                }
            }
        }
    }
    out
}

fn phi3_inputs(a: &Phi3Args) -> [(&'static str, f64); 4] {
    [("b", a.b), ("c", a.c), ("w", a.w), ("z", a.z)]
}

pub(super) fn marcum_cross(opts: &VerifyOptions) -> Vec<Check> {
    const S: &str = "marcum-cross";
    let cfg = &opts.cfg;
    let axis = log_grid(0.1, 10.0, opts.grid(7));
    let mut jobs = Vec::new();
    for m in -3..=6 {
        for &a in &axis {
            for &b in &axis {
                jobs.push((m, a, b));
            }
        }
    }
    let (cross_tol, identity_tol) = (opts.tol(1e-8), opts.tol(1e-12));
    par_checks(&jobs, |&(m, a, b)| {
        let args = MarcumArgs { m, a, b };
        let inputs = [("m", f64::from(m)), ("a", a), ("b", b)];
        let series = marcum_q(&args, cfg);
        let quad = marcum_quadrature(&args, cfg);
        let phi3 = marcum_q_via_phi3(&args, cfg);
        let swapped = marcum_q(&MarcumArgs { m: 1 - m, a: b, b: a }, cfg);
        let identity = match (&series, &swapped) {
            (Ok(x), Ok(y)) => Ok(x + y),
            (Err(e), _) | (_, Err(e)) => Err(e.clone()),
        };
        vec![
            Check::compare(S, "series-vs-quadrature", &inputs, series.clone(), quad.clone(), Metric::Relative, cross_tol),
            Check::compare(S, "series-vs-phi3", &inputs, series, phi3.clone(), Metric::Relative, cross_tol),
            Check::compare(S, "phi3-vs-quadrature", &inputs, phi3, quad, Metric::Relative, cross_tol),
            Check::compare(S, "order-swap-identity", &inputs, identity, Ok(1.0), Metric::Absolute, identity_tol),
        ]
    })
}

pub(super) fn phi3_paths(opts: &VerifyOptions) -> Vec<Check> {
    const S: &str = "phi3-paths";
    let cfg = &opts.cfg;
    let (tol, rect_tol) = (opts.tol(1e-8), opts.tol(1e-10));
    par_checks(&phi3_grid(opts), |args| {
        let inputs = phi3_inputs(args);
        let series = phi3_tilde_series(args, cfg);
        vec![
            Check::compare(S, "marcum-vs-series", &inputs, phi3_tilde_via_marcum(args, cfg), series.clone(), Metric::Relative, tol),
            Check::compare(
                S,
                "series-vs-rectangle",
                &inputs,
                series,
                Ok(phi3_tilde_rectangular(args, RECTANGLE, RECTANGLE)),
                Metric::Relative,
                rect_tol,
            ),
        ]
    })
}

pub(super) fn recursion(opts: &VerifyOptions) -> Vec<Check> {
    const S: &str = "recursion";
    let cfg = &opts.cfg;
    let (tol, step_tol) = (opts.tol(1e-8), opts.tol(1e-9));
    par_checks(&phi3_grid(opts), |args| {
        let inputs = phi3_inputs(args);
        let series = phi3_tilde_series(args, cfg);
        let mut out = vec![Check::compare(
            S,
            "recursive-vs-series",
            &inputs,
            phi3_tilde_recursive(args, cfg),
            series.clone(),
            Metric::Relative,
            tol,
        )];
        if args.b >= 2.0 {
            // (b-1) w Φ̃₃(b, c) = Φ̃₃(b-1, c-2) - (c-2) Φ̃₃(b-1, c-1) - z Φ̃₃(b-1, c)
            let Phi3Args { b, c, w, z } = *args;
            let lower = |dc: f64| phi3_tilde_series(&Phi3Args::new(b - 1.0, c - dc, w, z), cfg);
            let step = (|| Ok((lower(2.0)? - (c - 2.0) * lower(1.0)? - z * lower(0.0)?) / ((b - 1.0) * w)))();
            out.push(Check::compare(S, "one-step-identity", &inputs, step, series, Metric::Relative, step_tol));
        }
        out
    })
}

pub(super) fn laplace(opts: &VerifyOptions) -> Vec<Check> {
    const S: &str = "laplace";
    // every point has s >= 2(x + 1)
    const POINTS: [(f64, f64, f64, f64, f64); 12] = [
        (1.0, 2.0, 0.5, 0.0, 4.0),
        (2.0, 3.0, 0.5, 1.0, 4.0),
        (1.0, 1.0, 0.0, 0.0, 2.0),
        (0.5, 0.5, 1.0, 2.0, 4.0),
        (3.0, 2.0, 1.0, 1.0, 5.0),
        (1.0, 1.5, 2.0, 0.5, 6.0),
        (2.0, 1.0, 0.25, 3.0, 3.0),
        (1.5, 2.5, 0.0, 1.0, 2.0),
        (4.0, 3.0, 1.0, 2.0, 5.0),
        (1.0, 4.0, 0.5, 5.0, 3.0),
        (2.0, 0.75, 0.5, 0.5, 3.0),
        (-1.0, 1.0, 2.0, 2.0, 6.0),
    ];
    let cfg = &opts.cfg;
    let tol = opts.tol(1e-6);
    par_checks(&POINTS, |&(b, c, x, y, s)| {
        let inputs = [("b", b), ("c", c), ("x", x), ("y", y), ("s", s)];
        let (numeric, closed) = match laplace_transform_check(b, c, x, y, s, cfg) {
            Ok(r) => (Ok(r.numeric), Ok(r.closed_form)),
            Err(e) => (Err(e.clone()), Err(e)),
        };
        vec![Check::compare(S, "quadrature-vs-closed-form", &inputs, numeric, closed, Metric::Relative, tol)]
    })
}

pub(super) fn reduction(opts: &VerifyOptions) -> Result<Vec<Check>> {
    const S: &str = "reduction";
    let cfg = &opts.cfg;
    let tol = opts.tol(1e-10);
    let axis = lin_grid(0.2, 2.0, opts.grid(10));
    let mut jobs = Vec::new();
    for rho in [0.1, 0.5, 0.9] {
        let model = NakagamiBivariate::normalized(1, rho)?;
        for &r1 in &axis {
            for &r2 in &axis {
                jobs.push((model, r1, r2));
            }
        }
    }
    Ok(par_checks(&jobs, |(model, r1, r2)| {
        let inputs = [("rho", model.rho), ("r1", *r1), ("r2", *r2)];
        vec![Check::compare(
            S,
            "nakagami-m1-vs-rayleigh",
            &inputs,
            bivariate_nakagami_cdf_normalized(model, *r1, *r2, cfg),
            bivariate_rayleigh_cdf(model.rho, *r1, *r2, cfg),
            Metric::Absolute,
            tol,
        )]
    }))
}

/// Largest decrease along either axis and most negative rectangle mass of a
/// CDF tabulated on a grid whose first row and column lie on the axes.
fn axiom_violations(table: &[Vec<f64>]) -> (f64, f64) {
    let (mut mono, mut mass) = (0.0f64, 0.0f64);
    for i in 1..table.len() {
        for j in 1..table[i].len() {
            mono = mono.max(table[i - 1][j] - table[i][j]).max(table[i][j - 1] - table[i][j]);
            let m = table[i][j] - table[i - 1][j] - table[i][j - 1] + table[i - 1][j - 1];
            mass = mass.max(-m);
        }
    }
    (mono, mass)
}

pub(super) fn cdf_axioms(opts: &VerifyOptions) -> Result<Vec<Check>> {
    const S: &str = "cdf-axioms";
    let cfg = &opts.cfg;
    let tol = opts.tol(1e-9);
    let mut axis = vec![0.0];
    axis.extend(lin_grid(0.2, 2.0, opts.grid(10)));

    let mut jobs: Vec<(u32, f64)> = Vec::new();
    for m in [1, 2, 4] {
        for rho in [0.1, 0.5, 0.9] {
            jobs.push((m, rho));
        }
    }
    let mut checks = par_checks(&jobs, |&(m, rho)| {
        let inputs = [("m", f64::from(m)), ("rho", rho)];
        let table: Result<Vec<Vec<f64>>> = NakagamiBivariate::normalized(m, rho).and_then(|model| {
            axis.iter()
                .map(|&r1| axis.iter().map(|&r2| bivariate_nakagami_cdf_normalized(&model, r1, r2, cfg)).collect())
                .collect()
        });
        let (mono, mass) = match table {
            Ok(t) => {
                let (a, b) = axiom_violations(&t);
                (Ok(a), Ok(b))
            }
            Err(e) => (Err(e.clone()), Err(e)),
        };
        vec![
            Check::compare(S, "nakagami-monotone", &inputs, mono, Ok(0.0), Metric::Absolute, tol),
            Check::compare(S, "nakagami-rectangle-mass", &inputs, mass, Ok(0.0), Metric::Absolute, tol),
        ]
    });

    let lambdas = lin_grid(0.0, 3.0, 4 * opts.grid(10));
    for m in [2, 3] {
        for j in 0..2u64 {
            let model = WishartModel::random_rank_one(m, opts.cfg.seed.wrapping_add(j))?;
            let values: Result<Vec<f64>> = lambdas.iter().map(|&l| wishart_min_eig_cdf_marcum(&model, l, cfg)).collect();
            let drop = values.map(|v| v.windows(2).map(|w| w[0] - w[1]).fold(0.0, f64::max));
            let inputs = [("m", m as f64), ("model", j as f64)];
            checks.push(Check::compare(S, "wishart-monotone", &inputs, drop, Ok(0.0), Metric::Absolute, tol));
        }
    }
    Ok(checks)
}

pub(super) fn nakagami_mc(opts: &VerifyOptions) -> Result<Vec<Check>> {
    const S: &str = "nakagami-mc";
    let cfg = &opts.cfg;
    let n = cfg.mc_samples;
    let axis = match opts.grid {
        Some(k) => lin_grid(0.5, 1.5, k.max(2)),
        None => vec![0.5, 1.0, 1.5],
    };
    let mut models = Vec::new();
    for m in [1, 2, 4] {
        for rho in [0.1, 0.5, 0.9] {
            models.push(NakagamiBivariate::normalized(m, rho)?);
        }
    }
    models.push(NakagamiBivariate::new(1, 2.0, 2.0, 0.3)?);

    let mut checks = Vec::new();
    for model in &models {
        let samples = sample_bivariate_nakagami(model, n, cfg.seed);
        for &r1 in &axis {
            for &r2 in &axis {
                let emp = empirical_cdf(&samples, |p| p.0 <= r1 && p.1 <= r2)?;
                let inputs = [
                    ("m", f64::from(model.m)),
                    ("omega1", model.omega1),
                    ("omega2", model.omega2),
                    ("rho", model.rho),
                    ("r1", r1),
                    ("r2", r2),
                ];
                checks.push(mc_check(S, &inputs, bivariate_nakagami_cdf(model, r1, r2, cfg), emp.estimate, n));
            }
        }
    }
    Ok(checks)
}

pub(super) fn wishart_mc(opts: &VerifyOptions) -> Result<Vec<Check>> {
    const S: &str = "wishart-mc";
    let cfg = &opts.cfg;
    let n = cfg.mc_samples;
    let lambdas = match opts.grid {
        Some(k) => lin_grid(0.1, 2.0, k.max(2)),
        None => vec![0.1, 0.5, 1.0, 2.0],
    };
    let (path_tol, central_tol) = (opts.tol(1e-8), opts.tol(1e-9));
    let mut checks = Vec::new();
    for m in [2usize, 3] {
        for j in 0..2u64 {
            let model = WishartModel::random_rank_one(m, cfg.seed.wrapping_add(j))?;
            let samples = sample_wishart_min_eig(&model, n, cfg.seed)?;
            for &lambda in &lambdas {
                let inputs = [("m", m as f64), ("model", j as f64), ("eta", model.eta), ("mu", model.mu), ("lambda", lambda)];
                let series = wishart_min_eig_cdf_phi3(&model, lambda, cfg);
                let marcum = wishart_min_eig_cdf_marcum(&model, lambda, cfg);
                checks.push(Check::compare(S, "marcum-vs-series", &inputs, marcum.clone(), series, Metric::Relative, path_tol));
                let emp = empirical_cdf(&samples, |&l| l <= lambda)?;
                checks.push(mc_check(S, &inputs, marcum, emp.estimate, n));
            }
        }
    }
    for m in [2usize, 3, 4] {
        let model = WishartModel::central_identity(m)?;
        for &lambda in &lambdas {
            let inputs = [("m", m as f64), ("lambda", lambda)];
            let exact = Ok(-(-lambda * m as f64).exp_m1());
            for (name, value) in [
                ("central-series-vs-exponential", wishart_min_eig_cdf_phi3(&model, lambda, cfg)),
                ("central-marcum-vs-exponential", wishart_min_eig_cdf_marcum(&model, lambda, cfg)),
            ] {
                checks.push(Check::compare(S, name, &inputs, value, exact.clone(), Metric::Absolute, central_tol));
            }
        }
    }
    Ok(checks)
}
