//! One line per acceptance criterion; exits non-zero if any fails.

use std::process::ExitCode;
use std::time::Instant;

use phi3q_core::verify::{run, run_suite, Check, Suite, VerifyOptions};
use phi3q_core::Result;

struct Outcome {
    passed: bool,
    detail: String,
}

fn summarize(checks: &[Check], names: &[&str]) -> Outcome {
    let selected: Vec<&Check> = checks
        .iter()
        .filter(|c| names.is_empty() || names.contains(&c.name.as_str()))
        .collect();
    let failed = selected.iter().filter(|c| !c.passed).count();
    let worst = selected
        .iter()
        .filter_map(|c| c.measured().map(|m| m / c.tolerance))
        .fold(0.0f64, f64::max);
    let mut detail = format!("{} checks, {} failed, worst error/tolerance {:.3}", selected.len(), failed, worst);
    if let Some(c) = selected.iter().find(|c| !c.passed) {
        detail.push_str(&format!("; first failure {} {:?} measured {:?}", c.name, c.inputs, c.measured()));
    }
    Outcome {
        passed: failed == 0 && !selected.is_empty(),
        detail,
    }
}

fn suite(s: Suite, names: &[&str]) -> Result<Outcome> {
    Ok(summarize(&run_suite(s, &VerifyOptions::default())?, names))
}

fn determinism() -> Result<Outcome> {
    let mut opts = VerifyOptions::default();
    opts.cfg.mc_samples = 100_000;
    let suites = [Suite::Laplace, Suite::NakagamiMc, Suite::WishartMc];
    let first = run(&suites, &opts)?.to_json();
    let second = run(&suites, &opts)?.to_json();
    Ok(Outcome {
        passed: first == second,
        detail: format!("{} report bytes, identical: {}", first.len(), first == second),
    })
}

fn main() -> ExitCode {
    type Criterion = (&'static str, Box<dyn Fn() -> Result<Outcome>>);
    let criteria: Vec<Criterion> = vec![
        ("1 Marcum-Q expansion of Phi3 matches the series (rel 1e-8)", Box::new(|| suite(Suite::Phi3Paths, &["marcum-vs-series"]))),
        ("2 Reduction to first parameter 1 and one-step recursion (1e-8 / 1e-9)", Box::new(|| suite(Suite::Recursion, &[]))),
        ("3 Marcum-Q series, quadrature and Phi3 form; order-swap identity (1e-8 / 1e-12)", Box::new(|| suite(Suite::MarcumCross, &[]))),
        ("4 Laplace transform of Phi3 (rel 1e-6, 12 points)", Box::new(|| suite(Suite::Laplace, &[]))),
        ("5 Nakagami m = 1 equals the bivariate Rayleigh form (abs 1e-10)", Box::new(|| suite(Suite::Reduction, &[]))),
        ("6 Nakagami CDF within 3 SE of simulation at 1e6 samples", Box::new(|| suite(Suite::NakagamiMc, &[]))),
        ("7 Wishart paths (1e-8), simulation (3 SE) and central case (1e-9)", Box::new(|| suite(Suite::WishartMc, &[]))),
        ("8 CDF monotonicity and rectangle mass (-1e-9)", Box::new(|| suite(Suite::CdfAxioms, &[]))),
        ("9 Identical verify runs give byte-identical reports", Box::new(determinism)),
    ];

    let mut all = true;
    for (label, f) in &criteria {
        let start = Instant::now();
        let (ok, detail) = match f() {
            Ok(o) => (o.passed, o.detail),
            Err(e) => (false, format!("error: {e}")),
        };
        all &= ok;
        println!(
            "criterion {label}: {} ({detail}; {:.1?})",
            if ok { "PASS" } else { "FAIL" },
            start.elapsed()
        );
    }
    if all {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
