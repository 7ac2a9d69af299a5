//! `phi3q`: evaluate, tabulate and verify Marcum-Q, Φ₃ and the derived CDFs.

mod args;
mod error;
mod functions;
mod params;
mod table;

use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use phi3q_core::verify::{self, Suite, VerifyOptions};

use args::{Cli, Command, CommonArgs, VerifyArgs};
use error::CliError;
use params::Params;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("phi3q: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}

fn run(cli: Cli) -> Result<u8, CliError> {
    match cli.command {
        Command::Eval(a) => {
            let cfg = a.common.config()?;
            let params = Params::parse(&a.params)?;
            let value = functions::evaluate(a.function, &params, &cfg)?;
            params.ensure_all_used()?;
            println!("{value}");
            Ok(0)
        }
        Command::Table(a) => {
            let cfg = a.common.config()?;
            table::write_table(a.function, &a.params, a.format, a.out.as_deref(), &cfg)?;
            Ok(0)
        }
        Command::Verify(a) => run_verify(a),
    }
}

fn run_verify(a: VerifyArgs) -> Result<u8, CliError> {
    let suites: Vec<Suite> = if a.suites.is_empty() {
        Suite::ALL.to_vec()
    } else {
        a.suites
            .iter()
            .map(|s| s.parse().map_err(|e: phi3q_core::Error| CliError::Usage(e.to_string())))
            .collect::<Result<_, _>>()?
    };
    let opts = VerifyOptions {
        cfg: verify_config(&a.common)?,
        tol: a.common.tol,
        grid: a.grid,
    };
    let report = verify::run(&suites, &opts)?;
    let json = report.to_json();
    match &a.out {
        Some(path) => std::fs::write(path, &json)?,
        None => std::io::stdout().write_all(json.as_bytes())?,
    }
    for c in report.failures() {
        eprintln!(
            "FAIL {} {} {:?}: measured {:?} > tolerance {:e}{}",
            c.suite,
            c.name,
            c.inputs,
            c.measured(),
            c.tolerance,
            c.error.as_deref().map(|e| format!(" ({e})")).unwrap_or_default()
        );
    }
    eprintln!(
        "{}: {} checks, {} passed, {} failed",
        report.suite, report.summary.total, report.summary.passed, report.summary.failed
    );
    Ok(if report.all_passed() { 0 } else { 1 })
}

/// For `verify`, `--tol` sets check tolerances, so the evaluators keep
/// their default truncation tolerance.
fn verify_config(common: &CommonArgs) -> Result<phi3q_core::EvalConfig, CliError> {
    CommonArgs { tol: None, ..common.clone() }.config()
}
