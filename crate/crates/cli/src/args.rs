use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use phi3q_core::EvalConfig;

use crate::error::CliError;

#[derive(Debug, Parser)]
#[command(name = "phi3q", version, about = "Marcum-Q, Phi3 and the bivariate Nakagami / Wishart CDFs")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate one function at one point, e.g. `eval marcum m=1 a=1 b=2`.
    Eval(EvalArgs),
    /// Evaluate a function over a grid, e.g. `table marcum m=1 a=0.5:2:4 b=1,2`.
    Table(TableArgs),
    /// Run verification suites and write a JSON report.
    Verify(VerifyArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Function {
    Marcum,
    Phi3,
    Phi3Tilde,
    NakagamiCdf,
    RayleighCdf,
    WishartCdf,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Debug, Clone, Args)]
pub struct CommonArgs {
    /// Relative series tolerance (eval, table) or check tolerance override (verify).
    #[arg(long)]
    pub tol: Option<f64>,
    #[arg(long)]
    pub max_terms: Option<usize>,
    #[arg(long)]
    pub seed: Option<u64>,
    /// Monte Carlo sample count.
    #[arg(long)]
    pub samples: Option<usize>,
}

impl CommonArgs {
    pub fn config(&self) -> Result<EvalConfig, CliError> {
        let mut cfg = EvalConfig::default();
        if let Some(t) = self.tol {
            cfg = cfg.with_rel_tol(t);
        }
        if let Some(n) = self.max_terms {
            cfg = cfg.with_max_terms(n);
        }
        if let Some(s) = self.seed {
            cfg = cfg.with_seed(s);
        }
        if let Some(n) = self.samples {
            cfg = cfg.with_samples(n);
        }
        cfg.validate().map_err(|e| CliError::Usage(e.to_string()))?;
        Ok(cfg)
    }
}

#[derive(Debug, Args)]
pub struct EvalArgs {
    #[arg(value_enum)]
    pub function: Function,
    /// Parameters as key=value.
    pub params: Vec<String>,
    #[command(flatten)]
    pub common: CommonArgs,
}

#[derive(Debug, Args)]
pub struct TableArgs {
    #[arg(value_enum)]
    pub function: Function,
    /// key=value, key=lo:hi:count (linear sweep) or key=v1,v2,... (list).
    pub params: Vec<String>,
    #[arg(long, value_enum, default_value = "csv")]
    pub format: Format,
    /// Output file; standard output when omitted.
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[command(flatten)]
    pub common: CommonArgs,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Suites to run (all when omitted): marcum-cross, phi3-paths, recursion,
    /// laplace, reduction, cdf-axioms, nakagami-mc, wishart-mc.
    pub suites: Vec<String>,
    /// Points per axis for range-based grids.
    #[arg(long)]
    pub grid: Option<usize>,
    /// Report file; standard output when omitted.
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[command(flatten)]
    pub common: CommonArgs,
}
