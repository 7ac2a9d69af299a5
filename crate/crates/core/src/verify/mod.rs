//! Reproducible verification suites that compare every production evaluator
//! with an independent oracle and collect the results in a [`Report`].
//!
//! Grid points are evaluated in parallel, but checks are always assembled in
//! grid order and all randomness comes from the configured seed, so two runs
//! with the same options produce identical reports.

mod report;
mod suites;

use std::fmt;
use std::str::FromStr;

pub use report::{Check, ConfigEcho, Metric, Report, Summary, SCHEMA_VERSION};

use crate::config::EvalConfig;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Suite {
    MarcumCross,
    Phi3Paths,
    Laplace,
    NakagamiMc,
    WishartMc,
    Recursion,
    Reduction,
    CdfAxioms,
}

impl Suite {
    pub const ALL: [Suite; 8] = [
        Suite::MarcumCross,
        Suite::Phi3Paths,
        Suite::Recursion,
        Suite::Laplace,
        Suite::Reduction,
        Suite::CdfAxioms,
        Suite::NakagamiMc,
        Suite::WishartMc,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::MarcumCross => "marcum-cross",
            Suite::Phi3Paths => "phi3-paths",
            Suite::Laplace => "laplace",
            Suite::NakagamiMc => "nakagami-mc",
            Suite::WishartMc => "wishart-mc",
            Suite::Recursion => "recursion",
            Suite::Reduction => "reduction",
            Suite::CdfAxioms => "cdf-axioms",
        }
    }

    /// Whether the suite draws Monte Carlo samples.
    pub fn is_stochastic(self) -> bool {
        matches!(self, Suite::NakagamiMc | Suite::WishartMc)
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|suite| suite.name() == s)
            .ok_or_else(|| {
                let names: Vec<_> = Suite::ALL.iter().map(|s| s.name()).collect();
                Error::domain(format!("unknown suite '{s}' (expected one of {})", names.join(", ")))
            })
    }
}

/// Options shared by all suites.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct VerifyOptions {
    pub cfg: EvalConfig,
    /// Replaces the tolerance of every deterministic check. Monte Carlo
    /// checks always use three binomial standard errors.
    pub tol: Option<f64>,
    /// Points per axis for the suites whose grid is a range rather than a
    /// fixed list.
    pub grid: Option<usize>,
}

impl VerifyOptions {
    fn tol(&self, default: f64) -> f64 {
        self.tol.unwrap_or(default)
    }

    fn grid(&self, default: usize) -> usize {
        self.grid.unwrap_or(default).max(2)
    }
}

/// Run `suites` in the given order (duplicates dropped) and collect one report.
pub fn run(suites: &[Suite], opts: &VerifyOptions) -> Result<Report> {
    opts.cfg.validate()?;
    if let Some(t) = opts.tol {
        if !(t > 0.0 && t.is_finite()) {
            return Err(Error::domain(format!("tolerance must be > 0, got {t}")));
        }
    }
    let mut selected: Vec<Suite> = Vec::new();
    for &s in suites {
        if !selected.contains(&s) {
            selected.push(s);
        }
    }
    if selected.is_empty() {
        return Err(Error::domain("no verification suite selected"));
    }
    let mut checks = Vec::new();
    for &suite in &selected {
        checks.extend(run_suite(suite, opts)?);
    }
    let name = selected.iter().map(|s| s.name()).collect::<Vec<_>>().join(",");
    let echo = ConfigEcho {
        eval: opts.cfg,
        tol: opts.tol,
        grid: opts.grid,
    };
    Ok(Report::new(name, echo, checks))
}

pub fn run_suite(suite: Suite, opts: &VerifyOptions) -> Result<Vec<Check>> {
    match suite {
        Suite::MarcumCross => Ok(suites::marcum_cross(opts)),
        Suite::Phi3Paths => Ok(suites::phi3_paths(opts)),
        Suite::Recursion => Ok(suites::recursion(opts)),
        Suite::Laplace => Ok(suites::laplace(opts)),
        Suite::Reduction => suites::reduction(opts),
        Suite::CdfAxioms => suites::cdf_axioms(opts),
        Suite::NakagamiMc => suites::nakagami_mc(opts),
        Suite::WishartMc => suites::wishart_mc(opts),
    }
}
