use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::config::EvalConfig;
use crate::error::Result;

pub const SCHEMA_VERSION: u32 = 1;

/// Which error a check compares with its tolerance.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Metric {
    Absolute,
    Relative,
}

/// One production-versus-oracle comparison.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Check {
    pub suite: String,
    pub name: String,
    pub inputs: BTreeMap<String, f64>,
    pub value: Option<f64>,
    pub reference: Option<f64>,
    pub abs_error: Option<f64>,
    pub rel_error: Option<f64>,
    pub metric: Metric,
    pub tolerance: f64,
    pub passed: bool,
    pub error: Option<String>,
}

impl Check {
    pub fn compare(
        suite: &str,
        name: &str,
        inputs: &[(&str, f64)],
        value: Result<f64>,
        reference: Result<f64>,
        metric: Metric,
        tolerance: f64,
    ) -> Self {
        let inputs = inputs.iter().map(|&(k, v)| (k.to_string(), v)).collect();
        let mut check = Check {
            suite: suite.to_string(),
            name: name.to_string(),
            inputs,
            value: None,
            reference: None,
            abs_error: None,
            rel_error: None,
            metric,
            tolerance,
            passed: false,
            error: None,
        };
        match (value, reference) {
            (Ok(v), Ok(r)) => {
                let abs = (v - r).abs();
                let rel = if r == 0.0 { abs } else { abs / r.abs() };
                check.value = Some(v);
                check.reference = Some(r);
                check.abs_error = Some(abs);
                check.rel_error = Some(rel);
                let measured = match metric {
                    Metric::Absolute => abs,
                    Metric::Relative => rel,
                };
                check.passed = measured <= tolerance;
            }
            (v, r) => {
                check.value = v.as_ref().ok().copied();
                check.reference = r.as_ref().ok().copied();
                let msg = [v.err(), r.err()]
                    .into_iter()
                    .flatten()
                    .map(|e| e.to_string())
                    .collect::<Vec<_>>()
                    .join("; ");
                check.error = Some(msg);
            }
        }
        check
    }

    /// The error the tolerance applies to.
    pub fn measured(&self) -> Option<f64> {
        match self.metric {
            Metric::Absolute => self.abs_error,
            Metric::Relative => self.rel_error,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
}

/// Settings echoed into every report.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ConfigEcho {
    pub eval: EvalConfig,
    pub tol: Option<f64>,
    pub grid: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub schema_version: u32,
    pub suite: String,
    pub config: ConfigEcho,
    pub checks: Vec<Check>,
    pub summary: Summary,
}

impl Report {
    pub fn new(suite: String, config: ConfigEcho, checks: Vec<Check>) -> Self {
        let passed = checks.iter().filter(|c| c.passed).count();
        let summary = Summary {
            total: checks.len(),
            passed,
            failed: checks.len() - passed,
        };
        Report {
            schema_version: SCHEMA_VERSION,
            suite,
            config,
            checks,
            summary,
        }
    }

    pub fn all_passed(&self) -> bool {
        self.summary.failed == 0
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }

    /// Pretty-printed JSON followed by a newline.
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report fields are serializable");
        s.push('\n');
        s
    }

    pub fn from_json(s: &str) -> serde_json::Result<Self> {
        serde_json::from_str(s)
    }
}
