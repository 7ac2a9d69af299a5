use std::cell::RefCell;
use std::collections::{BTreeMap, BTreeSet};

use crate::error::CliError;

/// `key=value` parameters with tracking of which keys were read.
#[derive(Debug)]
pub struct Params {
    values: BTreeMap<String, String>,
    used: RefCell<BTreeSet<String>>,
}

impl Params {
    pub fn parse(items: &[String]) -> Result<Self, CliError> {
        let mut values = BTreeMap::new();
        for item in items {
            let (k, v) = split_pair(item)?;
            if values.insert(k.to_string(), v.to_string()).is_some() {
                return Err(CliError::Usage(format!("parameter '{k}' given twice")));
            }
        }
        Ok(Self::from_map(values))
    }

    pub fn from_map(values: BTreeMap<String, String>) -> Self {
        Params {
            values,
            used: RefCell::new(BTreeSet::new()),
        }
    }

    pub fn raw(&self, key: &str) -> Option<&str> {
        self.used.borrow_mut().insert(key.to_string());
        self.values.get(key).map(String::as_str)
    }

    pub fn f64(&self, key: &str) -> Result<f64, CliError> {
        let raw = self
            .raw(key)
            .ok_or_else(|| CliError::Usage(format!("missing parameter '{key}'")))?;
        parse_f64(key, raw)
    }

    pub fn f64_or(&self, key: &str, default: f64) -> Result<f64, CliError> {
        match self.raw(key) {
            Some(raw) => parse_f64(key, raw),
            None => Ok(default),
        }
    }

    pub fn int(&self, key: &str) -> Result<i64, CliError> {
        as_int(key, self.f64(key)?)
    }

    pub fn int_or(&self, key: &str, default: i64) -> Result<i64, CliError> {
        match self.raw(key) {
            Some(raw) => as_int(key, parse_f64(key, raw)?),
            None => Ok(default),
        }
    }

    pub fn ensure_all_used(&self) -> Result<(), CliError> {
        let used = self.used.borrow();
        match self.values.keys().find(|k| !used.contains(*k)) {
            Some(k) => Err(CliError::Usage(format!("unknown parameter '{k}'"))),
            None => Ok(()),
        }
    }
}

pub fn split_pair(item: &str) -> Result<(&str, &str), CliError> {
    match item.split_once('=') {
        Some((k, v)) if !k.is_empty() && !v.is_empty() => Ok((k, v)),
        _ => Err(CliError::Usage(format!("expected key=value, got '{item}'"))),
    }
}

pub fn parse_f64(key: &str, raw: &str) -> Result<f64, CliError> {
    match raw {
        "inf" | "+inf" | "infinity" => Ok(f64::INFINITY),
        _ => raw
            .parse()
            .map_err(|_| CliError::Usage(format!("parameter '{key}': '{raw}' is not a number"))),
    }
}

fn as_int(key: &str, v: f64) -> Result<i64, CliError> {
    if v.fract() == 0.0 && v.abs() < 2f64.powi(53) {
        Ok(v as i64)
    } else {
        Err(CliError::Usage(format!("parameter '{key}' must be an integer, got {v}")))
    }
}
