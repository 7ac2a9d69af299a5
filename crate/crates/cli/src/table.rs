use std::collections::BTreeMap;
use std::io::Write;
use std::path::Path;

use phi3q_core::EvalConfig;
use serde::Serialize;

use crate::args::{Format, Function};
use crate::error::CliError;
use crate::functions::evaluate;
use crate::params::{parse_f64, split_pair, Params};

/// One parameter column: a fixed value, an explicit list or a linear sweep.
#[derive(Debug, Clone, PartialEq)]
struct Column {
    name: String,
    values: Vec<String>,
}

fn parse_column(item: &str) -> Result<Column, CliError> {
    let (name, spec) = split_pair(item)?;
    let values = if spec.contains(':') {
        let parts: Vec<&str> = spec.split(':').collect();
        let [lo, hi, n] = parts[..] else {
            return Err(CliError::Usage(format!("sweep '{item}' must look like key=lo:hi:count")));
        };
        let (lo, hi) = (parse_f64(name, lo)?, parse_f64(name, hi)?);
        let n: usize = n
            .parse()
            .ok()
            .filter(|&n| n >= 1)
            .ok_or_else(|| CliError::Usage(format!("sweep count in '{item}' must be a positive integer")))?;
        if n == 1 {
            vec![lo.to_string()]
        } else {
            (0..n)
                .map(|i| (lo + (hi - lo) * i as f64 / (n - 1) as f64).to_string())
                .collect()
        }
    } else {
        spec.split(',').map(str::to_string).collect()
    };
    if values.iter().any(String::is_empty) {
        return Err(CliError::Usage(format!("empty value in '{item}'")));
    }
    Ok(Column {
        name: name.to_string(),
        values,
    })
}

#[derive(Debug, Serialize)]
struct JsonRow {
    inputs: BTreeMap<String, f64>,
    value: Option<f64>,
    error: Option<String>,
}

/// Full cartesian product of the columns, first column outermost.
fn grid(columns: &[Column]) -> Vec<Vec<&str>> {
    let mut rows: Vec<Vec<&str>> = vec![Vec::new()];
    for col in columns {
        rows = rows
            .into_iter()
            .flat_map(|row| {
                col.values.iter().map(move |v| {
                    let mut r = row.clone();
                    r.push(v.as_str());
                    r
                })
            })
            .collect();
    }
    rows
}

fn evaluate_row(function: Function, columns: &[Column], row: &[&str], cfg: &EvalConfig) -> Result<f64, CliError> {
    let map = columns
        .iter()
        .zip(row)
        .map(|(c, v)| (c.name.clone(), v.to_string()))
        .collect();
    let params = Params::from_map(map);
    let value = evaluate(function, &params, cfg)?;
    params.ensure_all_used()?;
    Ok(value)
}

pub fn write_table(
    function: Function,
    items: &[String],
    format: Format,
    out: Option<&Path>,
    cfg: &EvalConfig,
) -> Result<(), CliError> {
    let columns = items.iter().map(|s| parse_column(s)).collect::<Result<Vec<_>, _>>()?;
    for (i, c) in columns.iter().enumerate() {
        if columns[..i].iter().any(|d| d.name == c.name) || c.name == "value" || c.name == "error" {
            return Err(CliError::Usage(format!("duplicate or reserved column '{}'", c.name)));
        }
    }
    let rows = grid(&columns);
    let results: Vec<Result<f64, CliError>> = rows.iter().map(|r| evaluate_row(function, &columns, r, cfg)).collect();
    // a usage problem is the same on every row, so report it instead of tabulating it
    if let Some(Err(CliError::Usage(m))) = results.iter().find(|r| matches!(r, Err(CliError::Usage(_)))) {
        return Err(CliError::Usage(m.clone()));
    }

    let mut sink: Box<dyn Write> = match out {
        Some(p) => Box::new(std::io::BufWriter::new(std::fs::File::create(p)?)),
        None => Box::new(std::io::stdout().lock()),
    };
    match format {
        Format::Csv => {
            let mut w = csv::Writer::from_writer(&mut sink);
            let mut header: Vec<&str> = columns.iter().map(|c| c.name.as_str()).collect();
            header.extend(["value", "error"]);
            w.write_record(&header)?;
            for (row, result) in rows.iter().zip(&results) {
                let mut record: Vec<String> = Vec::with_capacity(row.len() + 2);
                for v in row {
                    record.push(format_input(v));
                }
                match result {
                    Ok(v) => record.extend([format!("{v:.16e}"), String::new()]),
                    Err(e) => record.extend([String::new(), e.to_string()]),
                }
                w.write_record(&record)?;
            }
            w.flush()?;
        }
        Format::Json => {
            let json_rows: Vec<JsonRow> = rows
                .iter()
                .zip(&results)
                .map(|(row, result)| JsonRow {
                    inputs: columns
                        .iter()
                        .zip(row)
                        .filter_map(|(c, v)| v.parse().ok().map(|x| (c.name.clone(), x)))
                        .collect(),
                    value: result.as_ref().ok().copied(),
                    error: result.as_ref().err().map(|e| e.to_string()),
                })
                .collect();
            serde_json::to_writer_pretty(&mut sink, &json_rows)?;
            writeln!(sink)?;
        }
    }
    sink.flush()?;
    Ok(())
}

/// Numeric inputs in the same 17-significant-digit form as values; words
/// such as `model=central` pass through unchanged.
fn format_input(raw: &str) -> String {
    match raw.parse::<f64>() {
        Ok(v) => format!("{v:.16e}"),
        Err(_) => raw.to_string(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn column_forms() {
        assert_eq!(parse_column("a=1").unwrap().values, vec!["1"]);
        assert_eq!(parse_column("a=1,2.5").unwrap().values, vec!["1", "2.5"]);
        assert_eq!(parse_column("a=0:1:3").unwrap().values, vec!["0", "0.5", "1"]);
        assert!(parse_column("a=0:1").is_err());
        assert!(parse_column("a=0:1:0").is_err());
        assert!(parse_column("a").is_err());
    }

    #[test]
    fn grid_is_lexicographic() {
        let cols = vec![parse_column("x=1,2").unwrap(), parse_column("y=a,b").unwrap()];
        assert_eq!(grid(&cols), vec![vec!["1", "a"], vec!["1", "b"], vec!["2", "a"], vec!["2", "b"]]);
    }
}
