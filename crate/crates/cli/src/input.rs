//! Problem-file parsing: a single JSON document with the comparison
//! matrices, or plain CSV matrices for spreadsheet users.
//!
//! Matrix entries are nonnegative finite numbers or rational strings
//! `"p/q"`; rationals are parsed exactly and converted to log scale once,
//! so inputs like `1/3` survive the boundary unchanged.

use std::fs;
use std::path::Path;

use serde::Deserialize;
use tropirank_core::{TropMatrix, TropScalar};

use crate::CliError;

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawProblem {
    #[serde(default)]
    labels: Option<Vec<String>>,
    #[serde(rename = "A")]
    a: Vec<Vec<RawEntry>>,
    #[serde(rename = "B")]
    b: Vec<Vec<RawEntry>>,
    #[serde(rename = "C", default)]
    c: Option<Vec<Vec<RawEntry>>>,
}

#[derive(Deserialize)]
#[serde(untagged)]
enum RawEntry {
    Number(f64),
    Text(String),
}

/// A parsed (not yet validated) problem: labels plus the matrix triple.
pub struct ProblemInput {
    pub labels: Option<Vec<String>>,
    pub a: TropMatrix,
    pub b: TropMatrix,
    pub c: Option<TropMatrix>,
}

pub fn load_problem(
    json_path: Option<&Path>,
    csv_paths: Option<&[std::path::PathBuf]>,
) -> Result<ProblemInput, CliError> {
    match (json_path, csv_paths) {
        (Some(_), Some(_)) => Err(CliError::input(
            "give either a problem file or --matrix-csv, not both",
        )),
        (Some(path), None) => load_json(path),
        (None, Some(paths)) => load_csv(paths),
        (None, None) => Err(CliError::input(
            "missing input: pass a problem file or --matrix-csv",
        )),
    }
}

fn read(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path)
        .map_err(|e| CliError::input(format!("cannot read {}: {e}", path.display())))
}

fn load_json(path: &Path) -> Result<ProblemInput, CliError> {
    let text = read(path)?;
    let raw: RawProblem = serde_json::from_str(&text)
        .map_err(|e| CliError::input(format!("{}: {e}", path.display())))?;
    let a = matrix_from_rows(&raw.a, "A")?;
    let b = matrix_from_rows(&raw.b, "B")?;
    let c = raw
        .c
        .as_deref()
        .map(|c| matrix_from_rows(c, "C"))
        .transpose()?;
    check_orders(&a, &b, c.as_ref())?;
    Ok(ProblemInput {
        labels: raw.labels,
        a,
        b,
        c,
    })
}

fn load_csv(paths: &[std::path::PathBuf]) -> Result<ProblemInput, CliError> {
    let names = ["A", "B", "C"];
    let mut matrices = Vec::new();
    for (path, name) in paths.iter().zip(names) {
        let text = read(path)?;
        let rows: Vec<Vec<RawEntry>> = text
            .lines()
            .filter(|line| !line.trim().is_empty())
            .map(|line| {
                line.split(',')
                    .map(|cell| RawEntry::Text(cell.trim().to_string()))
                    .collect()
            })
            .collect();
        matrices.push(matrix_from_rows(&rows, name)?);
    }
    let mut it = matrices.into_iter();
    let (a, b, c) = (it.next().unwrap(), it.next().unwrap(), it.next());
    check_orders(&a, &b, c.as_ref())?;
    Ok(ProblemInput {
        labels: None,
        a,
        b,
        c,
    })
}

fn check_orders(a: &TropMatrix, b: &TropMatrix, c: Option<&TropMatrix>) -> Result<(), CliError> {
    let n = a.rows();
    for (m, name) in [(Some(b), "B"), (c, "C")] {
        if let Some(m) = m {
            if m.rows() != n {
                return Err(CliError::input(format!(
                    "matrix {name} has order {}, expected {n}",
                    m.rows()
                )));
            }
        }
    }
    Ok(())
}

fn matrix_from_rows(rows: &[Vec<RawEntry>], name: &str) -> Result<TropMatrix, CliError> {
    let n = rows.len();
    if n == 0 {
        return Err(CliError::input(format!("matrix {name} is empty")));
    }
    let mut scalars = Vec::with_capacity(n);
    for (i, row) in rows.iter().enumerate() {
        if row.len() != n {
            return Err(CliError::input(format!(
                "matrix {name} is not square: row {} has {} entries, expected {n}",
                i + 1,
                row.len()
            )));
        }
        let mut out = Vec::with_capacity(n);
        for (j, entry) in row.iter().enumerate() {
            let scalar = parse_entry(entry).map_err(|reason| {
                CliError::input(format!(
                    "matrix {name} entry ({},{}): {reason}",
                    i + 1,
                    j + 1
                ))
            })?;
            out.push(scalar);
        }
        scalars.push(out);
    }
    TropMatrix::from_rows(scalars).map_err(|e| CliError::input(format!("matrix {name}: {e}")))
}

fn parse_entry(entry: &RawEntry) -> Result<TropScalar, String> {
    match entry {
        RawEntry::Number(v) => scalar_from_f64(*v),
        RawEntry::Text(s) => parse_scalar_text(s),
    }
}

fn scalar_from_f64(v: f64) -> Result<TropScalar, String> {
    if !v.is_finite() {
        return Err(format!("value {v} is not finite"));
    }
    if v < 0.0 {
        return Err(format!("value {v} is negative"));
    }
    Ok(TropScalar::new(v))
}

/// Accepts `"p/q"` with integer parts, or a plain numeric string.
pub fn parse_scalar_text(s: &str) -> Result<TropScalar, String> {
    let s = s.trim();
    if let Some((p, q)) = s.split_once('/') {
        let p: i64 = p
            .trim()
            .parse()
            .map_err(|_| format!("bad rational numerator in {s:?}"))?;
        let q: i64 = q
            .trim()
            .parse()
            .map_err(|_| format!("bad rational denominator in {s:?}"))?;
        if q == 0 {
            return Err(format!("zero denominator in {s:?}"));
        }
        let value = p as f64 / q as f64;
        if value < 0.0 {
            return Err(format!("value {s:?} is negative"));
        }
        if p == 0 {
            return Ok(TropScalar::ZERO);
        }
        // exact rational to log scale in one step
        let (p, q) = (p.unsigned_abs() as f64, q.unsigned_abs() as f64);
        return Ok(TropScalar::from_log(p.ln() - q.ln()));
    }
    let v: f64 = s.parse().map_err(|_| format!("cannot parse {s:?}"))?;
    scalar_from_f64(v)
}
