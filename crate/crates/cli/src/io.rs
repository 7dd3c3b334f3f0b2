use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use serde::de::DeserializeOwned;
use serde::Serialize;
use serde_json::Value;

use hnnlin::linearize::{RepSpec, ValidatedSpec};
use hnnlin::spectra::{QuatMatrix, RealMatrix};

use crate::error::CliError;

fn read_value(path: &Path, field: &str) -> Result<Value, CliError> {
    let text = fs::read_to_string(path).map_err(|e| CliError::validation(field, format!("cannot read {}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| CliError::validation(field, format!("{}: {e}", path.display())))
}

/// Parses a JSON file; errors carry the flag name and serde's line and column.
pub fn read_json<T: DeserializeOwned>(path: &Path, field: &str) -> Result<T, CliError> {
    let text = fs::read_to_string(path).map_err(|e| CliError::validation(field, format!("cannot read {}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| CliError::validation(field, format!("{}: {e}", path.display())))
}

pub fn read_spec(path: &Path) -> Result<ValidatedSpec, CliError> {
    let spec: RepSpec = read_json(path, "spec")?;
    Ok(spec.validate()?)
}

/// Generator indices used by a word must exist in the spec.
pub fn check_generators(field: &str, used: Option<usize>, available: usize) -> Result<(), CliError> {
    match used {
        Some(k) if k >= available => {
            Err(CliError::validation(field, format!("generator index {k} is out of range (spec has {available} generators)")))
        }
        _ => Ok(()),
    }
}

pub enum MatrixInput {
    Real(RealMatrix),
    Quat(QuatMatrix),
}

/// Array nesting depth along first elements: 2 for a real matrix, 3 for a
/// quaternion matrix or a list of real matrices.
fn depth(v: &Value) -> usize {
    match v.as_array().and_then(|a| a.first()) {
        Some(first) => 1 + depth(first),
        None => usize::from(v.is_array()),
    }
}

fn real_matrix(v: &Value, field: &str) -> Result<RealMatrix, CliError> {
    let rows: Vec<Vec<f64>> =
        serde_json::from_value(v.clone()).map_err(|e| CliError::validation(field, format!("expected rows of numbers ({e})")))?;
    let n = rows.len();
    if n == 0 || rows.iter().any(|r| r.len() != n) {
        let lens: Vec<usize> = rows.iter().map(Vec::len).collect();
        return Err(CliError::validation(field, format!("expected a nonempty square matrix, got row lengths {lens:?}")));
    }
    Ok(RealMatrix::from_row_slice(n, n, &rows.concat()))
}

fn quat_matrix(v: &Value, field: &str) -> Result<QuatMatrix, CliError> {
    serde_json::from_value(v.clone()).map_err(|e| CliError::validation(field, format!("expected rows of quaternion 4-tuples [a, b, c, d] ({e})")))
}

fn field_name(paths: &[PathBuf], i: usize) -> String {
    if paths.len() == 1 {
        "matrix".to_string()
    } else {
        format!("matrix[{i}]")
    }
}

/// One real matrix per file, or a list of real matrices in a file.
pub fn read_real_matrices(paths: &[PathBuf]) -> Result<Vec<RealMatrix>, CliError> {
    let mut out = Vec::new();
    for (i, path) in paths.iter().enumerate() {
        let field = field_name(paths, i);
        let v = read_value(path, &field)?;
        if depth(&v) == 3 {
            for (j, m) in v.as_array().into_iter().flatten().enumerate() {
                out.push(real_matrix(m, &format!("{field}[{j}]"))?);
            }
        } else {
            out.push(real_matrix(&v, &field)?);
        }
    }
    Ok(out)
}

/// A single real (rows of numbers) or quaternion (rows of 4-tuples) matrix.
pub fn read_any_matrix(path: &Path) -> Result<MatrixInput, CliError> {
    let v = read_value(path, "matrix")?;
    if depth(&v) == 3 {
        quat_matrix(&v, "matrix").map(MatrixInput::Quat)
    } else {
        real_matrix(&v, "matrix").map(MatrixInput::Real)
    }
}

/// One quaternion matrix per file, or a list of them in a file.
pub fn read_quat_matrices(paths: &[PathBuf]) -> Result<Vec<QuatMatrix>, CliError> {
    let mut out = Vec::new();
    for (i, path) in paths.iter().enumerate() {
        let field = field_name(paths, i);
        let v = read_value(path, &field)?;
        if depth(&v) == 4 {
            for (j, m) in v.as_array().into_iter().flatten().enumerate() {
                out.push(quat_matrix(m, &format!("{field}[{j}]"))?);
            }
        } else {
            out.push(quat_matrix(&v, &field)?);
        }
    }
    Ok(out)
}

pub fn single<T>(mut v: Vec<T>) -> Result<T, CliError> {
    match v.len() {
        1 => Ok(v.remove(0)),
        n => Err(CliError::validation("matrix", format!("expected exactly one matrix, got {n}"))),
    }
}

/// Compact JSON; top-level arrays get one element per line. Serialized in
/// full before the destination is touched, so a failure leaves nothing behind.
pub fn emit<T: Serialize>(value: &T, out: Option<&Path>) -> Result<(), CliError> {
    let v = serde_json::to_value(value).map_err(|e| CliError::Computation(e.to_string()))?;
    let mut text = match &v {
        Value::Array(items) if !items.is_empty() => {
            let lines: Vec<String> = items.iter().map(|x| format!("  {x}")).collect();
            format!("[\n{}\n]", lines.join(",\n"))
        }
        _ => v.to_string(),
    };
    text.push('\n');
    match out {
        Some(path) => fs::write(path, text).map_err(|e| CliError::Computation(format!("cannot write {}: {e}", path.display()))),
        None => std::io::stdout().write_all(text.as_bytes()).map_err(|e| CliError::Computation(e.to_string())),
    }
}
