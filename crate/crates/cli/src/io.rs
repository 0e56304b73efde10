//! Matrix files: JSON `{"rows", "cols", "entries"}` or whitespace-separated text.

use std::fs;
use std::path::Path;
use std::str::FromStr;

use anyhow::{bail, Context, Result};
use num_bigint::BigInt;
use selfdual_core::linalg::IntMatrix;
use selfdual_core::Configuration;

pub fn parse_matrix(text: &str) -> Result<IntMatrix> {
    if text.trim_start().starts_with('{') {
        return serde_json::from_str(text).context("malformed JSON matrix");
    }
    let mut rows: Vec<Vec<BigInt>> = Vec::new();
    for (k, line) in text.lines().enumerate() {
        let line = line.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let row = line
            .split(|c: char| c.is_whitespace() || c == ',')
            .filter(|t| !t.is_empty())
            .map(BigInt::from_str)
            .collect::<std::result::Result<Vec<_>, _>>()
            .with_context(|| format!("line {}: expected integers", k + 1))?;
        rows.push(row);
    }
    if rows.is_empty() {
        bail!("no matrix rows found");
    }
    Ok(IntMatrix::from_rows(&rows)?)
}

/// Rows separated by `;`, entries by whitespace or commas.
pub fn parse_inline(spec: &str) -> Result<IntMatrix> {
    parse_matrix(&spec.replace(';', "\n"))
}

pub fn read_matrix(path: &Path) -> Result<IntMatrix> {
    let text =
        fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))?;
    parse_matrix(&text).with_context(|| format!("in {}", path.display()))
}

pub fn read_configuration(path: &Path) -> Result<Configuration> {
    Ok(Configuration::new(read_matrix(path)?)?)
}

/// JSON with one matrix row per line.
pub fn matrix_json(m: &IntMatrix) -> Result<String> {
    let value = serde_json::to_value(m)?;
    let rows: Vec<String> = value["entries"]
        .as_array()
        .map(|rows| rows.iter().map(|r| format!("    {r}")).collect())
        .unwrap_or_default();
    Ok(format!(
        "{{\n  \"rows\": {},\n  \"cols\": {},\n  \"entries\": [\n{}\n  ]\n}}\n",
        m.rows(),
        m.cols(),
        rows.join(",\n")
    ))
}

pub fn write_matrix(path: &Path, m: &IntMatrix) -> Result<()> {
    fs::write(path, matrix_json(m)?).with_context(|| format!("cannot write {}", path.display()))
}
