use std::fmt::Write as _;
use std::path::Path;

use anyhow::{bail, Context, Result};
use saca::Dataset;

/// Parsing options for delimited text input.
#[derive(Debug, Clone, Default)]
pub struct LoadOptions {
    /// Field delimiter. `None` auto-detects: comma if the first data line
    /// contains one, otherwise any run of whitespace.
    pub delimiter: Option<char>,
    /// Skip the first line. `None` auto-detects by trying to parse it.
    pub has_header: Option<bool>,
    /// Zero-based column holding ground-truth labels.
    pub label_column: Option<usize>,
}

pub fn load_delimited(path: &Path, options: &LoadOptions) -> Result<Dataset> {
    let text = std::fs::read_to_string(path)
        .with_context(|| format!("cannot read {}", path.display()))?;
    let lines: Vec<(usize, &str)> = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty())
        .collect();
    if lines.is_empty() {
        bail!("{} is empty", path.display());
    }

    let delimiter = options
        .delimiter
        .unwrap_or_else(|| if lines[0].1.contains(',') { ',' } else { ' ' });
    let split = |line: &str| -> Vec<String> {
        if delimiter == ' ' {
            line.split_whitespace().map(str::to_owned).collect()
        } else {
            line.split(delimiter).map(|f| f.trim().to_owned()).collect()
        }
    };

    let header = options
        .has_header
        .unwrap_or_else(|| split(lines[0].1).iter().any(|f| f.parse::<f64>().is_err()));
    let rows = if header { &lines[1..] } else { &lines[..] };
    if rows.is_empty() {
        bail!("{} has a header but no data rows", path.display());
    }

    let arity = split(rows[0].1).len();
    if let Some(col) = options.label_column {
        if col >= arity {
            bail!("label column {col} out of range for {arity}-field rows");
        }
    }

    let mut points = Vec::with_capacity(rows.len());
    let mut labels = options.label_column.map(|_| Vec::with_capacity(rows.len()));
    for &(line_no, line) in rows {
        let fields = split(line);
        if fields.len() != arity {
            bail!(
                "row {line_no}: expected {arity} fields, found {}",
                fields.len()
            );
        }
        let mut coords = Vec::with_capacity(arity);
        for (col, field) in fields.iter().enumerate() {
            let value: f64 = field
                .parse()
                .with_context(|| format!("row {line_no}: field {:?} is not numeric", field))?;
            if !value.is_finite() {
                bail!("row {line_no}: field {:?} is not finite", field);
            }
            if options.label_column == Some(col) {
                labels.as_mut().unwrap().push(value.round() as i32);
            } else {
                coords.push(value);
            }
        }
        points.push(coords);
    }
    Dataset::new(points, labels).map_err(Into::into)
}

/// One integer per line, aligned with input rows.
pub fn format_labels(labels: &[i32]) -> String {
    let mut out = String::new();
    for l in labels {
        let _ = writeln!(out, "{l}");
    }
    out
}
