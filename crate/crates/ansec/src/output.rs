//! Tabular output: CSV with `#` metadata lines, or a JSON object.

use std::fmt::Write as _;
use std::path::Path;

use serde_json::{json, Map, Value};

use crate::error::{CliError, Result};

/// Numeric table with ordered metadata.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct Table {
    pub meta: Vec<(String, String)>,
    pub columns: Vec<String>,
    pub rows: Vec<Vec<f64>>,
}

/// 17 significant digits, enough to parse back to the same `f64`.
pub fn fmt_num(v: f64) -> String {
    if v.is_nan() {
        "NaN".into()
    } else if v.is_infinite() {
        if v > 0.0 { "inf" } else { "-inf" }.into()
    } else {
        format!("{v:.16e}")
    }
}

/// Equality that treats two NaNs as equal and otherwise compares bits.
pub fn same_value(a: f64, b: f64) -> bool {
    a.to_bits() == b.to_bits() || (a.is_nan() && b.is_nan())
}

fn num_json(v: f64) -> Value {
    serde_json::Number::from_f64(v).map_or(Value::Null, Value::Number)
}

impl Table {
    pub fn new(meta: Vec<(String, String)>, columns: Vec<String>) -> Self {
        Table {
            meta,
            columns,
            rows: Vec::new(),
        }
    }

    pub fn meta(&self, key: &str) -> Option<&str> {
        self.meta
            .iter()
            .find(|(k, _)| k == key)
            .map(|(_, v)| v.as_str())
    }

    pub fn column(&self, name: &str) -> Option<Vec<f64>> {
        let i = self.columns.iter().position(|c| c == name)?;
        Some(self.rows.iter().map(|r| r[i]).collect())
    }

    pub fn to_csv(&self) -> String {
        let mut s = String::new();
        for (k, v) in &self.meta {
            let _ = writeln!(s, "# {k}={v}");
        }
        let _ = writeln!(s, "{}", self.columns.join(","));
        for row in &self.rows {
            let cells: Vec<String> = row.iter().map(|&v| fmt_num(v)).collect();
            let _ = writeln!(s, "{}", cells.join(","));
        }
        s
    }

    pub fn parse_csv(text: &str) -> Result<Table> {
        let mut t = Table::default();
        let mut header = false;
        for (i, line) in text.lines().enumerate() {
            if let Some(m) = line.strip_prefix('#') {
                let (k, v) = m
                    .trim_start()
                    .split_once('=')
                    .ok_or_else(|| CliError::usage(format!("line {}: bad metadata", i + 1)))?;
                t.meta.push((k.into(), v.into()));
            } else if !header {
                t.columns = line.split(',').map(str::to_owned).collect();
                header = true;
            } else if !line.is_empty() {
                let row = line
                    .split(',')
                    .map(|c| c.parse::<f64>())
                    .collect::<std::result::Result<Vec<_>, _>>()
                    .map_err(|e| CliError::usage(format!("line {}: {e}", i + 1)))?;
                if row.len() != t.columns.len() {
                    return Err(CliError::usage(format!(
                        "line {}: wrong column count",
                        i + 1
                    )));
                }
                t.rows.push(row);
            }
        }
        Ok(t)
    }

    /// `{"meta": {..}, "columns": [..], "rows": [[..], ..]}`; non-finite
    /// numbers become `null`.
    pub fn to_json(&self) -> Value {
        let meta: Map<String, Value> = self
            .meta
            .iter()
            .map(|(k, v)| (k.clone(), Value::String(v.clone())))
            .collect();
        let rows: Vec<Value> = self
            .rows
            .iter()
            .map(|r| Value::Array(r.iter().map(|&v| num_json(v)).collect()))
            .collect();
        json!({ "meta": meta, "columns": self.columns, "rows": rows })
    }

    pub fn render(&self, as_json: bool) -> String {
        if as_json {
            let mut s = serde_json::to_string_pretty(&self.to_json()).expect("table serializes");
            s.push('\n');
            s
        } else {
            self.to_csv()
        }
    }

    pub fn write(&self, path: &Path, as_json: bool) -> Result<()> {
        if let Some(dir) = path.parent().filter(|d| !d.as_os_str().is_empty()) {
            std::fs::create_dir_all(dir).map_err(|e| CliError::io(dir, e))?;
        }
        std::fs::write(path, self.render(as_json)).map_err(|e| CliError::io(path, e))
    }
}

/// One evaluated record printed as `key = value` lines.
pub fn render_record(meta: &[(String, String)], values: &[(String, f64)], as_json: bool) -> String {
    if as_json {
        let m: Map<String, Value> = meta
            .iter()
            .map(|(k, v)| (k.clone(), Value::String(v.clone())))
            .collect();
        let vals: Map<String, Value> = values
            .iter()
            .map(|(k, v)| (k.clone(), num_json(*v)))
            .collect();
        let mut s = json!({ "meta": m, "values": vals }).to_string();
        s.push('\n');
        return s;
    }
    let mut s = String::new();
    for (k, v) in values {
        let _ = writeln!(s, "{k} = {}", fmt_num(*v));
    }
    for (k, v) in meta {
        let _ = writeln!(s, "# {k}={v}");
    }
    s
}
