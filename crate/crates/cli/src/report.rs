//! Run reports and their table rendering.

use std::fmt::Write;

use serde::{Deserialize, Serialize};
use serde_json::Value;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Timing {
    pub elapsed_us: u64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RunReport {
    pub command: String,
    pub results: Value,
    pub timing: Timing,
    pub cache_hits: usize,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    #[default]
    Table,
    Json,
}

impl RunReport {
    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => {
                let mut s = serde_json::to_string_pretty(self).expect("reports serialize");
                s.push('\n');
                s
            }
            Format::Table => self.to_table(),
        }
    }

    pub fn to_table(&self) -> String {
        let mut out = format!("command: {}\n", self.command);
        write_value(&mut out, &self.results, 0);
        let _ = writeln!(out, "elapsed_us: {}", self.timing.elapsed_us);
        let _ = writeln!(out, "cache_hits: {}", self.cache_hits);
        out
    }
}

fn scalar(v: &Value) -> Option<String> {
    match v {
        Value::Null => Some("-".into()),
        Value::Bool(b) => Some(b.to_string()),
        Value::Number(n) => Some(n.to_string()),
        Value::String(s) => Some(s.clone()),
        Value::Array(items) if items.iter().all(|i| matches!(i, Value::Number(_))) => Some(format!(
            "[{}]",
            items.iter().map(|i| i.to_string()).collect::<Vec<_>>().join(", ")
        )),
        _ => None,
    }
}

/// Objects whose values are all scalars, sharing one key order.
fn as_rows(items: &[Value]) -> Option<(Vec<String>, Vec<Vec<String>>)> {
    let first = items.first()?.as_object()?;
    let keys: Vec<String> = first.keys().cloned().collect();
    let mut rows = Vec::new();
    for item in items {
        let obj = item.as_object()?;
        if obj.keys().ne(keys.iter()) {
            return None;
        }
        rows.push(obj.values().map(scalar).collect::<Option<Vec<_>>>()?);
    }
    Some((keys, rows))
}

fn write_value(out: &mut String, v: &Value, indent: usize) {
    let pad = " ".repeat(indent);
    match v {
        Value::Object(map) => {
            for (k, item) in map {
                match scalar(item) {
                    Some(s) => {
                        let _ = writeln!(out, "{pad}{k}: {s}");
                    }
                    None => {
                        let _ = writeln!(out, "{pad}{k}:");
                        write_value(out, item, indent + 2);
                    }
                }
            }
        }
        Value::Array(items) => {
            if let Some((keys, rows)) = as_rows(items) {
                let mut widths: Vec<usize> = keys.iter().map(|k| k.chars().count()).collect();
                for row in &rows {
                    for (w, cell) in widths.iter_mut().zip(row) {
                        *w = (*w).max(cell.chars().count());
                    }
                }
                let line = |cells: &[String]| {
                    let parts: Vec<String> = cells
                        .iter()
                        .zip(&widths)
                        .map(|(c, &w)| format!("{c:<w$}"))
                        .collect();
                    format!("{pad}{}", parts.join("  ").trim_end())
                };
                let _ = writeln!(out, "{}", line(&keys));
                for row in &rows {
                    let _ = writeln!(out, "{}", line(row));
                }
            } else {
                for (i, item) in items.iter().enumerate() {
                    match scalar(item) {
                        Some(s) => {
                            let _ = writeln!(out, "{pad}- {s}");
                        }
                        None => {
                            let _ = writeln!(out, "{pad}[{i}]");
                            write_value(out, item, indent + 2);
                        }
                    }
                }
            }
        }
        other => {
            let _ = writeln!(out, "{pad}{}", scalar(other).unwrap_or_default());
        }
    }
}
