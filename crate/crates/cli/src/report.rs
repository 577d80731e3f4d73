//! Self-describing command reports.

use std::fmt::Write as _;

use serde_json::{Map, Value};
use sha2::{Digest, Sha256};

/// Canonical form of the parsed inputs, hashed into the report.
#[derive(Debug, Default, Clone)]
pub struct InputDigest {
    text: String,
}

impl InputDigest {
    /// Adds a parsed input under a label, e.g. `("E", "0 -1\n-2 0\n")`.
    pub fn add(&mut self, label: &str, canonical: &str) {
        let _ = write!(self.text, "[{label}]\n{canonical}");
    }

    /// Adds a plain argument such as a target size.
    pub fn arg(&mut self, label: &str, value: impl std::fmt::Display) {
        let _ = writeln!(self.text, "[{label}] {value}");
    }

    pub fn text(&self) -> &str {
        &self.text
    }

    pub fn sha256(&self) -> String {
        hex::encode(Sha256::digest(self.text.as_bytes()))
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Report {
    pub command: String,
    pub input_hash: String,
    pub result: Value,
    pub assertions_checked: Vec<String>,
}

impl Report {
    pub fn to_json(&self) -> Value {
        let mut map = Map::new();
        map.insert("command".into(), Value::String(self.command.clone()));
        map.insert("input_hash".into(), Value::String(self.input_hash.clone()));
        map.insert("result".into(), self.result.clone());
        map.insert(
            "assertions_checked".into(),
            Value::Array(self.assertions_checked.iter().cloned().map(Value::String).collect()),
        );
        Value::Object(map)
    }

    /// Pretty JSON with sorted keys and a trailing newline.
    pub fn render_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(&self.to_json()).expect("JSON values serialize");
        s.push('\n');
        s
    }

    /// Plain-text rendering of the result.
    pub fn render_text(&self) -> String {
        let mut out = String::new();
        match &self.result {
            Value::Object(map) => {
                for (key, value) in map {
                    render_field(&mut out, key, value, 0);
                }
            }
            other => {
                out.push_str(&inline(other));
                out.push('\n');
            }
        }
        out
    }
}

/// Rows of rational strings; index lists are printed inline instead.
fn is_matrix(v: &Value) -> bool {
    match v {
        Value::Array(rows) => {
            !rows.is_empty()
                && rows
                    .iter()
                    .all(|r| matches!(r, Value::Array(c) if !c.is_empty() && c.iter().all(Value::is_string)))
        }
        _ => false,
    }
}

fn inline(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Null => "none".into(),
        Value::Array(items) => format!("({})", items.iter().map(inline).collect::<Vec<_>>().join(", ")),
        Value::Object(map) => map
            .iter()
            .map(|(k, v)| format!("{k}={}", inline(v)))
            .collect::<Vec<_>>()
            .join(" "),
        other => other.to_string(),
    }
}

fn inline_list(items: &[Value]) -> String {
    items.iter().map(inline).collect::<Vec<_>>().join(", ")
}

fn render_field(out: &mut String, key: &str, value: &Value, depth: usize) {
    let pad = "  ".repeat(depth);
    if is_matrix(value) {
        let Value::Array(rows) = value else { unreachable!() };
        let cells: Vec<Vec<String>> = rows
            .iter()
            .map(|r| match r {
                Value::Array(c) => c.iter().map(inline).collect(),
                _ => unreachable!(),
            })
            .collect();
        let width = cells.iter().flatten().map(String::len).max().unwrap_or(0);
        let _ = writeln!(out, "{pad}{key}:");
        for row in cells {
            let line: Vec<String> = row.iter().map(|c| format!("{c:>width$}")).collect();
            let _ = writeln!(out, "{pad}  {}", line.join(" "));
        }
        return;
    }
    match value {
        Value::Object(map) => {
            let _ = writeln!(out, "{pad}{key}:");
            for (k, v) in map {
                render_field(out, k, v, depth + 1);
            }
        }
        Value::Array(items) if items.iter().any(|i| matches!(i, Value::Object(_))) => {
            let _ = writeln!(out, "{pad}{key}:");
            for item in items {
                let _ = writeln!(out, "{pad}  - {}", inline(item));
            }
        }
        Value::Array(items) if items.iter().all(Value::is_array) => {
            let _ = writeln!(out, "{pad}{key}: {}", inline_list(items));
        }
        other => {
            let _ = writeln!(out, "{pad}{key}: {}", inline(other));
        }
    }
}
