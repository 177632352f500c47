//! Report assembly and rendering.
//!
//! Every command produces one JSON envelope; the text format is rendered
//! from that value, so the two formats can never drift. serde_json keeps
//! object keys sorted, and no report field holds a float or a timestamp, so
//! a fixed request and seed reproduce the output byte for byte.

use std::fs;
use std::path::Path;

use grcoh_core::matrix::{Matrix, Vector};
use grcoh_core::FieldSpec;
use serde_json::{json, Value};

use crate::input::InputError;

pub struct Report {
    pub verdict: String,
    pub exit: i32,
    pub bounds: Value,
    pub payload: Value,
}

/// Exit code 1 marks a computed negative or inconclusive verdict; the
/// report itself is well formed either way.
pub fn positive(verdict: &str, bounds: Value, payload: Value) -> Report {
    Report {
        verdict: verdict.into(),
        exit: 0,
        bounds,
        payload,
    }
}

pub fn negative(verdict: &str, bounds: Value, payload: Value) -> Report {
    Report {
        verdict: verdict.into(),
        exit: 1,
        bounds,
        payload,
    }
}

pub fn envelope(command: &str, field: FieldSpec, report: &Report) -> Value {
    json!({
        "tool": "grcoh",
        "version": env!("CARGO_PKG_VERSION"),
        "command": command,
        "field": field,
        "bounds": report.bounds,
        "verdict": report.verdict,
        "report": report.payload,
    })
}

pub fn vector_json(f: FieldSpec, v: &[grcoh_core::Scalar]) -> Value {
    Value::Array(v.iter().map(|c| f.scalar_to_json(c)).collect())
}

pub fn matrix_json(m: &Matrix) -> Value {
    Value::Array(
        (0..m.rows)
            .map(|r| vector_json(m.field, m.row(r)))
            .collect(),
    )
}

pub fn generators_json(f: FieldSpec, gens: &[(i64, Vector)]) -> Value {
    Value::Array(
        gens.iter()
            .map(|(d, v)| json!([d, vector_json(f, v)]))
            .collect(),
    )
}

pub fn render(v: &Value, format: Format) -> String {
    match format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(v).expect("reports serialize");
            s.push('\n');
            s
        }
        Format::Text => render_text(v),
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, clap::ValueEnum)]
pub enum Format {
    Text,
    Json,
}

/// Text output is a key/value walk of the JSON envelope: headline fields
/// first, then the report body indented two spaces per level.
fn render_text(v: &Value) -> String {
    let mut out = String::new();
    let obj = v.as_object().expect("envelope is an object");
    for key in ["tool", "version", "command", "field", "bounds", "verdict"] {
        if let Some(val) = obj.get(key) {
            out.push_str(&format!("{key}: {}\n", inline(val)));
        }
    }
    if let Some(body) = obj.get("report") {
        out.push_str("report:\n");
        lines(body, 1, &mut out);
    }
    out
}

fn inline(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Array(items) => format!(
            "[{}]",
            items.iter().map(inline).collect::<Vec<_>>().join(", ")
        ),
        Value::Object(map) => format!(
            "{{{}}}",
            map.iter()
                .map(|(k, x)| format!("{k}: {}", inline(x)))
                .collect::<Vec<_>>()
                .join(", ")
        ),
        other => other.to_string(),
    }
}

fn is_flat(v: &Value) -> bool {
    match v {
        Value::Array(items) => items.iter().all(|x| !x.is_object() && is_flat(x)),
        Value::Object(_) => false,
        _ => true,
    }
}

fn lines(v: &Value, depth: usize, out: &mut String) {
    let pad = "  ".repeat(depth);
    match v {
        Value::Object(map) => {
            for (k, x) in map {
                if is_flat(x) {
                    out.push_str(&format!("{pad}{k}: {}\n", inline(x)));
                } else {
                    out.push_str(&format!("{pad}{k}:\n"));
                    lines(x, depth + 1, out);
                }
            }
        }
        Value::Array(items) => {
            for x in items {
                if is_flat(x) {
                    out.push_str(&format!("{pad}- {}\n", inline(x)));
                } else {
                    out.push_str(&format!("{pad}-\n"));
                    lines(x, depth + 1, out);
                }
            }
        }
        other => out.push_str(&format!("{pad}{}\n", inline(other))),
    }
}

pub fn emit(rendered: &str, out: Option<&Path>) -> Result<(), InputError> {
    print!("{rendered}");
    if let Some(path) = out {
        fs::write(path, rendered).map_err(|e| InputError(format!("{}: {e}", path.display())))?;
    }
    Ok(())
}
