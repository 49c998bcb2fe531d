//! JSON and TSV rendering of command results.

use clap::ValueEnum;
use serde::Serialize;
use serde_json::Value;

use knotforge::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Tsv,
}

pub fn render<T: Serialize>(f: Format, v: &T) -> Result<String> {
    let value = serde_json::to_value(v).map_err(|e| Error::Parse(e.to_string()))?;
    Ok(match f {
        Format::Json => serde_json::to_string_pretty(&value).expect("serializable") + "\n",
        Format::Tsv => tsv(&value),
    })
}

fn cell(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Null => String::new(),
        other => other.to_string(),
    }
}

/// Scalars print bare, lists of records get a header row, and other
/// objects become key/value lines.
fn tsv(v: &Value) -> String {
    let mut out = String::new();
    match v {
        Value::Array(items) if !items.is_empty() && items.iter().all(Value::is_object) => {
            let keys: Vec<&String> = items[0].as_object().expect("object").keys().collect();
            out.push_str(&keys.iter().map(|k| k.as_str()).collect::<Vec<_>>().join("\t"));
            out.push('\n');
            for it in items {
                let row: Vec<String> = keys.iter().map(|k| cell(it.get(k.as_str()).unwrap_or(&Value::Null))).collect();
                out.push_str(&row.join("\t"));
                out.push('\n');
            }
        }
        Value::Array(items) => {
            for it in items {
                out.push_str(&cell(it));
                out.push('\n');
            }
        }
        Value::Object(map) => {
            for (k, x) in map {
                out.push_str(&format!("{k}\t{}\n", cell(x)));
            }
        }
        other => {
            out.push_str(&cell(other));
            out.push('\n');
        }
    }
    out
}
