//! Rendering payloads as JSON, CSV or indented plain text.

use serde_json::Value;

use crate::error::CliError;

pub fn json(payload: &Value) -> String {
    let mut s = serde_json::to_string_pretty(payload).expect("serializable");
    s.push('\n');
    s
}

/// CSV with the given header; each row is an object with those keys.
pub fn csv_table(header: &[&str], rows: &[Value]) -> Result<String, CliError> {
    let mut w = csv::Writer::from_writer(Vec::new());
    let io = |e: csv::Error| CliError::Usage(format!("csv: {e}"));
    w.write_record(header).map_err(io)?;
    for row in rows {
        let record: Vec<String> = header.iter().map(|h| scalar(&row[*h])).collect();
        w.write_record(&record).map_err(io)?;
    }
    let bytes = w.into_inner().map_err(|e| CliError::Usage(format!("csv: {e}")))?;
    Ok(String::from_utf8(bytes).expect("utf-8"))
}

fn scalar(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Null => String::new(),
        other => other.to_string(),
    }
}

fn is_scalar(v: &Value) -> bool {
    !matches!(v, Value::Array(_) | Value::Object(_))
}

pub fn plain(payload: &Value) -> String {
    let mut out = String::new();
    write_plain(payload, 0, &mut out);
    out
}

fn write_plain(v: &Value, indent: usize, out: &mut String) {
    let pad = " ".repeat(indent);
    match v {
        Value::Object(map) => {
            for (k, val) in map {
                match val {
                    _ if is_scalar(val) => out.push_str(&format!("{pad}{k}: {}\n", scalar(val))),
                    Value::Array(items) if items.iter().all(is_scalar) => {
                        let joined: Vec<String> = items.iter().map(scalar).collect();
                        out.push_str(&format!("{pad}{k}: [{}]\n", joined.join(", ")));
                    }
                    _ => {
                        out.push_str(&format!("{pad}{k}:\n"));
                        write_plain(val, indent + 2, out);
                    }
                }
            }
        }
        Value::Array(items) => {
            for item in items {
                if is_scalar(item) {
                    out.push_str(&format!("{pad}- {}\n", scalar(item)));
                } else if let Value::Array(inner) = item {
                    if inner.iter().all(is_scalar) {
                        let joined: Vec<String> = inner.iter().map(scalar).collect();
                        out.push_str(&format!("{pad}- [{}]\n", joined.join(", ")));
                    } else {
                        out.push_str(&format!("{pad}-\n"));
                        write_plain(item, indent + 2, out);
                    }
                } else {
                    out.push_str(&format!("{pad}-\n"));
                    write_plain(item, indent + 2, out);
                }
            }
        }
        other => out.push_str(&format!("{pad}{}\n", scalar(other))),
    }
}
