//! Run reports and their two renderings. The text form is produced from the
//! same JSON value as the machine form, so the two cannot drift apart.

use std::fmt::Write as _;

use serde::Serialize;
use serde_json::Value;
use sha2::{Digest, Sha256};

#[derive(Debug, Serialize)]
pub struct RunReport {
    pub command: Vec<String>,
    pub input_digest: String,
    pub payload: Value,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timing_ms: Option<u128>,
}

pub fn digest(bytes: &[u8]) -> String {
    let hash = Sha256::digest(bytes);
    let mut out = String::from("sha256:");
    for byte in hash.iter() {
        write!(out, "{byte:02x}").unwrap();
    }
    out
}

/// Digest for commands without an input file: the argument list itself.
pub fn digest_args(args: &[String]) -> String {
    digest(args.join("\0").as_bytes())
}

impl RunReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports contain only plain values")
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        writeln!(out, "command: {}", self.command.join(" ")).unwrap();
        writeln!(out, "input_digest: {}", self.input_digest).unwrap();
        if let Value::Object(fields) = &self.payload {
            for (key, value) in fields {
                render_field(&mut out, key, value);
            }
        }
        if let Some(ms) = self.timing_ms {
            writeln!(out, "timing_ms: {ms}").unwrap();
        }
        out
    }
}

fn render_field(out: &mut String, key: &str, value: &Value) {
    match value {
        Value::Array(items) if items.iter().all(Value::is_object) && !items.is_empty() => {
            writeln!(out, "{key}:").unwrap();
            for item in items {
                let Value::Object(fields) = item else { unreachable!() };
                let cells: Vec<String> = fields.iter().map(|(k, v)| format!("{k}={}", scalar(v))).collect();
                writeln!(out, "  - {}", cells.join(" ")).unwrap();
            }
        }
        _ => writeln!(out, "{key}: {}", scalar(value)).unwrap(),
    }
}

fn scalar(value: &Value) -> String {
    match value {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn text_mirrors_json_fields() {
        let report = RunReport {
            command: vec!["gonality".into(), "g.txt".into()],
            input_digest: digest(b"abc"),
            payload: json!({"value": 4, "witness": [1, 0, 3], "instances": [{"n": 2, "pass": true}]}),
            timing_ms: None,
        };
        let text = report.to_text();
        assert!(text.contains("input_digest: sha256:ba7816bf"));
        assert!(text.contains("value: 4\n"));
        assert!(text.contains("witness: [1,0,3]\n"));
        assert!(text.contains("  - n=2 pass=true\n"));
        assert!(!report.to_json().contains("timing_ms"));
    }
}
