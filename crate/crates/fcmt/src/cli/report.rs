use serde::Serialize;
use serde_json::{Map, Value};
use sha2::{Digest, Sha256};

/// One command's output. Key order is fixed by construction, so identical
/// invocations serialize to identical bytes unless timing is requested.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Report {
    pub command: String,
    pub input: Value,
    pub input_digest: String,
    pub result: Value,
    pub checks: Map<String, Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timing_ms: Option<f64>,
}

impl Report {
    pub fn new(command: &str, input: Value, result: Value, checks: Vec<(String, bool)>) -> Report {
        let digest = Sha256::digest(input.to_string().as_bytes());
        Report {
            command: command.to_string(),
            input_digest: digest.iter().map(|b| format!("{b:02x}")).collect(),
            input,
            result,
            checks: checks.into_iter().map(|(k, v)| (k, Value::Bool(v))).collect(),
            timing_ms: None,
        }
    }

    pub fn passed(&self) -> bool {
        self.checks.values().all(|v| v.as_bool() == Some(true))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("reports are plain JSON")
    }

    /// Indented `key: value` lines; short arrays stay on one line.
    pub fn to_pretty(&self) -> String {
        let value = serde_json::to_value(self).expect("reports are plain JSON");
        let mut out = String::new();
        render(&value, 0, &mut out);
        out
    }
}

fn is_flat(v: &Value) -> bool {
    match v {
        Value::Array(items) => items.iter().all(|x| !x.is_object() && (!x.is_array() || is_flat(x))),
        Value::Object(_) => false,
        _ => true,
    }
}

fn scalar(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

fn render(v: &Value, indent: usize, out: &mut String) {
    let pad = "  ".repeat(indent);
    match v {
        Value::Object(map) => {
            for (k, x) in map {
                if is_flat(x) {
                    out.push_str(&format!("{pad}{k}: {}\n", scalar(x)));
                } else {
                    out.push_str(&format!("{pad}{k}:\n"));
                    render(x, indent + 1, out);
                }
            }
        }
        Value::Array(items) => {
            for x in items {
                if is_flat(x) {
                    out.push_str(&format!("{pad}- {}\n", scalar(x)));
                } else {
                    out.push_str(&format!("{pad}-\n"));
                    render(x, indent + 1, out);
                }
            }
        }
        other => out.push_str(&format!("{pad}{}\n", scalar(other))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn digest_and_checks() {
        let r = Report::new("x", json!({"a": 1}), json!([1, 2]), vec![("ok".into(), true)]);
        assert_eq!(r.input_digest.len(), 64);
        assert!(r.passed());
        assert!(r.to_json().starts_with("{\"command\":\"x\",\"input\":{\"a\":1}"));
        let bad = Report::new("x", json!({}), json!(null), vec![("ok".into(), false)]);
        assert!(!bad.passed());
    }

    #[test]
    fn pretty_layout() {
        let r = Report::new("x", json!({}), json!({"atoms": [[1, 0], [0, 1]], "n": {"k": "3/2"}}), vec![]);
        let text = r.to_pretty();
        assert!(text.contains("  atoms: [[1,0],[0,1]]\n"));
        assert!(text.contains("  n:\n    k: 3/2\n"));
    }
}
