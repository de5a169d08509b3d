use serde_json::{json, Map, Value};

use crate::error::CliError;

/// Everything a run prints. Keys keep insertion order, so identical inputs
/// give byte-identical output.
#[derive(Debug, Clone, Default)]
pub struct Report {
    pub command: Vec<String>,
    pub inputs: Vec<Value>,
    pub results: Map<String, Value>,
    pub consistency: Map<String, Value>,
}

impl Report {
    pub fn new(command: Vec<String>) -> Self {
        Report { command, ..Default::default() }
    }

    pub fn input(&mut self, v: Value) {
        self.inputs.push(v);
    }

    pub fn set(&mut self, key: &str, v: impl Into<Value>) {
        self.results.insert(key.into(), v.into());
    }

    pub fn flag(&mut self, key: &str, ok: bool) {
        self.consistency.insert(key.into(), Value::Bool(ok));
    }

    pub fn failed_flags(&self) -> Vec<&str> {
        self.consistency.iter().filter(|(_, v)| **v == Value::Bool(false)).map(|(k, _)| k.as_str()).collect()
    }

    /// The final JSON document and the exit code.
    pub fn finish(self, error: Option<&CliError>) -> (Value, i32) {
        let failed: Vec<String> = self.failed_flags().into_iter().map(String::from).collect();
        let code = match error {
            Some(e) => e.exit_code(),
            None if !failed.is_empty() => 1,
            None => 0,
        };
        let mut doc = Map::new();
        doc.insert("command".into(), json!(self.command));
        doc.insert("inputs".into(), Value::Array(self.inputs));
        doc.insert("results".into(), Value::Object(self.results));
        doc.insert("consistency".into(), Value::Object(self.consistency));
        doc.insert("ok".into(), Value::Bool(code == 0));
        if let Some(e) = error {
            let mut err = Map::new();
            err.insert("kind".into(), e.kind().into());
            err.insert("message".into(), e.to_string().into());
            if let Some(d) = e.details() {
                err.insert("details".into(), d.clone());
            }
            doc.insert("error".into(), Value::Object(err));
        } else if !failed.is_empty() {
            doc.insert("error".into(), json!({"kind": "consistency", "message": format!("failed: {}", failed.join(", "))}));
        }
        (Value::Object(doc), code)
    }
}
