//! One report structure, two renderings.
//!
//! Every subcommand assembles [`Record`]s; the human text and the
//! `json-lines` output are generated from the same fields, so the machine
//! form always carries at least what the human form says.

use serde_json::{Map, Value};

#[derive(Debug, Clone)]
pub struct Record {
    pub kind: &'static str,
    pub fields: Map<String, Value>,
    pub human: String,
}

impl Record {
    pub fn new(kind: &'static str, human: impl Into<String>) -> Self {
        Record {
            kind,
            fields: Map::new(),
            human: human.into(),
        }
    }

    pub fn with(mut self, key: &str, value: impl Into<Value>) -> Self {
        self.fields.insert(key.to_string(), value.into());
        self
    }

    pub fn json_line(&self) -> String {
        let mut map = Map::new();
        map.insert("record".to_string(), Value::from(self.kind));
        for (k, v) in &self.fields {
            map.insert(k.clone(), v.clone());
        }
        Value::Object(map).to_string()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Human,
    JsonLines,
}

pub fn emit(records: &[Record], format: Format, out: &mut dyn std::io::Write) {
    for r in records {
        let line = match format {
            Format::Human => r.human.clone(),
            Format::JsonLines => r.json_line(),
        };
        let _ = writeln!(out, "{line}");
    }
}
