use serde_json::{Map, Value};

/// An ordered set of key/value pairs. Text mode prints `key=value`, either
/// all on one line or one per line for blocks; JSON mode prints one object
/// per line.
#[derive(Debug, Default)]
pub struct Record {
    fields: Vec<(String, Value)>,
    block: bool,
}

impl Record {
    pub fn line() -> Self {
        Record::default()
    }

    pub fn block() -> Self {
        Record {
            fields: Vec::new(),
            block: true,
        }
    }

    pub fn with(mut self, key: &str, value: impl Into<Value>) -> Self {
        self.fields.push((key.to_string(), value.into()));
        self
    }

    pub fn push(&mut self, key: &str, value: impl Into<Value>) {
        self.fields.push((key.to_string(), value.into()));
    }

    pub fn to_text(&self) -> String {
        let sep = if self.block { "\n" } else { " " };
        self.fields
            .iter()
            .map(|(k, v)| format!("{k}={}", render(v)))
            .collect::<Vec<_>>()
            .join(sep)
    }

    pub fn to_json(&self) -> String {
        let map: Map<String, Value> = self.fields.iter().cloned().collect();
        Value::Object(map).to_string()
    }
}

fn render(v: &Value) -> String {
    match v {
        Value::Null => "none".into(),
        Value::String(s) => s.clone(),
        Value::Array(items) => items.iter().map(render).collect::<Vec<_>>().join(","),
        Value::Object(_) => v.to_string(),
        other => other.to_string(),
    }
}

pub struct Printer {
    pub json: bool,
}

impl Printer {
    pub fn emit(&self, r: &Record) {
        if self.json {
            println!("{}", r.to_json());
        } else {
            println!("{}", r.to_text());
        }
    }
}
