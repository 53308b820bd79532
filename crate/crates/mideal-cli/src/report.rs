use serde::Serialize;
use serde_json::Value;
use sha2::{Digest, Sha256};

use mideal::Error;

/// How a command ended; each maps to one exit code.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Ok,
    Negative,
    Unknown,
    InputError,
    InvariantViolation,
}

impl Status {
    pub fn code(self) -> u8 {
        match self {
            Status::Ok => 0,
            Status::Negative => 2,
            Status::Unknown => 3,
            Status::InputError => 4,
            Status::InvariantViolation => 5,
        }
    }
}

/// What a subcommand hands back to `main`.
pub struct Outcome {
    pub input: Value,
    pub result: Value,
    pub status: Status,
    pub warnings: Vec<String>,
    /// Extra blocks shown only by `--format pretty`.
    pub pretty: Vec<String>,
}

impl Outcome {
    pub fn new(input: Value, result: impl Serialize) -> Self {
        Outcome {
            input,
            result: serde_json::to_value(result).expect("serializable"),
            status: Status::Ok,
            warnings: Vec::new(),
            pretty: Vec::new(),
        }
    }

    pub fn status(mut self, s: Status) -> Self {
        self.status = s;
        self
    }

    pub fn negative_if(self, cond: bool) -> Self {
        if cond {
            self.status(Status::Negative)
        } else {
            self
        }
    }

    pub fn warn(mut self, w: Vec<String>) -> Self {
        self.warnings.extend(w);
        self
    }

    pub fn block(mut self, b: String) -> Self {
        self.pretty.push(b);
        self
    }
}

#[derive(Debug)]
pub struct Failure {
    pub status: Status,
    pub message: String,
}

impl Failure {
    pub fn input(message: impl Into<String>) -> Self {
        Failure { status: Status::InputError, message: message.into() }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let status = match e {
            Error::Budget(_) => Status::Unknown,
            Error::Invariant(_) => Status::InvariantViolation,
            Error::NotStable(_) | Error::NotRegular { .. } | Error::Classification(_) => Status::Negative,
            _ => Status::InputError,
        };
        Failure { status, message: e.to_string() }
    }
}

#[derive(Serialize)]
pub struct RunReport {
    pub command: String,
    pub input_digest: String,
    pub input: Value,
    pub status: Status,
    pub exit_code: u8,
    pub result: Value,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
    pub warnings: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timing_ms: Option<f64>,
    #[serde(skip)]
    pub pretty: Vec<String>,
}

pub fn digest(input: &Value) -> String {
    let bytes = serde_json::to_vec(input).expect("serializable");
    let hash = Sha256::digest(&bytes);
    let hex: String = hash.iter().map(|b| format!("{b:02x}")).collect();
    format!("sha256:{hex}")
}

impl RunReport {
    pub fn json(&self) -> String {
        serde_json::to_string_pretty(self).expect("serializable")
    }

    pub fn pretty(&self) -> String {
        let status = serde_json::to_value(self.status).expect("serializable");
        let mut out = format!("{}: {} (exit {})\n", self.command, status.as_str().unwrap_or_default(), self.exit_code);
        if let Some(e) = &self.error {
            out.push_str(&format!("error: {e}\n"));
        }
        for w in &self.warnings {
            out.push_str(&format!("warning: {w}\n"));
        }
        if let Some(t) = self.timing_ms {
            out.push_str(&format!("time: {t:.1} ms\n"));
        }
        if !self.result.is_null() {
            render(&self.result, 0, &mut out);
        }
        for b in &self.pretty {
            out.push('\n');
            out.push_str(b.trim_end());
            out.push('\n');
        }
        out
    }
}

fn scalar(v: &Value) -> Option<String> {
    match v {
        Value::Null => Some("-".into()),
        Value::Bool(b) => Some(b.to_string()),
        Value::Number(n) => Some(n.to_string()),
        Value::String(s) => Some(s.clone()),
        Value::Array(a) if a.iter().all(|x| !x.is_object() && !x.is_array()) => {
            Some(format!("[{}]", a.iter().filter_map(scalar).collect::<Vec<_>>().join(", ")))
        }
        Value::Array(a) if a.iter().all(|x| x.as_array().is_some_and(|r| r.iter().all(|y| !y.is_object() && !y.is_array()))) => {
            Some(format!("[{}]", a.iter().filter_map(scalar).collect::<Vec<_>>().join(", ")))
        }
        _ => None,
    }
}

/// Indented `key: value` rendering of a JSON value.
fn render(v: &Value, depth: usize, out: &mut String) {
    let pad = "  ".repeat(depth);
    match v {
        Value::Object(map) => {
            for (k, x) in map {
                match scalar(x) {
                    Some(s) => out.push_str(&format!("{pad}{k}: {s}\n")),
                    None => {
                        out.push_str(&format!("{pad}{k}:\n"));
                        render(x, depth + 1, out);
                    }
                }
            }
        }
        Value::Array(a) => {
            for x in a {
                match scalar(x) {
                    Some(s) => out.push_str(&format!("{pad}- {s}\n")),
                    None => {
                        out.push_str(&format!("{pad}-\n"));
                        render(x, depth + 1, out);
                    }
                }
            }
        }
        _ => out.push_str(&format!("{pad}{}\n", scalar(v).unwrap_or_default())),
    }
}
