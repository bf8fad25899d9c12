use serde_json::{json, Value};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("cannot read workspace {path}: {message}")]
    Io { path: String, message: String },
    #[error("malformed workspace JSON: {0}")]
    Json(String),
    #[error("unknown {kind} `{name}`")]
    UnknownReference { kind: &'static str, name: String },
    #[error("invalid {kind} `{name}`: {message}")]
    Invalid {
        kind: &'static str,
        name: String,
        message: String,
    },
    #[error("{0}")]
    Usage(String),
    /// A mathematical precondition failed while running a command.
    #[error(transparent)]
    Math(#[from] hopfkit::Error),
}

impl CliError {
    pub fn unknown(kind: &'static str, name: &str) -> Self {
        CliError::UnknownReference {
            kind,
            name: name.to_string(),
        }
    }

    pub fn invalid(kind: &'static str, name: &str, message: String) -> Self {
        CliError::Invalid {
            kind,
            name: name.to_string(),
            message,
        }
    }

    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Math(_) => 1,
            _ => 2,
        }
    }

    pub fn to_json(&self) -> Value {
        let (kind, reference) = match self {
            CliError::Io { path, .. } => ("io", Some(path.clone())),
            CliError::Json(_) => ("json", None),
            CliError::UnknownReference { name, .. } => ("unknown_reference", Some(name.clone())),
            CliError::Invalid { name, .. } => ("invalid_input", Some(name.clone())),
            CliError::Usage(_) => ("usage", None),
            CliError::Math(_) => ("failed_check", None),
        };
        json!({ "error": { "kind": kind, "reference": reference, "message": self.to_string() } })
    }
}
