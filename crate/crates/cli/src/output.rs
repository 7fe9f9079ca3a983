use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use serde_json::{Map, Value};

use crate::args::Format;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("cannot read {}: {source}", path.display())]
    Input {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("cannot write {}: {source}", path.display())]
    Output {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error(transparent)]
    Core(#[from] hypermix_core::Error),
    #[error("{0}")]
    Defects(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Input { .. } => 66,
            CliError::Output { .. } => 74,
            CliError::Core(e) if e.is_validation() => 2,
            CliError::Core(e) if e.is_resource() => 3,
            CliError::Core(_) => 1,
            CliError::Defects(_) => 2,
        }
    }
}

impl From<serde_json::Error> for CliError {
    fn from(e: serde_json::Error) -> Self {
        CliError::Core(e.into())
    }
}

pub type CliResult<T> = std::result::Result<T, CliError>;

pub fn read_input(path: &Path) -> CliResult<String> {
    fs::read_to_string(path).map_err(|source| CliError::Input {
        path: path.to_path_buf(),
        source,
    })
}

pub fn write_file(path: &Path, contents: &str) -> CliResult<()> {
    fs::write(path, contents).map_err(|source| CliError::Output {
        path: path.to_path_buf(),
        source,
    })
}

/// What a subcommand produced, in both encodings.
pub struct Output {
    pub json: Value,
    pub csv: String,
    pub default_format: Format,
}

fn scalar(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Array(items) => items.iter().map(scalar).collect::<Vec<_>>().join(","),
        other => other.to_string(),
    }
}

/// `# hypermix <command>` then one `# key=value` line per resolved setting.
pub fn config_header(command: &str, config: &Map<String, Value>) -> String {
    let mut out = format!("# hypermix {command}\n");
    for (k, v) in config {
        if !v.is_null() {
            out.push_str(&format!("# {k}={}\n", scalar(v)));
        }
    }
    out
}

pub fn render(
    command: &str,
    config: Map<String, Value>,
    output: Output,
    format: Option<Format>,
) -> CliResult<String> {
    match format.unwrap_or(output.default_format) {
        Format::Csv => Ok(config_header(command, &config) + &output.csv),
        Format::Json => {
            let mut doc = Map::new();
            doc.insert("command".into(), Value::String(command.into()));
            doc.insert("config".into(), Value::Object(config));
            match output.json {
                Value::Object(fields) => doc.extend(fields),
                other => {
                    doc.insert("result".into(), other);
                }
            }
            Ok(serde_json::to_string_pretty(&Value::Object(doc))? + "\n")
        }
    }
}

pub fn emit(text: &str, out: Option<&Path>) -> CliResult<()> {
    match out {
        Some(path) => write_file(path, text),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout
                .write_all(text.as_bytes())
                .map_err(|source| CliError::Output {
                    path: PathBuf::from("<stdout>"),
                    source,
                })
        }
    }
}
