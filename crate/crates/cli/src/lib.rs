//! Command-line front end for the `cremona` crate.
//!
//! Every subcommand builds one JSON object with a `command` and `seed` field.
//! With `--json` it is printed as is; otherwise it is rendered as indented
//! `key: value` text. Exit codes: 0 on success, 2 when the input fails
//! validation, 1 when a procedure fails on valid input.

pub mod args;
mod commands;
pub mod error;
pub mod parse;
pub mod report;

use std::ffi::OsString;
use std::time::Instant;

use clap::Parser;
use serde_json::Value;

pub use args::Cli;
pub use error::CliError;
pub use parse::{parse_class, parse_matrix_file, parse_point, parse_points_file, parse_poly, ParseError};

/// Result of one invocation: exit code and the two output streams.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            let code = e.exit_code();
            return if e.use_stderr() {
                Outcome {
                    code,
                    stdout: String::new(),
                    stderr: text,
                }
            } else {
                Outcome {
                    code,
                    stdout: text,
                    stderr: String::new(),
                }
            };
        }
    };
    run_cli(&cli)
}

pub fn run_cli(cli: &Cli) -> Outcome {
    let start = Instant::now();
    let result = commands::execute(cli);
    let mut stderr = String::new();
    let (code, value) = match result {
        Ok(v) => (0, v),
        Err(e) => {
            stderr.push_str(&format!("error: {e}\n"));
            let body = report::ErrorBody {
                error: report::ErrorInfo {
                    kind: if e.is_internal() { "internal" } else { "validation" },
                    reason: e.to_string(),
                },
            };
            let env = report::Envelope {
                command: commands::command_name(&cli.command).to_string(),
                seed: cli.seed,
                body,
            };
            (e.exit_code(), serde_json::to_value(env).expect("serializable"))
        }
    };
    if cli.timing {
        stderr.push_str(&format!("elapsed: {:.3} s\n", start.elapsed().as_secs_f64()));
    }
    let stdout = if cli.json {
        let mut s = serde_json::to_string_pretty(&value).expect("serializable");
        s.push('\n');
        s
    } else if code == 0 {
        render_text(&value)
    } else {
        String::new()
    };
    Outcome { code, stdout, stderr }
}

fn scalar(v: &Value) -> Option<String> {
    match v {
        Value::Null => Some("-".into()),
        Value::Bool(b) => Some(b.to_string()),
        Value::Number(n) => Some(n.to_string()),
        Value::String(s) => Some(s.clone()),
        Value::Array(a) if a.iter().all(|x| !x.is_object() && !x.is_array()) => {
            Some(a.iter().filter_map(scalar).collect::<Vec<_>>().join(", "))
        }
        _ => None,
    }
}

fn render_into(out: &mut String, v: &Value, indent: usize) {
    let pad = "  ".repeat(indent);
    match v {
        Value::Object(map) => {
            for (k, x) in map {
                match scalar(x) {
                    Some(s) => out.push_str(&format!("{pad}{k}: {s}\n")),
                    None => {
                        out.push_str(&format!("{pad}{k}:\n"));
                        render_into(out, x, indent + 1);
                    }
                }
            }
        }
        Value::Array(items) => {
            for (i, x) in items.iter().enumerate() {
                match scalar(x) {
                    Some(s) => out.push_str(&format!("{pad}- {s}\n")),
                    None => {
                        out.push_str(&format!("{pad}[{i}]\n"));
                        render_into(out, x, indent + 1);
                    }
                }
            }
        }
        other => out.push_str(&format!("{pad}{}\n", scalar(other).unwrap_or_default())),
    }
}

/// Indented `key: value` rendering of a command's output.
pub fn render_text(v: &Value) -> String {
    let mut out = String::new();
    render_into(&mut out, v, 0);
    out
}
