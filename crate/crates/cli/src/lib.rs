//! Command-line front end for the `adduce` calculus.
//!
//! Verbs live in a [`Registry`] keyed by name; [`run`] parses the command
//! line, dispatches, and renders text or a single JSON object.

pub mod args;
pub mod registry;
mod verbs;

use clap::{CommandFactory, FromArgMatches};
use serde_json::json;

pub use args::RawArgs;
pub use registry::{CliError, Outcome, Registry, Verb};
pub use verbs::{filtration_trials, linalg_run, FiltrationSummary};

/// What the process should print and return.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Response {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Response {
    fn error(code: i32, msg: impl std::fmt::Display) -> Self {
        Response {
            code,
            stdout: String::new(),
            stderr: format!("error: {msg}\n"),
        }
    }
}

/// Renders an outcome as the structured object `{verb, input, result, provenance}`.
pub fn render_json(verb: &str, outcome: &Outcome) -> String {
    let value = json!({
        "verb": verb,
        "input": outcome.input,
        "result": outcome.result,
        "provenance": outcome.provenance,
    });
    let mut text = serde_json::to_string_pretty(&value).expect("json values always serialize");
    text.push('\n');
    text
}

/// Parses `argv` (including the program name) and runs the verb.
pub fn run<I, T>(argv: I) -> Response
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let registry = Registry::standard();
    let command = RawArgs::command().after_help(registry.help());
    let args = match command
        .try_get_matches_from(argv)
        .and_then(|m| RawArgs::from_arg_matches(&m))
    {
        Ok(a) => a,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let rendered = e.render().to_string();
            return if code == 0 {
                Response {
                    code,
                    stdout: rendered,
                    stderr: String::new(),
                }
            } else {
                Response {
                    code,
                    stdout: String::new(),
                    stderr: rendered,
                }
            };
        }
    };
    dispatch(&registry, &args)
}

/// Runs already-parsed arguments against `registry`.
pub fn dispatch(registry: &Registry, args: &RawArgs) -> Response {
    let Some(verb) = registry.get(&args.verb) else {
        let known: Vec<&str> = registry.names().collect();
        return Response::error(
            2,
            format!("unknown verb '{}' (known: {})", args.verb, known.join(", ")),
        );
    };
    match verb.run(args) {
        Ok(outcome) => {
            let stdout = if args.json {
                render_json(verb.name(), &outcome)
            } else {
                format!("{}\n", outcome.text)
            };
            Response {
                code: 0,
                stdout,
                stderr: String::new(),
            }
        }
        Err(e) => Response::error(e.exit_code(), e),
    }
}
