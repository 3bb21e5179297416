//! Built-in verbs and the helpers they share.

mod matrix;
mod reps;
mod verify;

use adduce::reps::{parse_expr, Field, RepExpr};
use serde_json::{json, Map, Value};

use crate::args::RawArgs;
use crate::registry::{CliError, Verb};

pub use verify::{filtration_trials, linalg_run, FiltrationSummary};

pub(crate) fn all() -> Vec<Box<dyn Verb>> {
    vec![
        Box::new(reps::Ap),
        Box::new(reps::Depth),
        Box::new(reps::Adduce),
        Box::new(reps::Derive),
        Box::new(reps::Whittaker),
        Box::new(reps::Igeq),
        Box::new(reps::Infchar),
        Box::new(matrix::Jordan),
        Box::new(matrix::PsiLambda),
        Box::new(matrix::Bigrade),
        Box::new(verify::VerifyLinalg),
        Box::new(verify::VerifyFiltrations),
        Box::new(verify::VerifyKeylemma),
        Box::new(verify::AdIdentity),
    ]
}

fn field(args: &RawArgs) -> Result<Field, CliError> {
    args.field
        .parse::<Field>()
        .map_err(|_| CliError::Parse(format!("unknown field '{}', expected R or C", args.field)))
}

fn input<'a>(args: &'a RawArgs, what: &str) -> Result<&'a str, CliError> {
    args.input
        .as_deref()
        .ok_or_else(|| CliError::Parse(format!("missing input: expected {what}")))
}

fn required<T: Copy>(value: Option<T>, flag: &str) -> Result<T, CliError> {
    value.ok_or_else(|| CliError::Parse(format!("missing required flag --{flag}")))
}

/// Parses and validates the expression input.
fn expression(args: &RawArgs) -> Result<(RepExpr, Map<String, Value>), CliError> {
    let text = input(args, "a representation expression")?;
    let field = field(args)?;
    let e = parse_expr(text, field)?;
    e.ensure_valid()?;
    let mut echo = Map::new();
    echo.insert("expression".into(), json!(text));
    echo.insert("field".into(), json!(field.to_string()));
    Ok((e, echo))
}

fn unit_name(u: (usize, usize)) -> String {
    format!("E{},{}", u.0 + 1, u.1 + 1)
}

fn units(list: &[(usize, usize)]) -> Value {
    Value::Array(list.iter().map(|&u| json!(unit_name(u))).collect())
}

fn strings(list: &[&str]) -> Vec<String> {
    list.iter().map(|s| s.to_string()).collect()
}
