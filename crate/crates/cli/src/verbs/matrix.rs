use adduce::bigrading::{build_bigrading, check_condition};
use adduce::matrixlab::{depth_of_functional, jordan_partition, psi_lambda, ExactMatrix};
use adduce::partitions::Composition;
use serde_json::{json, Map, Value};

use super::{required, strings, unit_name, units};
use crate::args::RawArgs;
use crate::registry::{CliError, Outcome, Verb};

pub struct Jordan;

impl Verb for Jordan {
    fn name(&self) -> &'static str {
        "jordan"
    }

    fn about(&self) -> &'static str {
        "Jordan type of a nilpotent matrix (--matrix path)"
    }

    fn run(&self, args: &RawArgs) -> Result<Outcome, CliError> {
        let path = args
            .matrix
            .as_ref()
            .ok_or_else(|| CliError::Parse("missing required flag --matrix".into()))?;
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::Domain(format!("cannot read {}: {e}", path.display())))?;
        let a = ExactMatrix::parse(&text)?;
        let p = jordan_partition(&a)?;
        Ok(Outcome {
            input: json!({"matrix": path.display().to_string()}),
            result: json!({"partition": p.to_string(), "parts": p.parts()}),
            text: p.to_string(),
            provenance: strings(&["transpose of the Jordan type is read off rank(A^(k-1)) - rank(A^k)"]),
        })
    }
}

pub struct PsiLambda;

impl Verb for PsiLambda {
    fn name(&self) -> &'static str {
        "psi-lambda"
    }

    fn about(&self) -> &'static str {
        "the functional tr(X w0 J w0) for a composition (--lambda [--n])"
    }

    fn run(&self, args: &RawArgs) -> Result<Outcome, CliError> {
        let text = args
            .lambda
            .as_deref()
            .ok_or_else(|| CliError::Parse("missing required flag --lambda".into()))?;
        let lambda: Composition = text.parse()?;
        let n = args.n.unwrap_or(lambda.size());
        let psi = psi_lambda(&lambda, n)?;
        let depth = depth_of_functional(&psi)?;
        let jordan = jordan_partition(psi.dual())?;
        let support: Vec<Value> = psi
            .support()
            .into_iter()
            .map(|(a, b, c)| json!({"unit": unit_name((a, b)), "value": c.to_string()}))
            .collect();
        Ok(Outcome {
            input: json!({"lambda": text, "n": n}),
            result: json!({
                "functional": psi.to_string(),
                "support": support,
                "depth": depth,
                "jordan_type": jordan.to_string(),
            }),
            text: format!("{psi}\ndepth {depth}, Jordan type {jordan}"),
            provenance: strings(&["dual matrix is w0 J_lambda w0 with upper Jordan blocks"]),
        })
    }
}

pub struct Bigrade;

impl Verb for Bigrade {
    fn name(&self) -> &'static str {
        "bigrade"
    }

    fn about(&self) -> &'static str {
        "bigrading of the mirabolic nilradical (--n --d)"
    }

    fn run(&self, args: &RawArgs) -> Result<Outcome, CliError> {
        let n = required(args.n, "n")?;
        let d = required(args.d, "d")?;
        let b = build_bigrading(n, d)?;
        let report = check_condition(&b)?;
        let mut blocks = Map::new();
        let mut lines = Vec::new();
        for ((i, j), list) in b.blocks() {
            blocks.insert(format!("({i},{j})"), units(list));
            let names: Vec<String> = list.iter().map(|&u| unit_name(u)).collect();
            lines.push(format!("a({i},{j}): {}", names.join(" ")));
        }
        lines.push(format!(
            "N_1: {}",
            b.n_s(1)
                .iter()
                .map(|&u| unit_name(u))
                .collect::<Vec<_>>()
                .join(" ")
        ));
        lines.push(format!("condition: {report}"));
        Ok(Outcome {
            input: json!({"n": n, "d": d}),
            result: json!({
                "x": b.x,
                "y": b.y,
                "blocks": blocks,
                "order": units(b.order()),
                "N_1": units(&b.n_s(1)),
                "condition": {
                    "passed": report.passed(),
                    "checks": report.checks,
                    "violations": report.violations,
                },
            }),
            text: lines.join("\n"),
            provenance: strings(&[
                "weights from brackets with diagonal X and Y",
                "xi is the sum of the a(1,0) coordinates",
            ]),
        })
    }
}
