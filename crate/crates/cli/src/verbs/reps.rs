use std::collections::BTreeSet;

use adduce::derivatives::{
    adduce, derivative_monomial, igeq, infchar_transform, whittaker_dim, Derivative, InfCharMultiset,
    WhittakerDim,
};
use adduce::partitions::Composition;
use adduce::reps::{BasicRep, RepExpr};
use adduce::scalar::ExactComplex;
use serde_json::{json, Value};

use super::{expression, input, required, strings};
use crate::args::RawArgs;
use crate::registry::{CliError, Outcome, Verb};

fn kinds(e: &RepExpr) -> BTreeSet<&'static str> {
    e.factors.iter().map(BasicRep::kind).collect()
}

fn partition_rules(e: &RepExpr) -> Vec<String> {
    let mut out = vec!["associated partition of a product is the induced sum".to_string()];
    for k in kinds(e) {
        out.push(
            match k {
                "chi" => "character of G_n has partition 1^n",
                "stein" => "Stein complementary series of G_2m has partition 2^m",
                "speh" => "Speh representation of G_2m has partition 2^m",
                _ => "Speh complementary series of G_4m has partition 4^m",
            }
            .to_string(),
        );
    }
    out
}

pub struct Ap;

impl Verb for Ap {
    fn name(&self) -> &'static str {
        "ap"
    }

    fn about(&self) -> &'static str {
        "associated partition of an expression"
    }

    fn run(&self, args: &RawArgs) -> Result<Outcome, CliError> {
        let (e, echo) = expression(args)?;
        let p = e.associated_partition()?;
        Ok(Outcome {
            input: echo.into(),
            result: json!({"partition": p.to_string(), "parts": p.parts()}),
            text: p.to_string(),
            provenance: partition_rules(&e),
        })
    }
}

pub struct Depth;

impl Verb for Depth {
    fn name(&self) -> &'static str {
        "depth"
    }

    fn about(&self) -> &'static str {
        "depth: the largest part of the associated partition"
    }

    fn run(&self, args: &RawArgs) -> Result<Outcome, CliError> {
        let (e, echo) = expression(args)?;
        let d = e.depth()?;
        let mut provenance = partition_rules(&e);
        provenance.push("depth equals the largest part of the associated partition".into());
        provenance.push("depth is additive over products".into());
        Ok(Outcome {
            input: echo.into(),
            result: json!(d),
            text: d.to_string(),
            provenance,
        })
    }
}

pub struct Adduce;

impl Verb for Adduce {
    fn name(&self) -> &'static str {
        "adduce"
    }

    fn about(&self) -> &'static str {
        "adduced representation (factorwise rules)"
    }

    fn run(&self, args: &RawArgs) -> Result<Outcome, CliError> {
        let (e, echo) = expression(args)?;
        let a = adduce(&e)?;
        let mut provenance = vec!["adduction is multiplicative over products".to_string()];
        for k in kinds(&e) {
            provenance.push(
                match k {
                    "chi" => "adduce chi(n,eps,z) = chi(n-1,eps,z)",
                    "stein" => "adduce stein(m,s;eps,t) = stein(m-1,s;eps,t)",
                    "speh" => "adduce speh(m,k;t) = speh(m-1,k;t)",
                    _ => "adduce spehcs(m,k,s;t) = spehcs(m-1,k,s;t)",
                }
                .to_string(),
            );
        }
        Ok(Outcome {
            input: echo.into(),
            result: json!(a.to_string()),
            text: a.to_string(),
            provenance,
        })
    }
}

pub struct Derive;

impl Verb for Derive {
    fn name(&self) -> &'static str {
        "derive"
    }

    fn about(&self) -> &'static str {
        "derivative of a product of characters (--order k)"
    }

    fn run(&self, args: &RawArgs) -> Result<Outcome, CliError> {
        let (e, mut echo) = expression(args)?;
        let order = required(args.order, "order")?;
        echo.insert("order".into(), json!(order));
        let d = derivative_monomial(&e, order)?;
        let rule = match d {
            Derivative::Zero => "derivatives above the depth vanish",
            Derivative::Rep(_) => "top derivative of a character product restricts each character",
        };
        Ok(Outcome {
            input: echo.into(),
            result: json!(d.to_string()),
            text: d.to_string(),
            provenance: strings(&[rule]),
        })
    }
}

pub struct Whittaker;

impl Verb for Whittaker {
    fn name(&self) -> &'static str {
        "whittaker"
    }

    fn about(&self) -> &'static str {
        "dimension of degenerate Whittaker functionals (--lambda)"
    }

    fn run(&self, args: &RawArgs) -> Result<Outcome, CliError> {
        let (e, mut echo) = expression(args)?;
        let text = args
            .lambda
            .as_deref()
            .ok_or_else(|| CliError::Parse("missing required flag --lambda".into()))?;
        let lambda: Composition = text.parse()?;
        echo.insert("lambda".into(), json!(text));
        let verdict = whittaker_dim(&e, &lambda)?;
        let (result, rule) = match &verdict {
            WhittakerDim::Zero => (
                json!({"verdict": "0"}),
                "no functionals when the first part exceeds the depth",
            ),
            WhittakerDim::One => (
                json!({"verdict": "1"}),
                "iterated highest derivatives along lambda reach the trivial representation",
            ),
            WhittakerDim::Unknown(reason) => (
                json!({"verdict": "unknown", "reason": reason}),
                "first part below the depth is not determined by the rules",
            ),
        };
        Ok(Outcome {
            input: echo.into(),
            result,
            text: verdict.to_string(),
            provenance: strings(&[rule]),
        })
    }
}

pub struct Igeq;

impl Verb for Igeq {
    fn name(&self) -> &'static str {
        "igeq"
    }

    fn about(&self) -> &'static str {
        "character product with the same infinitesimal character"
    }

    fn run(&self, args: &RawArgs) -> Result<Outcome, CliError> {
        let (e, echo) = expression(args)?;
        let m = igeq(&e)?;
        Ok(Outcome {
            input: echo.into(),
            result: json!(m.to_string()),
            text: m.to_string(),
            provenance: strings(&[
                "each factor is replaced by depth-many characters",
                "characters sorted by decreasing real part, ties kept in order",
            ]),
        })
    }
}

/// Reads `{z1, z2, ...}` or `z1, z2, ...`.
fn parse_multiset(text: &str) -> Result<InfCharMultiset, CliError> {
    let trimmed = text.trim();
    let mut offset = text.len() - text.trim_start().len();
    let inner = match trimmed.strip_prefix('{') {
        Some(rest) => {
            offset += 1;
            rest.strip_suffix('}').ok_or_else(|| {
                CliError::Parse(format!(
                    "parse error at position {}: missing closing '}}'",
                    text.len()
                ))
            })?
        }
        None => trimmed,
    };
    let mut elements = Vec::new();
    if !inner.trim().is_empty() {
        for piece in inner.split(',') {
            elements.push(ExactComplex::parse_at(piece, offset)?);
            offset += piece.len() + 1;
        }
    }
    Ok(InfCharMultiset::new(elements))
}

pub struct Infchar;

impl Verb for Infchar {
    fn name(&self) -> &'static str {
        "infchar"
    }

    fn about(&self) -> &'static str {
        "infinitesimal characters after a k-th derivative (--order k)"
    }

    fn run(&self, args: &RawArgs) -> Result<Outcome, CliError> {
        let text = input(args, "a multiset such as {0, 1, 1/2+i}")?;
        let order = required(args.order, "order")?;
        let s = parse_multiset(text)?;
        let out = infchar_transform(&s, order)?;
        let list: Vec<Value> = out.iter().map(|m| json!(m.to_string())).collect();
        let words: Vec<String> = out.iter().map(|m| m.to_string()).collect();
        Ok(Outcome {
            input: json!({"multiset": s.to_string(), "order": order}),
            result: Value::Array(list),
            text: words.join("\n"),
            provenance: strings(&["drop k elements and shift the rest by 1/2"]),
        })
    }
}
