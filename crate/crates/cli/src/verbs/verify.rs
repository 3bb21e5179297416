use adduce::bigrading::{ad_power_identity, verify_keylemma_premises};
use adduce::filtrations::{
    check_interpolation, comparable, interpolate, random_comparable_pair, random_interleaved_pair,
    shift_lemma_dims,
};
use adduce::matrixlab::{random_rational_vector, sign_vectors, verify_linalg_lemma, LinAlgReport};
use adduce::Result;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::json;

use super::{required, strings};
use crate::args::RawArgs;
use crate::registry::{CliError, Outcome, Verb};

const DEFAULT_SEED: u64 = 0;

/// Checks the nilpotency lemma on every sign vector plus `random` seeded
/// rational vectors.
pub fn linalg_run(n: usize, d: usize, seed: u64, random: usize) -> Result<LinAlgReport> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let len = n.saturating_sub(d);
    let mut samples = sign_vectors(len);
    samples.extend((0..random).map(|_| random_rational_vector(&mut rng, len)));
    verify_linalg_lemma(n, d, &samples)
}

pub struct VerifyLinalg;

impl Verb for VerifyLinalg {
    fn name(&self) -> &'static str {
        "verify-linalg"
    }

    fn about(&self) -> &'static str {
        "check (u+v)^d = 0 iff v = 0 (--n --d [--seed])"
    }

    fn run(&self, args: &RawArgs) -> std::result::Result<Outcome, CliError> {
        let n = required(args.n, "n")?;
        let d = required(args.d, "d")?;
        let seed = args.seed.unwrap_or(DEFAULT_SEED);
        let r = linalg_run(n, d, seed, 100)?;
        let verdict = if r.passed() { "pass" } else { "fail" };
        Ok(Outcome {
            input: json!({"n": n, "d": d, "seed": seed}),
            result: json!({
                "passed": r.passed(),
                "samples": r.samples,
                "failures": r.failures,
                "closed_form": r.closed_form,
                "extended_reading": r.extended_reading_counterexample,
            }),
            text: format!("{verdict}: {} samples, {}", r.samples, r.closed_form),
            provenance: strings(&["u is the nilpotent last block, v the column above it"]),
        })
    }
}

/// Aggregate of seeded filtration trials.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct FiltrationSummary {
    pub trials: usize,
    pub failures: Vec<String>,
}

impl FiltrationSummary {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Runs `trials` rounds; each draws a comparable pair for the
/// interpolation checks and an interleaved pair for the shift identity.
pub fn filtration_trials(seed: u64, trials: usize, max_ambient: usize) -> Result<FiltrationSummary> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = FiltrationSummary {
        trials,
        failures: Vec::new(),
    };
    for t in 0..trials {
        let ambient = rng.gen_range(1..=max_ambient.max(1));
        let len = rng.gen_range(1..=5);
        let k = rng.gen_range(0..=3);
        let (f, phi) = random_comparable_pair(&mut rng, ambient, len, k);
        if !comparable(&f, &phi, k)? || !comparable(&phi, &f, 2 * k)? {
            out.failures
                .push(format!("trial {t}: pair not comparable with shift {k}"));
        }
        let psi = interpolate(&f, &phi, k)?;
        for issue in check_interpolation(&f, &phi, k, &psi)? {
            out.failures.push(format!("trial {t}: {issue}"));
        }
        let (f, phi) = random_interleaved_pair(&mut rng, ambient, len);
        for issue in shift_lemma_dims(&f, &phi)?.failures {
            out.failures.push(format!("trial {t}: {issue}"));
        }
    }
    Ok(out)
}

pub struct VerifyFiltrations;

impl Verb for VerifyFiltrations {
    fn name(&self) -> &'static str {
        "verify-filtrations"
    }

    fn about(&self) -> &'static str {
        "interpolation and shift checks on random chains ([--seed] [--n max ambient])"
    }

    fn run(&self, args: &RawArgs) -> std::result::Result<Outcome, CliError> {
        let seed = args.seed.unwrap_or(DEFAULT_SEED);
        let ambient = args.n.unwrap_or(8);
        let s = filtration_trials(seed, 100, ambient)?;
        let verdict = if s.passed() { "pass" } else { "fail" };
        Ok(Outcome {
            input: json!({"seed": seed, "max_ambient": ambient}),
            result: json!({"passed": s.passed(), "trials": s.trials, "failures": s.failures}),
            text: format!("{verdict}: {} trials, {} failures", s.trials, s.failures.len()),
            provenance: strings(&[
                "comparable filtrations interpolate through a chain of shift-one steps",
                "kernel and cokernel of the graded map match the quotient dimensions",
            ]),
        })
    }
}

pub struct VerifyKeylemma;

impl Verb for VerifyKeylemma {
    fn name(&self) -> &'static str {
        "verify-keylemma-premises"
    }

    fn about(&self) -> &'static str {
        "exhaustive PBW monomial checks ([--n max n] [--order max degree])"
    }

    fn run(&self, args: &RawArgs) -> std::result::Result<Outcome, CliError> {
        let n = args.n.unwrap_or(4);
        let degree = args.order.unwrap_or(4);
        let r = verify_keylemma_premises(n, degree)?;
        let verdict = if r.passed() { "pass" } else { "fail" };
        Ok(Outcome {
            input: json!({"max_n": n, "max_degree": degree}),
            result: json!({
                "passed": r.passed(),
                "cases": r.cases,
                "monomials": r.monomials,
                "relevant": r.relevant,
                "failures": r.failures,
            }),
            text: format!(
                "{verdict}: {} cases, {} monomials, {} relevant",
                r.cases, r.monomials, r.relevant
            ),
            provenance: strings(&[
                "ad weight of a PBW monomial is the sum of its factor weights",
                "relevant monomials have weight (k,l) with k+l equal to the degree",
                "irrelevant monomials carry more a(1,0) factors than their X-weight",
            ]),
        })
    }
}

pub struct AdIdentity;

impl Verb for AdIdentity {
    fn name(&self) -> &'static str {
        "ad-identity"
    }

    fn about(&self) -> &'static str {
        "ad(X)^k(I^m) for m <= k against normal ordering (--order k)"
    }

    fn run(&self, args: &RawArgs) -> std::result::Result<Outcome, CliError> {
        let k = required(args.order, "order")?;
        let k = u32::try_from(k).map_err(|_| CliError::Domain(format!("order {k} is too large")))?;
        let r = ad_power_identity(k);
        let values: Vec<_> = r
            .values
            .iter()
            .map(|(m, v)| json!({"m": m, "value": v}))
            .collect();
        let lines: Vec<String> = r.values.iter().map(|(m, v)| format!("m={m}: {v}")).collect();
        Ok(Outcome {
            input: json!({"k": k}),
            result: json!({"passed": r.passed, "values": values}),
            text: lines.join("\n"),
            provenance: strings(&["I^b X^c = X^c (I+c)^b in the two-generator algebra with [I,X] = X"]),
        })
    }
}
