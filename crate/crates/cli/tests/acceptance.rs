//! Acceptance gate: one PASS/FAIL line per criterion, non-zero exit on any
//! failure. Runs without the libtest harness so the lines always print.

use std::collections::BTreeMap;
use std::process::Command;
use std::time::{Duration, Instant};

use adduce::bigrading::{
    ad_power_identity, build_bigrading, build_unshifted, check_condition, check_condition_with,
    verify_keylemma_premises, XiCharacter,
};
use adduce::derivatives::{adduce, derivative_monomial, igeq, whittaker_dim, Derivative, WhittakerDim};
use adduce::matrixlab::{jordan_partition, psi_tail, random_invertible, ExactMatrix};
use adduce::partitions::{Composition, Partition};
use adduce::reps::{catalogue, parse_expr, random_product, BasicRep, CatalogueParams, Field, RepExpr};
use adduce_cli::{filtration_trials, linalg_run};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const CATALOGUE_BUDGET: Duration = Duration::from_secs(1);
const LINALG_BUDGET: Duration = Duration::from_secs(10);
const PBW_BUDGET: Duration = Duration::from_secs(30);
const PRODUCTS: usize = 200;
const MAX_PRODUCT_SIZE: usize = 40;
const IGEQ_SAMPLES: usize = 100;
const LINALG_RANDOM: usize = 100;
const JORDAN_SAMPLES: usize = 200;
const MAX_MATRIX: usize = 8;
const PBW_MAX_N: usize = 4;
const PBW_MAX_DEGREE: usize = 4;
const AD_MAX_K: u32 = 6;
const FILTRATION_TRIALS: usize = 100;
const ROUND_TRIPS: usize = 500;
const SEED: u64 = 20_240_601;

type Check = Result<String, String>;
type Criterion = (&'static str, fn() -> Check);

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(start: Instant, budget: Duration) -> Result<Duration, String> {
    let t = start.elapsed();
    ensure(t < budget, || format!("took {t:?}, budget {budget:?}"))?;
    Ok(t)
}

/// Expected partition shape `(part, count)` of a basic factor.
fn shape(f: &BasicRep) -> (usize, usize) {
    match f {
        BasicRep::Character(c) => (1, c.n),
        BasicRep::Stein(s) => (2, s.m),
        BasicRep::Speh(s) => (2, s.m),
        BasicRep::SpehCs(s) => (4, s.m),
    }
}

/// Expected adduced factor, or `None` when it disappears.
fn adduced(f: &BasicRep) -> Option<BasicRep> {
    match f {
        BasicRep::Character(c) => (c.n > 1).then(|| BasicRep::chi(c.n - 1, c.eps, c.z.clone())),
        BasicRep::Stein(s) => (s.m > 1).then(|| BasicRep::stein(s.m - 1, s.s.clone(), s.eps, s.t.clone())),
        BasicRep::Speh(s) => (s.m > 1).then(|| BasicRep::speh(s.m - 1, s.k, s.t.clone())),
        BasicRep::SpehCs(s) => (s.m > 1).then(|| BasicRep::spehcs(s.m - 1, s.k, s.s.clone(), s.t.clone())),
    }
}

/// Associated partition of a product: the induced sum adds the i-th parts
/// of the factor partitions `part^count`.
fn oracle_partition(e: &RepExpr) -> Partition {
    let rows = e.factors.iter().map(|f| shape(f).1).max().unwrap_or(0);
    let mut parts = vec![0usize; rows];
    for f in &e.factors {
        let (part, count) = shape(f);
        for p in parts.iter_mut().take(count) {
            *p += part;
        }
    }
    Partition::new(parts).unwrap()
}

fn criterion_1() -> Check {
    let start = Instant::now();
    let mut count = 0;
    for field in [Field::Real, Field::Complex] {
        for f in catalogue(field, &CatalogueParams::default()) {
            let e = RepExpr::single(field, f.clone());
            let (part, m) = shape(&f);
            let ap = e.associated_partition().map_err(|x| x.to_string())?;
            ensure(ap.parts() == vec![part; m].as_slice(), || {
                format!("AP({e}) = {ap}")
            })?;
            ensure(e.depth().ok() == Some(part), || format!("depth({e})"))?;
            let want = RepExpr::new(field, adduced(&f).into_iter().collect());
            let got = adduce(&e).map_err(|x| x.to_string())?;
            ensure(got == want, || format!("adduce({e}) = {got}, expected {want}"))?;
            count += 1;
        }
    }
    let t = within(start, CATALOGUE_BUDGET)?;
    Ok(format!("{count} catalogue factors in {t:?}"))
}

fn criterion_2() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let params = CatalogueParams::default();
    let mut largest = 0;
    for i in 0..PRODUCTS {
        let field = if i % 2 == 0 { Field::Real } else { Field::Complex };
        let e = random_product(&mut rng, field, MAX_PRODUCT_SIZE, &params);
        largest = largest.max(e.size());
        ensure(e.size() <= MAX_PRODUCT_SIZE, || format!("{e} too large"))?;
        let ap = e.associated_partition().map_err(|x| x.to_string())?;
        ensure(ap == oracle_partition(&e), || format!("AP({e}) = {ap}"))?;
        let depth: usize = e.factors.iter().map(|f| shape(f).0).sum();
        ensure(e.depth().ok() == Some(depth), || {
            format!("depth({e}) is not additive")
        })?;
        let want = RepExpr::new(field, e.factors.iter().filter_map(adduced).collect());
        let got = adduce(&e).map_err(|x| x.to_string())?;
        ensure(got == want, || format!("adduce({e}) = {got}, expected {want}"))?;
    }
    Ok(format!("{PRODUCTS} products, largest n = {largest}"))
}

fn criterion_3() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED + 3);
    let params = CatalogueParams::default();
    for i in 0..IGEQ_SAMPLES {
        let field = if i % 2 == 0 { Field::Real } else { Field::Complex };
        let e = random_product(&mut rng, field, MAX_PRODUCT_SIZE, &params);
        let depth = e.depth().map_err(|x| x.to_string())?;
        let lhs = igeq(&adduce(&e).map_err(|x| x.to_string())?).map_err(|x| x.to_string())?;
        let rhs =
            derivative_monomial(&igeq(&e).map_err(|x| x.to_string())?, depth).map_err(|x| x.to_string())?;
        ensure(Derivative::Rep(lhs.clone()) == rhs, || {
            format!("{e}: {lhs} vs {rhs}")
        })?;
    }
    Ok(format!("{IGEQ_SAMPLES} expressions"))
}

fn criterion_4() -> Check {
    let (mut one, mut zero, mut unknown) = (0, 0, 0);
    for field in [Field::Real, Field::Complex] {
        for f in catalogue(field, &CatalogueParams::default()) {
            let e = RepExpr::single(field, f.clone());
            let (part, m) = shape(&f);
            let own = Composition::new(vec![part; m]).unwrap();
            let v = whittaker_dim(&e, &own).map_err(|x| x.to_string())?;
            ensure(v == WhittakerDim::One, || format!("{e} at {own}: {v}"))?;
            one += 1;
            for c in Composition::all(e.size()) {
                let v = whittaker_dim(&e, &c).map_err(|x| x.to_string())?;
                let first = c.parts()[0];
                if first > part {
                    ensure(v == WhittakerDim::Zero, || format!("{e} at {c}: {v}"))?;
                    zero += 1;
                } else if first < part {
                    ensure(matches!(v, WhittakerDim::Unknown(_)), || {
                        format!("{e} at {c}: {v}")
                    })?;
                    unknown += 1;
                }
            }
        }
    }
    Ok(format!("{one} One, {zero} Zero, {unknown} Unknown"))
}

fn criterion_5() -> Check {
    let start = Instant::now();
    let mut samples = 0;
    for n in 1..=MAX_MATRIX {
        for d in 1..=n {
            let r = linalg_run(n, d, SEED + (n * 10 + d) as u64, LINALG_RANDOM).map_err(|x| x.to_string())?;
            ensure(r.passed(), || format!("n={n} d={d}: {:?}", r.failures))?;
            ensure(r.samples == 3usize.pow((n - d) as u32) + LINALG_RANDOM, || {
                format!("n={n} d={d}: {} samples", r.samples)
            })?;
            samples += r.samples;
        }
    }
    let t = within(start, LINALG_BUDGET)?;
    Ok(format!("{samples} vectors in {t:?}"))
}

fn jordan_matrix(lambda: &Partition) -> ExactMatrix {
    let blocks: Vec<ExactMatrix> = lambda
        .parts()
        .iter()
        .map(|&p| ExactMatrix::jordan_block(p))
        .collect();
    ExactMatrix::block_diagonal(&blocks)
}

fn criterion_6() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED + 6);
    for _ in 0..JORDAN_SAMPLES {
        let n = rng.gen_range(1..=MAX_MATRIX);
        let all: Vec<Partition> = Partition::all(n).collect();
        let lambda = all.choose(&mut rng).unwrap().clone();
        let p = random_invertible(&mut rng, n);
        let a = jordan_matrix(&lambda)
            .conjugate_by(&p)
            .map_err(|x| x.to_string())?;
        let got = jordan_partition(&a).map_err(|x| x.to_string())?;
        ensure(got == lambda, || format!("expected {lambda}, got {got}"))?;
        let t = lambda.transpose();
        let mut power = ExactMatrix::identity(n);
        let mut prev = n;
        for k in 1..=lambda.largest() {
            power = &power * &a;
            let r = power.rank();
            ensure(t.parts()[k - 1] == prev - r, || {
                format!("{lambda}: rank drop at k={k}")
            })?;
            prev = r;
        }
        ensure(prev == 0, || format!("{lambda}: A^{} != 0", lambda.largest()))?;
    }
    Ok(format!("{JORDAN_SAMPLES} conjugates, n <= {MAX_MATRIX}"))
}

fn criterion_7() -> Check {
    let mut cases = 0;
    let mut negatives = 0;
    for n in 2..=MAX_MATRIX {
        for d in 2..=n {
            let b = build_bigrading(n, d).map_err(|x| x.to_string())?;
            let r = check_condition(&b).map_err(|x| x.to_string())?;
            ensure(r.passed(), || format!("n={n} d={d}: {r}"))?;
            let a01: Vec<(usize, usize)> = (0..n - d).map(|i| (i, n - d)).collect();
            ensure(b.block(0, 1) == a01.as_slice(), || {
                format!("n={n} d={d}: a(0,1) = {:?}", b.block(0, 1))
            })?;
            let psi = psi_tail(n, d - 1).map_err(|x| x.to_string())?;
            let support: Vec<(usize, usize)> = psi.support().into_iter().map(|(a, c, _)| (a, c)).collect();
            ensure(b.block(1, 0) == support.as_slice(), || {
                format!("n={n} d={d}: a(1,0) = {:?}", b.block(1, 0))
            })?;
            cases += 1;
            if d < n {
                let u = build_unshifted(n, d).map_err(|x| x.to_string())?;
                let xi = XiCharacter::psi_tail(n, d).map_err(|x| x.to_string())?;
                let r = check_condition_with(&u, &xi).map_err(|x| x.to_string())?;
                ensure(!r.passed(), || {
                    format!("unshifted n={n} d={d} unexpectedly passed")
                })?;
                negatives += 1;
            }
        }
    }
    Ok(format!(
        "{cases} bigradings pass, {negatives} unshifted variants fail as expected"
    ))
}

fn criterion_8() -> Check {
    let start = Instant::now();
    let r = verify_keylemma_premises(PBW_MAX_N, PBW_MAX_DEGREE).map_err(|x| x.to_string())?;
    ensure(r.passed(), || format!("{:?}", r.failures))?;
    let t = within(start, PBW_BUDGET)?;
    Ok(format!(
        "{} cases, {} monomials, {} relevant in {t:?}",
        r.cases, r.monomials, r.relevant
    ))
}

/// Word-level normal ordering in the algebra with `IX = XI + X`: returns
/// coefficients of `X^a I^b`.
fn normal_order(words: BTreeMap<Vec<u8>, i64>) -> BTreeMap<(usize, usize), i64> {
    let mut pending: Vec<(Vec<u8>, i64)> = words.into_iter().collect();
    let mut out: BTreeMap<(usize, usize), i64> = BTreeMap::new();
    while let Some((w, c)) = pending.pop() {
        if c == 0 {
            continue;
        }
        match w.windows(2).position(|p| p == b"IX") {
            Some(i) => {
                let mut swapped = w.clone();
                swapped.swap(i, i + 1);
                let mut shorter = w.clone();
                shorter.remove(i);
                pending.push((swapped, c));
                pending.push((shorter, c));
            }
            None => {
                let a = w.iter().filter(|&&l| l == b'X').count();
                *out.entry((a, w.len() - a)).or_default() += c;
            }
        }
    }
    out.retain(|_, c| *c != 0);
    out
}

fn criterion_9() -> Check {
    for k in 1..=AD_MAX_K {
        let r = ad_power_identity(k);
        ensure(r.passed, || format!("k={k}: {:?}", r.values))?;
        for m in 0..=k as usize {
            let mut words: BTreeMap<Vec<u8>, i64> = BTreeMap::from([(vec![b'I'; m], 1)]);
            for _ in 0..k {
                let mut next = BTreeMap::new();
                for (w, c) in words {
                    let mut left = vec![b'X'];
                    left.extend(&w);
                    let mut right = w.clone();
                    right.push(b'X');
                    *next.entry(left).or_insert(0) += c;
                    *next.entry(right).or_insert(0) -= c;
                }
                words = next;
            }
            let got = normal_order(words);
            let mut want = BTreeMap::new();
            if m == k as usize {
                let factorial: i64 = (1..=k as i64).product();
                let sign = if k % 2 == 0 { 1 } else { -1 };
                want.insert((k as usize, 0), sign * factorial);
            }
            ensure(got == want, || format!("k={k} m={m}: oracle gives {got:?}"))?;
        }
    }
    Ok(format!("k <= {AD_MAX_K}, all m <= k"))
}

fn criterion_10() -> Check {
    let s = filtration_trials(SEED + 10, FILTRATION_TRIALS, MAX_MATRIX).map_err(|x| x.to_string())?;
    ensure(s.passed(), || format!("{:?}", s.failures))?;
    Ok(format!("{} trials, ambient <= {MAX_MATRIX}", s.trials))
}

fn run_json(args: &[&str]) -> Result<Vec<u8>, String> {
    let out = Command::new(env!("CARGO_BIN_EXE_adduce"))
        .args(args)
        .arg("--json")
        .output()
        .map_err(|e| e.to_string())?;
    ensure(out.status.success(), || {
        format!("{args:?}: {}", String::from_utf8_lossy(&out.stderr))
    })?;
    Ok(out.stdout)
}

/// Re-spaces a printed expression so the parser sees varied layouts.
fn jitter(text: &str, rng: &mut ChaCha8Rng) -> String {
    let mut out = String::new();
    for ch in text.chars() {
        out.push(ch);
        if matches!(ch, ',' | ';' | '(') && rng.gen_bool(0.3) {
            out.push(' ');
        }
    }
    out
}

fn criterion_11() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED + 11);
    let params = CatalogueParams::default();
    for i in 0..ROUND_TRIPS {
        let field = if i % 2 == 0 { Field::Real } else { Field::Complex };
        let e = random_product(&mut rng, field, MAX_PRODUCT_SIZE, &params);
        let printed = e.to_string();
        let back = parse_expr(&printed, field).map_err(|x| format!("{printed}: {x}"))?;
        ensure(back == e, || format!("round trip changed {printed}"))?;
        let spaced = jitter(&printed, &mut rng);
        let back = parse_expr(&spaced, field).map_err(|x| format!("{spaced}: {x}"))?;
        ensure(back == e, || format!("re-spaced round trip changed {spaced}"))?;
    }
    let commands: [&[&str]; 5] = [
        &["verify-filtrations", "--seed", "11"],
        &["verify-linalg", "--n", "6", "--d", "3", "--seed", "11"],
        &["ap", "spehcs(2,3,1/4) x chi(3,0,2*i)"],
        &["whittaker", "speh(2,1)", "--lambda", "1,3"],
        &["bigrade", "--n", "5", "--d", "3"],
    ];
    for args in commands {
        let first = run_json(args)?;
        let second = run_json(args)?;
        ensure(first == second, || {
            format!("{args:?}: output differs between runs")
        })?;
    }
    Ok(format!(
        "{ROUND_TRIPS} round trips, {} commands byte-stable",
        commands.len()
    ))
}

fn main() {
    let criteria: [Criterion; 11] = [
        ("catalogue regression", criterion_1),
        ("multiplicativity and depth additivity", criterion_2),
        ("igeq commutes with adduction", criterion_3),
        ("Whittaker suite", criterion_4),
        ("nilpotency lemma", criterion_5),
        ("Jordan oracle", criterion_6),
        ("bigrading suite", criterion_7),
        ("PBW enumeration", criterion_8),
        ("ad power identity", criterion_9),
        ("filtration suite", criterion_10),
        ("CLI round trip and stability", criterion_11),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        match check() {
            Ok(detail) => println!("PASS {:>2} {name}: {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL {:>2} {name}: {why}", i + 1);
            }
        }
    }
    println!(
        "acceptance: {} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
