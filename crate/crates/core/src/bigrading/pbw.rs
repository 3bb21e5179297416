use std::fmt;

use itertools::Itertools;

use super::basis::{stabilizes, BigradedBasis, Unit, WeightConvention, XiCharacter};
use crate::error::{Error, Result};
use crate::matrixlab::{depth_of_functional, ExactMatrix, LinearFunctional};
use crate::scalar::ExactComplex;

/// An ordered monomial `Z_1 ... Z_k` in the enveloping algebra, factors
/// following the global order of the basis.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PBWMonomial {
    factors: Vec<Unit>,
}

impl PBWMonomial {
    pub fn new(b: &BigradedBasis, factors: Vec<Unit>) -> Result<Self> {
        for &(a, c) in &factors {
            if a >= b.n || c >= b.n {
                return Err(Error::domain(format!(
                    "E{},{} is outside gl({})",
                    a + 1,
                    c + 1,
                    b.n
                )));
            }
        }
        if let Some(p) = factors
            .windows(2)
            .position(|w| b.position(w[0]) > b.position(w[1]))
        {
            return Err(Error::domain(format!(
                "factors {} and {} are out of PBW order",
                p + 1,
                p + 2
            )));
        }
        Ok(PBWMonomial { factors })
    }

    /// Sorts the factors into PBW order.
    pub fn sorted(b: &BigradedBasis, mut factors: Vec<Unit>) -> Result<Self> {
        factors.sort_by_key(|&u| b.position(u));
        Self::new(b, factors)
    }

    pub fn factors(&self) -> &[Unit] {
        &self.factors
    }

    pub fn degree(&self) -> usize {
        self.factors.len()
    }

    /// Sum of factor weights.
    pub fn weight(&self, b: &BigradedBasis) -> (i64, i64) {
        self.factors.iter().fold((0, 0), |acc, &u| {
            let w = b.weight(u);
            (acc.0 + w.0, acc.1 + w.1)
        })
    }
}

impl fmt::Display for PBWMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return write!(f, "1");
        }
        let words: Vec<String> = self
            .factors
            .iter()
            .map(|&(a, c)| format!("E{},{}", a + 1, c + 1))
            .collect();
        write!(f, "{}", words.join("*"))
    }
}

/// Relevance verdict with per-group factor counts.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Classification {
    pub relevant: bool,
    /// Factor counts for groups 1-4.
    pub histogram: [usize; 4],
    /// Factors whose weight lies in no group.
    pub ungrouped: usize,
    /// Factors from `a_{1,0}`.
    pub k: usize,
    /// Factors from `a_{0,1}`.
    pub l: usize,
}

/// Relevant iff the degree is `n_deg` and every factor lies in
/// `a_{1,0}` or `a_{0,1}`.
pub fn classify_monomial(b: &BigradedBasis, t: &PBWMonomial, n_deg: usize) -> Classification {
    let mut histogram = [0; 4];
    let mut ungrouped = 0;
    let (mut k, mut l) = (0, 0);
    for &u in t.factors() {
        match b.group(u) {
            Some(g) => histogram[g - 1] += 1,
            None => ungrouped += 1,
        }
        match b.weight(u) {
            (1, 0) => k += 1,
            (0, 1) => l += 1,
            _ => {}
        }
    }
    Classification {
        relevant: t.degree() == n_deg && k + l == t.degree(),
        histogram,
        ungrouped,
        k,
        l,
    }
}

/// Image of a monomial under `Xi`: a scalar times a monomial in `a_0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct XiImage {
    pub scalar: ExactComplex,
    pub factors: Vec<Unit>,
}

impl XiImage {
    pub fn is_zero(&self) -> bool {
        self.scalar.is_zero()
    }
}

impl fmt::Display for XiImage {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut words = vec![self.scalar.to_string()];
        words.extend(self.factors.iter().map(|&(a, c)| format!("E{},{}", a + 1, c + 1)));
        write!(f, "{}", words.join("*"))
    }
}

/// Applies `Xi`: factors in `N_1` become their `xi`-values, factors in the
/// stabilizer of `xi` in `a_0` are kept.
///
/// Stabilizer membership is tested per matrix unit.
pub fn xi_apply(b: &BigradedBasis, xi: &XiCharacter, s: &PBWMonomial) -> Result<XiImage> {
    let mut scalar = ExactComplex::one();
    let mut factors = Vec::new();
    for &u in s.factors() {
        let (i, _) = b.weight(u);
        if i >= 1 {
            scalar = &scalar * xi.value(u);
        } else if i == 0 && stabilizes(b, xi, u)? {
            factors.push(u);
        } else {
            return Err(Error::domain(format!(
                "E{},{} lies outside the stabilizer of xi plus N_1",
                u.0 + 1,
                u.1 + 1
            )));
        }
    }
    if scalar.is_zero() {
        factors.clear();
    }
    Ok(XiImage { scalar, factors })
}

/// The degree-`degree` symbol of `s` paired with `f`: the product of the
/// factor values when `s` has exactly `degree` factors, else `0`.
pub fn evaluate_symbol(s: &PBWMonomial, f: &LinearFunctional, degree: usize) -> ExactComplex {
    if s.degree() != degree {
        return ExactComplex::zero();
    }
    let mut out = ExactComplex::one();
    for &(a, c) in s.factors() {
        out = &out * f.on_unit(a, c);
        if out.is_zero() {
            break;
        }
    }
    out
}

/// `phi + xi` with `phi` given by its values on `a_{0,1}` (in block order).
pub fn key_functional(b: &BigradedBasis, xi: &XiCharacter, phi: &[ExactComplex]) -> Result<LinearFunctional> {
    let a01 = b.block(0, 1);
    if phi.len() != a01.len() {
        return Err(Error::domain(format!(
            "phi needs {} values on a_(0,1), got {}",
            a01.len(),
            phi.len()
        )));
    }
    let mut dual = ExactMatrix::zeros(b.n, b.n);
    for (&(a, c), v) in a01.iter().zip(phi) {
        dual.set(c, a, v.clone());
    }
    xi.functional().add(&LinearFunctional::from_dual(dual)?)
}

/// Whether `depth(phi + xi) = d` exactly when `phi = 0`.
pub fn key_depth_consistent(b: &BigradedBasis, xi: &XiCharacter, phi: &[ExactComplex]) -> Result<bool> {
    let f = key_functional(b, xi, phi)?;
    let depth = depth_of_functional(&f)?;
    let phi_zero = phi.iter().all(ExactComplex::is_zero);
    Ok((depth == b.d) == phi_zero)
}

/// Weight of a monomial from the derivation `ad H` applied factor by
/// factor, each `[H, Z_i]` computed as a matrix bracket.
pub fn ad_weight(b: &BigradedBasis, t: &PBWMonomial) -> Result<(i64, i64)> {
    let sign = match b.convention {
        WeightConvention::Literal => 1,
        WeightConvention::Transposed => -1,
    };
    let hx = diag(&b.x);
    let hy = diag(&b.y);
    let mut total = (0, 0);
    for &(a, c) in t.factors() {
        let z = ExactMatrix::unit(b.n, a, c);
        let ex = hx.bracket(&z)?.get(a, c).clone();
        let ey = hy.bracket(&z)?.get(a, c).clone();
        total.0 += sign * to_int(&ex)?;
        total.1 += sign * to_int(&ey)?;
    }
    Ok(total)
}

fn diag(v: &[i64]) -> ExactMatrix {
    let entries: Vec<ExactComplex> = v.iter().map(|&x| ExactComplex::from_int(x)).collect();
    ExactMatrix::diagonal(&entries)
}

fn to_int(x: &ExactComplex) -> Result<i64> {
    use num_traits::ToPrimitive;
    if !x.is_real() || !x.re.is_integer() {
        return Err(Error::domain(format!("{x} is not an integer")));
    }
    x.re.to_integer()
        .to_i64()
        .ok_or_else(|| Error::domain("integer out of range"))
}

/// All PBW monomials of degree `1..=max_degree`.
pub fn enumerate_monomials(b: &BigradedBasis, max_degree: usize) -> impl Iterator<Item = PBWMonomial> + '_ {
    (1..=max_degree).flat_map(move |deg| {
        b.order()
            .iter()
            .copied()
            .combinations_with_replacement(deg)
            .map(|factors| PBWMonomial { factors })
    })
}

/// Outcome of the exhaustive monomial checks.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct KeyLemmaReport {
    pub cases: usize,
    pub monomials: usize,
    pub relevant: usize,
    pub failures: Vec<String>,
}

impl KeyLemmaReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// For every `1 <= d <= n <= max_n` and every monomial of degree at most
/// `max_degree`, checks:
/// * the derivation weight equals the block weight;
/// * a relevant monomial of degree `n_deg` has weight `(k, l)` with
///   `k + l = n_deg` and exactly `k` factors from `a_{1,0}`;
/// * an irrelevant monomial with `X`-weight `k`, no group-1 factor and a
///   group-4 factor has at least `k + 1` factors from `a_{1,0}`.
///
/// `n_deg` is `max_degree`; the standard `xi` must also pass
/// [`super::check_condition`] and the depth cross-check on `phi + xi`.
pub fn verify_keylemma_premises(max_n: usize, max_degree: usize) -> Result<KeyLemmaReport> {
    let mut report = KeyLemmaReport::default();
    for n in 1..=max_n {
        for d in 1..=n {
            let b = super::build_bigrading(n, d)?;
            report.cases += 1;
            let cond = super::check_condition(&b)?;
            if !cond.passed() {
                report.failures.push(format!("n={n} d={d}: {cond}"));
            }
            let xi = XiCharacter::standard(&b);
            let len = b.block(0, 1).len();
            let zero = vec![ExactComplex::zero(); len];
            let mut phis = vec![zero];
            for i in 0..len {
                let mut e = vec![ExactComplex::zero(); len];
                e[i] = ExactComplex::from_int(1);
                phis.push(e);
            }
            for phi in &phis {
                if !key_depth_consistent(&b, &xi, phi)? {
                    report
                        .failures
                        .push(format!("n={n} d={d}: depth of phi+xi inconsistent"));
                }
            }
            for t in enumerate_monomials(&b, max_degree) {
                report.monomials += 1;
                check_monomial(&b, &t, max_degree, &mut report)?;
            }
        }
    }
    Ok(report)
}

fn check_monomial(
    b: &BigradedBasis,
    t: &PBWMonomial,
    n_deg: usize,
    report: &mut KeyLemmaReport,
) -> Result<()> {
    let tag = || format!("n={} d={} T={t}", b.n, b.d);
    let w = t.weight(b);
    if ad_weight(b, t)? != w {
        report
            .failures
            .push(format!("{}: derivation weight differs", tag()));
    }
    let c = classify_monomial(b, t, n_deg);
    if c.relevant {
        report.relevant += 1;
        let (k, l) = w;
        let ok = k >= 0 && l >= 0 && (k + l) as usize == n_deg && c.k as i64 == k;
        if !ok {
            report
                .failures
                .push(format!("{}: relevant monomial has weight {w:?}", tag()));
        }
    } else if c.histogram[0] == 0 && c.histogram[3] > 0 && (c.k as i64) < w.0 + 1 {
        report.failures.push(format!(
            "{}: X-weight {} but only {} factors from a_(1,0)",
            tag(),
            w.0,
            c.k
        ));
    }
    Ok(())
}
