//! Representation expressions: Bernstein-Zelevinsky products of the basic
//! unitary representations of `GL(n,R)` or `GL(n,C)`.
//!
//! An expression is an ordered list of basic factors over a fixed field.
//! The empty list is the trivial representation of `G_0`. Factor order is
//! preserved; products only commute in the Grothendieck group, which
//! [`RepExpr::grothendieck_equal`] compares.
//!
//! Each basic family implements [`BasicFactor`], which carries its size,
//! associated partition, adduced factor and attached characters.

mod catalogue;
mod parse;

use std::fmt;

use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::partitions::{induced_sum, Partition};
use crate::scalar::{fmt_rational, rat, ExactComplex, Rational};

pub use catalogue::{catalogue, random_product, CatalogueParams};
pub use parse::parse_expr;

/// The base field of `GL(n, F)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Field {
    Real,
    Complex,
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Field::Real => "R",
            Field::Complex => "C",
        })
    }
}

impl std::str::FromStr for Field {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "R" | "r" | "real" => Ok(Field::Real),
            "C" | "c" | "complex" => Ok(Field::Complex),
            other => Err(Error::parse(
                0,
                format!("unknown field '{other}', expected R or C"),
            )),
        }
    }
}

/// `chi(n, eps, z)`: the character `x -> (det x/|det x|)^eps |det x|^z` of `G_n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CharacterRep {
    pub n: usize,
    pub eps: i64,
    pub z: ExactComplex,
}

/// `stein(m, s; eps, t)`: the Stein complementary series of `G_{2m}`
/// twisted by `chi(2m, eps, i t)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SteinRep {
    pub m: usize,
    pub s: Rational,
    pub eps: i64,
    pub t: Rational,
}

/// `speh(m, k; t)`: the Speh representation `delta(2m, k)` twisted by
/// `chi(2m, 0, i t)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SpehRep {
    pub m: usize,
    pub k: usize,
    pub t: Rational,
}

/// `spehcs(m, k, s; t)`: the Speh complementary series `Delta(4m, k, s)`
/// twisted by `chi(4m, 0, i t)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SpehCsRep {
    pub m: usize,
    pub k: usize,
    pub s: Rational,
    pub t: Rational,
}

/// Behaviour shared by the basic unitary families.
pub trait BasicFactor {
    /// Size `n` of the group `G_n` the factor lives on.
    fn size(&self) -> usize;

    fn associated_partition(&self) -> Partition;

    /// The adduced factor, or `None` when it lives on `G_0`.
    fn adduce(&self) -> Option<BasicRep>;

    /// Characters whose product contains this factor as its unique
    /// subquotient of maximal annihilator variety, in attachment order.
    fn attached_characters(&self) -> Vec<CharacterRep>;

    /// Appends parameter-range violations to `issues`.
    fn check(&self, field: Field, issues: &mut Vec<String>);
}

fn half_open_s_ok(s: &Rational) -> bool {
    s.is_positive() && *s < rat(1, 2)
}

fn check_eps(field: Field, eps: i64, issues: &mut Vec<String>) {
    if field == Field::Real && !(eps == 0 || eps == 1) {
        issues.push(format!("eps = {eps} is not in Z/2 = {{0,1}} over R"));
    }
}

/// `eps_{k+1}`: the parity of `k + 1`.
pub fn parity_sign(k: usize) -> i64 {
    ((k + 1) % 2) as i64
}

fn half_k(k: usize) -> Rational {
    rat(k as i64, 2)
}

fn twist(re: Rational, t: &Rational) -> ExactComplex {
    ExactComplex::new(re, t.clone())
}

impl CharacterRep {
    pub fn new(n: usize, eps: i64, z: ExactComplex) -> Self {
        CharacterRep { n, eps, z }
    }

    /// Restriction to `G_{n-1}`.
    pub fn restrict(&self) -> Option<CharacterRep> {
        (self.n > 1).then(|| CharacterRep::new(self.n - 1, self.eps, self.z.clone()))
    }
}

impl BasicFactor for CharacterRep {
    fn size(&self) -> usize {
        self.n
    }

    fn associated_partition(&self) -> Partition {
        Partition::rectangle(1, self.n)
    }

    fn adduce(&self) -> Option<BasicRep> {
        self.restrict().map(BasicRep::Character)
    }

    fn attached_characters(&self) -> Vec<CharacterRep> {
        vec![self.clone()]
    }

    fn check(&self, field: Field, issues: &mut Vec<String>) {
        if self.n == 0 {
            issues.push("character of G_0 is not a factor; use the empty product".into());
        }
        check_eps(field, self.eps, issues);
    }
}

impl BasicFactor for SteinRep {
    fn size(&self) -> usize {
        2 * self.m
    }

    fn associated_partition(&self) -> Partition {
        Partition::rectangle(2, self.m)
    }

    fn adduce(&self) -> Option<BasicRep> {
        (self.m > 1).then(|| {
            BasicRep::Stein(SteinRep {
                m: self.m - 1,
                ..self.clone()
            })
        })
    }

    /// The twist by `chi(2m, eps, i t)` restricts to `chi(m, eps, i t)` on
    /// each Levi block.
    fn attached_characters(&self) -> Vec<CharacterRep> {
        vec![
            CharacterRep::new(self.m, self.eps, twist(self.s.clone(), &self.t)),
            CharacterRep::new(self.m, self.eps, twist(-self.s.clone(), &self.t)),
        ]
    }

    fn check(&self, field: Field, issues: &mut Vec<String>) {
        if self.m == 0 {
            issues.push("stein: m must be at least 1".into());
        }
        if !half_open_s_ok(&self.s) {
            issues.push(format!("stein: s = {} is outside (0,1/2)", fmt_rational(&self.s)));
        }
        check_eps(field, self.eps, issues);
    }
}

impl BasicFactor for SpehRep {
    fn size(&self) -> usize {
        2 * self.m
    }

    fn associated_partition(&self) -> Partition {
        Partition::rectangle(2, self.m)
    }

    fn adduce(&self) -> Option<BasicRep> {
        (self.m > 1).then(|| {
            BasicRep::Speh(SpehRep {
                m: self.m - 1,
                ..self.clone()
            })
        })
    }

    fn attached_characters(&self) -> Vec<CharacterRep> {
        let h = half_k(self.k);
        vec![
            CharacterRep::new(self.m, parity_sign(self.k), twist(h.clone(), &self.t)),
            CharacterRep::new(self.m, 0, twist(-h, &self.t)),
        ]
    }

    fn check(&self, field: Field, issues: &mut Vec<String>) {
        if field == Field::Complex {
            issues.push("speh: Speh representations occur only over R".into());
        }
        if self.m == 0 {
            issues.push("speh: m must be at least 1".into());
        }
        if self.k == 0 {
            issues.push("speh: k must be at least 1".into());
        }
    }
}

impl BasicFactor for SpehCsRep {
    fn size(&self) -> usize {
        4 * self.m
    }

    fn associated_partition(&self) -> Partition {
        Partition::rectangle(4, self.m)
    }

    fn adduce(&self) -> Option<BasicRep> {
        (self.m > 1).then(|| {
            BasicRep::SpehCs(SpehCsRep {
                m: self.m - 1,
                ..self.clone()
            })
        })
    }

    fn attached_characters(&self) -> Vec<CharacterRep> {
        let h = half_k(self.k);
        let e = parity_sign(self.k);
        let s = &self.s;
        vec![
            CharacterRep::new(self.m, e, twist(&h + s, &self.t)),
            CharacterRep::new(self.m, 0, twist(-&h + s, &self.t)),
            CharacterRep::new(self.m, e, twist(&h - s, &self.t)),
            CharacterRep::new(self.m, 0, twist(-&h - s, &self.t)),
        ]
    }

    fn check(&self, field: Field, issues: &mut Vec<String>) {
        if field == Field::Complex {
            issues.push("spehcs: Speh complementary series occur only over R".into());
        }
        if self.m == 0 {
            issues.push("spehcs: m must be at least 1".into());
        }
        if self.k == 0 {
            issues.push("spehcs: k must be at least 1".into());
        }
        if !half_open_s_ok(&self.s) {
            issues.push(format!(
                "spehcs: s = {} is outside (0,1/2)",
                fmt_rational(&self.s)
            ));
        }
    }
}

/// One factor of a product.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum BasicRep {
    Character(CharacterRep),
    Stein(SteinRep),
    Speh(SpehRep),
    SpehCs(SpehCsRep),
}

impl BasicRep {
    pub fn chi(n: usize, eps: i64, z: ExactComplex) -> Self {
        BasicRep::Character(CharacterRep::new(n, eps, z))
    }

    pub fn stein(m: usize, s: Rational, eps: i64, t: Rational) -> Self {
        BasicRep::Stein(SteinRep { m, s, eps, t })
    }

    pub fn speh(m: usize, k: usize, t: Rational) -> Self {
        BasicRep::Speh(SpehRep { m, k, t })
    }

    pub fn spehcs(m: usize, k: usize, s: Rational, t: Rational) -> Self {
        BasicRep::SpehCs(SpehCsRep { m, k, s, t })
    }

    pub fn as_factor(&self) -> &dyn BasicFactor {
        match self {
            BasicRep::Character(r) => r,
            BasicRep::Stein(r) => r,
            BasicRep::Speh(r) => r,
            BasicRep::SpehCs(r) => r,
        }
    }

    pub fn as_character(&self) -> Option<&CharacterRep> {
        match self {
            BasicRep::Character(c) => Some(c),
            _ => None,
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            BasicRep::Character(_) => "chi",
            BasicRep::Stein(_) => "stein",
            BasicRep::Speh(_) => "speh",
            BasicRep::SpehCs(_) => "spehcs",
        }
    }
}

impl fmt::Display for BasicRep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BasicRep::Character(c) => write!(f, "chi({},{},{})", c.n, c.eps, c.z),
            BasicRep::Stein(r) => {
                write!(f, "stein({},{}", r.m, fmt_rational(&r.s))?;
                if r.eps != 0 || !r.t.is_zero() {
                    write!(f, ";{},{}", r.eps, fmt_rational(&r.t))?;
                }
                write!(f, ")")
            }
            BasicRep::Speh(r) => {
                write!(f, "speh({},{}", r.m, r.k)?;
                if !r.t.is_zero() {
                    write!(f, ";{}", fmt_rational(&r.t))?;
                }
                write!(f, ")")
            }
            BasicRep::SpehCs(r) => {
                write!(f, "spehcs({},{},{}", r.m, r.k, fmt_rational(&r.s))?;
                if !r.t.is_zero() {
                    write!(f, ";{}", fmt_rational(&r.t))?;
                }
                write!(f, ")")
            }
        }
    }
}

/// Outcome of [`RepExpr::validate`].
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ValidationReport {
    /// `(factor index, message)` for each failed constraint.
    pub issues: Vec<(usize, String)>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.issues.is_empty()
    }

    pub fn summary(&self) -> String {
        self.issues
            .iter()
            .map(|(i, m)| format!("factor {}: {m}", i + 1))
            .collect::<Vec<_>>()
            .join("; ")
    }
}

/// A product `pi_1 x ... x pi_k` of basic factors over one field.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RepExpr {
    pub field: Field,
    pub factors: Vec<BasicRep>,
}

impl RepExpr {
    pub fn new(field: Field, factors: Vec<BasicRep>) -> Self {
        RepExpr { field, factors }
    }

    /// The trivial representation of `G_0` (empty product).
    pub fn trivial(field: Field) -> Self {
        RepExpr::new(field, Vec::new())
    }

    pub fn single(field: Field, factor: BasicRep) -> Self {
        RepExpr::new(field, vec![factor])
    }

    /// Product of characters `chi(n_i, eps_i, z_i)`.
    pub fn monomial(field: Field, chars: impl IntoIterator<Item = CharacterRep>) -> Self {
        RepExpr::new(field, chars.into_iter().map(BasicRep::Character).collect())
    }

    pub fn is_trivial(&self) -> bool {
        self.factors.is_empty()
    }

    /// Total group size `n`.
    pub fn size(&self) -> usize {
        self.factors.iter().map(|f| f.as_factor().size()).sum()
    }

    pub fn is_monomial(&self) -> bool {
        self.factors.iter().all(|f| f.as_character().is_some())
    }

    pub fn validate(&self) -> ValidationReport {
        let mut report = ValidationReport::default();
        for (i, f) in self.factors.iter().enumerate() {
            let mut issues = Vec::new();
            f.as_factor().check(self.field, &mut issues);
            report.issues.extend(issues.into_iter().map(|m| (i, m)));
        }
        report
    }

    pub fn ensure_valid(&self) -> Result<()> {
        let report = self.validate();
        if report.is_valid() {
            Ok(())
        } else {
            Err(Error::domain(format!(
                "invalid expression {self}: {}",
                report.summary()
            )))
        }
    }

    /// Associated partition: the induced sum of the factors' partitions.
    pub fn associated_partition(&self) -> Result<Partition> {
        self.ensure_valid()?;
        let parts: Vec<Partition> = self
            .factors
            .iter()
            .map(|f| f.as_factor().associated_partition())
            .collect();
        Ok(induced_sum(&parts))
    }

    /// Largest part of the associated partition; `0` for the empty product.
    pub fn depth(&self) -> Result<usize> {
        Ok(self.associated_partition()?.largest())
    }

    /// Bernstein-Zelevinsky product: factor lists concatenate.
    pub fn product(&self, other: &RepExpr) -> Result<RepExpr> {
        if self.field != other.field {
            return Err(Error::domain(format!(
                "cannot multiply representations over {} and {}",
                self.field, other.field
            )));
        }
        let mut factors = self.factors.clone();
        factors.extend(other.factors.iter().cloned());
        Ok(RepExpr::new(self.field, factors))
    }

    /// Equality up to permutation of factors.
    pub fn grothendieck_equal(&self, other: &RepExpr) -> bool {
        if self.field != other.field || self.factors.len() != other.factors.len() {
            return false;
        }
        let key = |e: &RepExpr| {
            let mut v: Vec<String> = e.factors.iter().map(|f| f.to_string()).collect();
            v.sort();
            v
        };
        key(self) == key(other)
    }
}

impl fmt::Display for RepExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return write!(f, "triv");
        }
        let words: Vec<String> = self.factors.iter().map(|x| x.to_string()).collect();
        write!(f, "{}", words.join(" x "))
    }
}

/// The two monomial presentations of the Speh representation `delta(2m,k)`:
/// `(quotient presentation, submodule presentation)`.
pub fn speh_presentations(m: usize, k: usize) -> Result<(RepExpr, RepExpr)> {
    if m == 0 || k == 0 {
        return Err(Error::domain("speh presentations need m, k >= 1"));
    }
    let h = half_k(k);
    let e = parity_sign(k);
    let quotient = RepExpr::monomial(
        Field::Real,
        [
            CharacterRep::new(m, e, ExactComplex::real(-h.clone())),
            CharacterRep::new(m, 0, ExactComplex::real(h.clone())),
        ],
    );
    let submodule = RepExpr::monomial(
        Field::Real,
        [
            CharacterRep::new(m, e, ExactComplex::real(h.clone())),
            CharacterRep::new(m, 0, ExactComplex::real(-h)),
        ],
    );
    Ok((quotient, submodule))
}
