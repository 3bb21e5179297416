use std::collections::BTreeMap;
use std::fmt;

use num_traits::ToPrimitive;

use crate::error::{Error, Result};
use crate::matrixlab::{psi_tail, ExactMatrix, LinearFunctional};
use crate::scalar::ExactComplex;

/// Sign convention turning `[H, E_ab] = (h_a - h_b) E_ab` into a weight.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum WeightConvention {
    /// The eigenvalue of `[H, Z]` as written.
    Literal,
    /// Its negative, `h_b - h_a`: the eigenvalue of `[Z, H]`.
    Transposed,
}

/// A matrix unit `E_ab`, 0-based.
pub type Unit = (usize, usize);

/// `gl(n)` with the bigrading defined by two commuting diagonal elements.
#[derive(Clone, Debug)]
pub struct BigradedBasis {
    pub n: usize,
    pub d: usize,
    pub x: Vec<i64>,
    pub y: Vec<i64>,
    pub convention: WeightConvention,
    weights: Vec<(i64, i64)>,
    blocks: BTreeMap<(i64, i64), Vec<Unit>>,
    order: Vec<Unit>,
    position: Vec<usize>,
}

/// Groups 1-4 of the weight pairs, in descending order.
///
/// Group 1: `i >= 2` or `(1, j >= 1)`. Group 2: `(1,0)` and `(0,1)`.
/// Group 3: `(0,0)` and `(0,-1)`. Group 4: `i <= -1`. Other pairs get `None`.
pub fn group_of(w: (i64, i64)) -> Option<usize> {
    match w {
        (i, _) if i >= 2 => Some(1),
        (1, j) if j >= 1 => Some(1),
        (1, 0) | (0, 1) => Some(2),
        (0, 0) | (0, -1) => Some(3),
        (i, _) if i <= -1 => Some(4),
        _ => None,
    }
}

fn eigenvalue(h: &ExactMatrix, n: usize, a: usize, b: usize) -> Result<i64> {
    let unit = ExactMatrix::unit(n, a, b);
    let c = h.bracket(&unit)?;
    let lambda = c.get(a, b).clone();
    if c != unit.scale(&lambda) {
        return Err(Error::domain(format!(
            "E{},{} is not an eigenvector",
            a + 1,
            b + 1
        )));
    }
    if !lambda.is_real() || !lambda.re.is_integer() {
        return Err(Error::domain("eigenvalues must be integers"));
    }
    lambda
        .re
        .to_integer()
        .to_i64()
        .ok_or_else(|| Error::domain("eigenvalue out of range"))
}

fn diag(v: &[i64]) -> ExactMatrix {
    let entries: Vec<ExactComplex> = v.iter().map(|&x| ExactComplex::from_int(x)).collect();
    ExactMatrix::diagonal(&entries)
}

impl BigradedBasis {
    /// Bigrading from diagonal entries of `X` and `Y`, weights computed from
    /// the brackets `[X, E_ab]`, `[Y, E_ab]`.
    pub fn from_diagonals(d: usize, x: Vec<i64>, y: Vec<i64>, convention: WeightConvention) -> Result<Self> {
        let n = x.len();
        if n == 0 || y.len() != n {
            return Err(Error::domain("X and Y must be nonempty diagonals of equal size"));
        }
        let (hx, hy) = (diag(&x), diag(&y));
        let sign = match convention {
            WeightConvention::Literal => 1,
            WeightConvention::Transposed => -1,
        };
        let mut weights = Vec::with_capacity(n * n);
        let mut blocks: BTreeMap<(i64, i64), Vec<Unit>> = BTreeMap::new();
        for a in 0..n {
            for b in 0..n {
                let w = (sign * eigenvalue(&hx, n, a, b)?, sign * eigenvalue(&hy, n, a, b)?);
                weights.push(w);
                blocks.entry(w).or_default().push((a, b));
            }
        }
        let order: Vec<Unit> = blocks.values().rev().flatten().copied().collect();
        let mut position = vec![0; n * n];
        for (p, &(a, b)) in order.iter().enumerate() {
            position[a * n + b] = p;
        }
        Ok(BigradedBasis {
            n,
            d,
            x,
            y,
            convention,
            weights,
            blocks,
            order,
            position,
        })
    }

    pub fn weight(&self, u: Unit) -> (i64, i64) {
        self.weights[u.0 * self.n + u.1]
    }

    /// Position of `u` in the global order `B`.
    pub fn position(&self, u: Unit) -> usize {
        self.position[u.0 * self.n + u.1]
    }

    /// The global order: blocks in descending lexicographic order of weight.
    pub fn order(&self) -> &[Unit] {
        &self.order
    }

    pub fn block(&self, i: i64, j: i64) -> &[Unit] {
        self.blocks.get(&(i, j)).map_or(&[], Vec::as_slice)
    }

    /// Nonempty blocks in ascending order of weight.
    pub fn blocks(&self) -> impl Iterator<Item = ((i64, i64), &[Unit])> {
        self.blocks.iter().map(|(w, v)| (*w, v.as_slice()))
    }

    /// `N_s`: units of `X`-weight at least `s`.
    pub fn n_s(&self, s: i64) -> Vec<Unit> {
        self.order
            .iter()
            .copied()
            .filter(|&u| self.weight(u).0 >= s)
            .collect()
    }

    pub fn group(&self, u: Unit) -> Option<usize> {
        group_of(self.weight(u))
    }
}

/// The bigrading of `gl(n)` with `X = diag(0^{n-d+1}, 1, ..., d-1)`,
/// `Y = diag(0^{n-d}, 1^d)` and transposed weights.
///
/// Then `N_1` is the strictly upper part of the last `d-1` columns,
/// `a_{1,0}` is the superdiagonal of the last `d` rows and columns, and
/// `a_{0,1}` is column `n-d+1` above the diagonal block.
pub fn build_bigrading(n: usize, d: usize) -> Result<BigradedBasis> {
    if d == 0 || d > n {
        return Err(Error::domain(format!("need 1 <= d <= n, got n = {n}, d = {d}")));
    }
    let mut x = vec![0; n - d + 1];
    x.extend(1..d as i64);
    let mut y = vec![0; n - d];
    y.extend(std::iter::repeat_n(1, d));
    BigradedBasis::from_diagonals(d, x, y, WeightConvention::Transposed)
}

/// The bigrading with `X = diag(0^{n-d}, 1, ..., d)`,
/// `Y = diag(0^{n-d-1}, 1^{d+1})` and literal weights. Requires `d < n`.
pub fn build_unshifted(n: usize, d: usize) -> Result<BigradedBasis> {
    if d == 0 || d >= n {
        return Err(Error::domain(format!("need 1 <= d < n, got n = {n}, d = {d}")));
    }
    let mut x = vec![0; n - d];
    x.extend(1..=d as i64);
    let mut y = vec![0; n - d - 1];
    y.extend(std::iter::repeat_n(1, d + 1));
    BigradedBasis::from_diagonals(d, x, y, WeightConvention::Literal)
}

/// A functional on `N_1` given by its values on matrix units.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct XiCharacter {
    functional: LinearFunctional,
}

impl XiCharacter {
    /// Value `1` on every unit of `a_{1,0}`.
    pub fn standard(b: &BigradedBasis) -> Self {
        XiCharacter {
            functional: LinearFunctional::indicator(b.n, b.block(1, 0)),
        }
    }

    /// `sum_j Z_{j,j+1}` over the last `k` superdiagonal positions.
    pub fn psi_tail(n: usize, k: usize) -> Result<Self> {
        Ok(XiCharacter {
            functional: psi_tail(n, k)?,
        })
    }

    pub fn from_functional(functional: LinearFunctional) -> Self {
        XiCharacter { functional }
    }

    pub fn functional(&self) -> &LinearFunctional {
        &self.functional
    }

    pub fn value(&self, u: Unit) -> &ExactComplex {
        self.functional.on_unit(u.0, u.1)
    }

    pub fn on_matrix(&self, z: &ExactMatrix) -> Result<ExactComplex> {
        self.functional.evaluate(z)
    }

    /// `xi([E_u, E_v])`.
    pub fn on_bracket(&self, n: usize, u: Unit, v: Unit) -> Result<ExactComplex> {
        let c = ExactMatrix::unit(n, u.0, u.1).bracket(&ExactMatrix::unit(n, v.0, v.1))?;
        self.on_matrix(&c)
    }
}

/// Outcome of checking the standing assumptions on a bigrading and `xi`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ConditionReport {
    pub checks: usize,
    pub violations: Vec<String>,
}

impl ConditionReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    fn check(&mut self, ok: bool, msg: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            self.violations.push(msg());
        }
    }
}

impl fmt::Display for ConditionReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.passed() {
            write!(f, "pass ({} checks)", self.checks)
        } else {
            write!(f, "fail: {}", self.violations.join("; "))
        }
    }
}

fn unit_name(u: Unit) -> String {
    format!("E{},{}", u.0 + 1, u.1 + 1)
}

/// Checks the assumptions with the standard `xi`.
pub fn check_condition(b: &BigradedBasis) -> Result<ConditionReport> {
    check_condition_with(b, &XiCharacter::standard(b))
}

/// Checks:
/// * blocks only occur for `j` in `{-1, 0, 1}`;
/// * `a_{1,-1}` is empty;
/// * `xi` vanishes outside `a_{1,0}` (in particular outside `N_1`);
/// * `xi` is a character of `N_1`: `xi([A, B]) = 0` for `A, B` in `N_1`;
/// * `xi([A, B]) = 0` for `A` in `a_{0,1}`, `B` in `N_1`.
pub fn check_condition_with(b: &BigradedBasis, xi: &XiCharacter) -> Result<ConditionReport> {
    let mut report = ConditionReport::default();
    for ((i, j), units) in b.blocks() {
        report.check((-1..=1).contains(&j), || {
            format!(
                "block ({i},{j}) is nonempty ({} elements) with j outside -1..1",
                units.len()
            )
        });
    }
    report.check(b.block(1, -1).is_empty(), || "a_(1,-1) is nonempty".to_string());
    for (a, c, v) in xi.functional().support() {
        let w = b.weight((a, c));
        report.check(w == (1, 0), || {
            format!(
                "xi({}) = {v} but {} has weight {w:?}",
                unit_name((a, c)),
                unit_name((a, c))
            )
        });
    }
    let n1 = b.n_s(1);
    for (p, &u) in n1.iter().enumerate() {
        for &v in &n1[p + 1..] {
            let value = xi.on_bracket(b.n, u, v)?;
            report.check(value.is_zero(), || {
                format!("xi([{}, {}]) = {value} on N_1", unit_name(u), unit_name(v))
            });
        }
    }
    for &u in b.block(0, 1) {
        for &v in &n1 {
            let value = xi.on_bracket(b.n, u, v)?;
            report.check(value.is_zero(), || {
                format!(
                    "xi([{}, {}]) = {value} with the first in a_(0,1)",
                    unit_name(u),
                    unit_name(v)
                )
            });
        }
    }
    Ok(report)
}

/// Whether the unit `z` of `a_0` stabilizes `xi`: `xi([z, B]) = 0` for all
/// `B` in `N_1`.
pub fn stabilizes(b: &BigradedBasis, xi: &XiCharacter, z: Unit) -> Result<bool> {
    for v in b.n_s(1) {
        if !xi.on_bracket(b.n, z, v)?.is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn weights_for_three_two() {
        let b = build_bigrading(3, 2).unwrap();
        assert_eq!(b.weight((0, 1)), (0, 1));
        assert_eq!(b.weight((0, 2)), (1, 1));
        assert_eq!(b.weight((1, 2)), (1, 0));
        for i in 0..3 {
            assert_eq!(b.weight((i, i)), (0, 0));
        }
        let xi = XiCharacter::standard(&b);
        assert!(xi.on_bracket(3, (0, 1), (1, 2)).unwrap().is_zero());
        assert!(check_condition(&b).unwrap().passed());
    }

    #[test]
    fn block_shapes() {
        for n in 1..=6 {
            for d in 1..=n {
                let b = build_bigrading(n, d).unwrap();
                let a10: Vec<Unit> = (n - d..n - 1).map(|j| (j, j + 1)).collect();
                assert_eq!(b.block(1, 0), a10.as_slice());
                let a01: Vec<Unit> = (0..n - d).map(|i| (i, n - d)).collect();
                assert_eq!(b.block(0, 1), a01.as_slice());
                let mut n1: Vec<Unit> = b.n_s(1);
                n1.sort();
                let mut want: Vec<Unit> = (0..n)
                    .flat_map(|a| (n - d + 1..n).map(move |c| (a, c)))
                    .filter(|&(a, c)| a < c)
                    .collect();
                want.sort();
                assert_eq!(n1, want, "n={n} d={d}");
                assert_eq!(b.order().len(), n * n);
            }
        }
        let full = build_bigrading(4, 4).unwrap();
        assert_eq!(full.y, vec![1, 1, 1, 1]);
        assert!(full.block(0, 1).is_empty());
        assert!(build_bigrading(3, 0).is_err() && build_bigrading(3, 4).is_err());
    }

    #[test]
    fn global_order_is_descending() {
        let b = build_bigrading(4, 2).unwrap();
        assert!(b.block(1, -1).is_empty());
        let ws: Vec<(i64, i64)> = b.order().iter().map(|&u| b.weight(u)).collect();
        assert!(ws.windows(2).all(|w| w[0] >= w[1]));
    }

    #[test]
    fn unshifted_literal_fails() {
        let b = build_unshifted(4, 2).unwrap();
        let xi = XiCharacter::psi_tail(4, 2).unwrap();
        let report = check_condition_with(&b, &xi).unwrap();
        assert!(!report.passed());
    }

    #[test]
    fn groups() {
        assert_eq!(group_of((2, -1)), Some(1));
        assert_eq!(group_of((1, 1)), Some(1));
        assert_eq!(group_of((1, 0)), Some(2));
        assert_eq!(group_of((0, 1)), Some(2));
        assert_eq!(group_of((0, -1)), Some(3));
        assert_eq!(group_of((-1, 1)), Some(4));
        assert_eq!(group_of((1, -1)), None);
        assert_eq!(group_of((0, 2)), None);
    }
}
