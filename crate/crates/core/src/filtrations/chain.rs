use std::fmt;

use rand::Rng;

use super::Subspace;
use crate::error::{Error, Result};
use crate::scalar::{int, parse_rational, Rational};

/// A finite ascending chain `F^0 ⊆ F^1 ⊆ ... ⊆ F^top` in `Q^n`.
///
/// Indices past the end read the top entry.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FiltrationChain {
    ambient: usize,
    steps: Vec<Subspace>,
}

impl FiltrationChain {
    pub fn new(ambient: usize, steps: Vec<Subspace>) -> Result<Self> {
        if steps.is_empty() {
            return Err(Error::domain("a filtration needs at least one step"));
        }
        for (i, s) in steps.iter().enumerate() {
            if s.ambient() != ambient {
                return Err(Error::domain(format!(
                    "step {i} lives in Q^{}, expected Q^{ambient}",
                    s.ambient()
                )));
            }
            if i > 0 && !s.contains(&steps[i - 1])? {
                return Err(Error::domain(format!(
                    "step {} is not contained in step {i}",
                    i - 1
                )));
            }
        }
        Ok(FiltrationChain { ambient, steps })
    }

    /// `F^i = span(e_1, ..., e_{dims[i]})`.
    pub fn coordinate(ambient: usize, dims: &[usize]) -> Result<Self> {
        Self::new(
            ambient,
            dims.iter().map(|&k| Subspace::coordinate(ambient, k)).collect(),
        )
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    /// Number of stored steps.
    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn steps(&self) -> &[Subspace] {
        &self.steps
    }

    pub fn step(&self, i: usize) -> &Subspace {
        &self.steps[i.min(self.steps.len() - 1)]
    }

    pub fn top(&self) -> &Subspace {
        self.steps.last().expect("nonempty")
    }

    pub fn dims(&self) -> Vec<usize> {
        self.steps.iter().map(Subspace::dim).collect()
    }

    /// Parses `dim <n>` followed by `step` headers, each followed by the rows
    /// of a spanning set. `#` starts a comment line.
    pub fn parse(text: &str) -> Result<Self> {
        let mut ambient = None;
        let mut steps: Vec<Vec<Vec<Rational>>> = Vec::new();
        let mut offset = 0;
        for line in text.split_inclusive('\n') {
            let body = line.trim_end_matches(['\n', '\r']);
            let trimmed = body.trim();
            let lead = body.len() - body.trim_start().len();
            let here = offset + lead;
            offset += line.len();
            if trimmed.is_empty() || trimmed.starts_with('#') {
                continue;
            }
            if let Some(rest) = trimmed.strip_prefix("dim") {
                if ambient.is_some() {
                    return Err(Error::parse(here, "repeated dim line"));
                }
                let n: usize = rest
                    .trim()
                    .parse()
                    .map_err(|_| Error::parse(here, "expected `dim <n>`"))?;
                ambient = Some(n);
                continue;
            }
            let Some(n) = ambient else {
                return Err(Error::parse(here, "the first line must be `dim <n>`"));
            };
            if trimmed == "step" {
                steps.push(Vec::new());
                continue;
            }
            let Some(current) = steps.last_mut() else {
                return Err(Error::parse(here, "row before the first `step`"));
            };
            let mut row = Vec::new();
            let mut pos = 0;
            for token in body.split(|c: char| c.is_whitespace() || c == ',') {
                if token.is_empty() {
                    continue;
                }
                let start = body[pos..].find(token).map_or(pos, |p| p + pos);
                row.push(parse_rational(token, here - lead + start)?);
                pos = start + token.len();
            }
            if row.len() != n {
                return Err(Error::parse(
                    here,
                    format!("row has {} entries, expected {n}", row.len()),
                ));
            }
            current.push(row);
        }
        let n = ambient.ok_or_else(|| Error::parse(0, "missing `dim <n>` line"))?;
        let subspaces = steps
            .into_iter()
            .map(|rows| Subspace::span(n, rows))
            .collect::<Result<Vec<_>>>()?;
        Self::new(n, subspaces)
    }

    /// Random chain of `len` steps, each adding up to two random vectors.
    pub fn random<R: Rng + ?Sized>(rng: &mut R, ambient: usize, len: usize) -> Self {
        let mut steps = Vec::with_capacity(len);
        let mut current = Subspace::zero(ambient);
        for _ in 0..len.max(1) {
            let extra: Vec<Vec<Rational>> = (0..rng.gen_range(0..=2))
                .map(|_| random_vector(rng, ambient))
                .collect();
            current = current
                .sum(&Subspace::span(ambient, extra).expect("lengths agree"))
                .expect("same ambient");
            steps.push(current.clone());
        }
        FiltrationChain { ambient, steps }
    }
}

fn random_vector<R: Rng + ?Sized>(rng: &mut R, n: usize) -> Vec<Rational> {
    (0..n).map(|_| int(rng.gen_range(-2..=2))).collect()
}

impl fmt::Display for FiltrationChain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "dim {}", self.ambient)?;
        for s in &self.steps {
            writeln!(f, "step")?;
            write!(f, "{s}")?;
        }
        Ok(())
    }
}
