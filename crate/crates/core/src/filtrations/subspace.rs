use std::fmt;

use num_traits::Zero;
use rand::Rng;

use crate::error::{Error, Result};
use crate::linalg::rref;
use crate::scalar::{fmt_rational, int, Rational};

/// A subspace of `Q^n`, stored as the reduced row echelon form of a
/// spanning set so that equality is structural.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subspace {
    ambient: usize,
    basis: Vec<Vec<Rational>>,
}

impl Subspace {
    pub fn zero(ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: Vec::new(),
        }
    }

    pub fn full(ambient: usize) -> Self {
        let rows = (0..ambient)
            .map(|i| (0..ambient).map(|j| int((i == j) as i64)).collect())
            .collect();
        Subspace { ambient, basis: rows }
    }

    /// Span of the given vectors.
    pub fn span(ambient: usize, vectors: Vec<Vec<Rational>>) -> Result<Self> {
        if let Some(v) = vectors.iter().find(|v| v.len() != ambient) {
            return Err(Error::domain(format!(
                "vector of length {} in a space of dimension {ambient}",
                v.len()
            )));
        }
        let (basis, _) = rref(vectors, ambient);
        Ok(Subspace { ambient, basis })
    }

    /// Span of the first `k` standard basis vectors.
    pub fn coordinate(ambient: usize, k: usize) -> Self {
        let rows = (0..k.min(ambient))
            .map(|i| (0..ambient).map(|j| int((i == j) as i64)).collect())
            .collect();
        Subspace { ambient, basis: rows }
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vec<Rational>] {
        &self.basis
    }

    fn same_ambient(&self, other: &Subspace) -> Result<()> {
        if self.ambient != other.ambient {
            return Err(Error::domain(format!(
                "subspaces of Q^{} and Q^{} cannot be combined",
                self.ambient, other.ambient
            )));
        }
        Ok(())
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        self.same_ambient(other)?;
        let rows = self.basis.iter().chain(&other.basis).cloned().collect();
        Subspace::span(self.ambient, rows)
    }

    pub fn contains_vector(&self, v: &[Rational]) -> bool {
        if v.len() != self.ambient {
            return false;
        }
        let mut rows = self.basis.clone();
        rows.push(v.to_vec());
        rref(rows, self.ambient).1.len() == self.dim()
    }

    /// `other` is a subspace of `self`.
    pub fn contains(&self, other: &Subspace) -> Result<bool> {
        Ok(self.sum(other)?.dim() == self.dim())
    }

    /// `dim(U ∩ W) = dim U + dim W - dim(U + W)`.
    pub fn intersection_dim(&self, other: &Subspace) -> Result<usize> {
        Ok(self.dim() + other.dim() - self.sum(other)?.dim())
    }

    /// A random integer combination of basis vectors.
    pub fn random_vector<R: Rng + ?Sized>(&self, rng: &mut R) -> Vec<Rational> {
        let mut v = vec![Rational::zero(); self.ambient];
        for row in &self.basis {
            let c = int(rng.gen_range(-3..=3));
            for (x, y) in v.iter_mut().zip(row) {
                *x += &c * y;
            }
        }
        v
    }
}

impl fmt::Display for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in &self.basis {
            let words: Vec<String> = row.iter().map(fmt_rational).collect();
            writeln!(f, "{}", words.join(" "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat;

    fn v(xs: &[i64]) -> Vec<Rational> {
        xs.iter().map(|&x| int(x)).collect()
    }

    #[test]
    fn canonical_form() {
        let a = Subspace::span(3, vec![v(&[1, 1, 0]), v(&[0, 1, 1])]).unwrap();
        let b = Subspace::span(3, vec![v(&[1, 2, 1]), v(&[2, 1, -1]), v(&[1, 0, -1])]).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.dim(), 2);
        assert!(a.contains_vector(&[rat(1, 2), int(0), rat(-1, 2)]));
        assert!(!a.contains_vector(&v(&[0, 0, 1])));
    }

    #[test]
    fn sums_and_intersections() {
        let x = Subspace::span(3, vec![v(&[1, 0, 0]), v(&[0, 1, 0])]).unwrap();
        let y = Subspace::span(3, vec![v(&[0, 1, 0]), v(&[0, 0, 1])]).unwrap();
        assert_eq!(x.sum(&y).unwrap(), Subspace::full(3));
        assert_eq!(x.intersection_dim(&y).unwrap(), 1);
        assert!(Subspace::full(3).contains(&x).unwrap());
        assert!(!x.contains(&y).unwrap());
        assert!(x.sum(&Subspace::zero(4)).is_err());
        assert!(Subspace::span(2, vec![v(&[1])]).is_err());
    }
}
