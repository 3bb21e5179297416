//! Row reduction over exact fields.

use num_traits::{One, Zero};

use crate::scalar::{ExactComplex, Rational};

/// Arithmetic needed for Gaussian elimination.
pub trait FieldElem: Clone + PartialEq {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    /// Multiplicative inverse; callers guarantee `self` is nonzero.
    fn inv(&self) -> Self;
}

impl FieldElem for Rational {
    fn zero() -> Self {
        <Rational as Zero>::zero()
    }
    fn one() -> Self {
        <Rational as One>::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn inv(&self) -> Self {
        self.recip()
    }
}

impl FieldElem for ExactComplex {
    fn zero() -> Self {
        ExactComplex::zero()
    }
    fn one() -> Self {
        ExactComplex::one()
    }
    fn is_zero(&self) -> bool {
        ExactComplex::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn inv(&self) -> Self {
        ExactComplex::inv(self).expect("inverse of zero")
    }
}

/// Reduced row echelon form of `rows` (each of length `cols`).
///
/// Returns the nonzero rows of the reduced form and their pivot columns.
pub fn rref<T: FieldElem>(mut rows: Vec<Vec<T>>, cols: usize) -> (Vec<Vec<T>>, Vec<usize>) {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows.len() {
            break;
        }
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][c].inv();
        for x in rows[r].iter_mut().skip(c) {
            *x = x.mul(&inv);
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let factor = row[c].clone();
            for (x, p) in row.iter_mut().zip(&pivot_row).skip(c) {
                if !p.is_zero() {
                    *x = x.sub(&factor.mul(p));
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    rows.truncate(r);
    (rows, pivots)
}

/// Rank of the row span of `rows`.
pub fn rank<T: FieldElem>(rows: Vec<Vec<T>>, cols: usize) -> usize {
    rref(rows, cols).1.len()
}
