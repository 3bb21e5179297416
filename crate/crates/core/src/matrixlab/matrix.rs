use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use rand::Rng;

use crate::error::{Error, Result};
use crate::linalg;
use crate::scalar::{int, rat, ExactComplex};

/// Dense matrix over the Gaussian rationals. Indices are 0-based.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ExactMatrix {
    rows: usize,
    cols: usize,
    data: Vec<ExactComplex>,
}

impl ExactMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        ExactMatrix {
            rows,
            cols,
            data: vec![ExactComplex::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, ExactComplex::one());
        }
        m
    }

    /// The matrix unit `E_ab` of size `n`.
    pub fn unit(n: usize, a: usize, b: usize) -> Self {
        let mut m = Self::zeros(n, n);
        m.set(a, b, ExactComplex::one());
        m
    }

    pub fn diagonal(entries: &[ExactComplex]) -> Self {
        let mut m = Self::zeros(entries.len(), entries.len());
        for (i, x) in entries.iter().enumerate() {
            m.set(i, i, x.clone());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<ExactComplex>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if r == 0 || c == 0 {
            return Err(Error::domain("a matrix needs at least one row and one column"));
        }
        if let Some(i) = rows.iter().position(|row| row.len() != c) {
            return Err(Error::domain(format!(
                "row {} has {} entries, expected {c}",
                i + 1,
                rows[i].len()
            )));
        }
        Ok(ExactMatrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        })
    }

    /// Convenience constructor from integer rows.
    pub fn from_ints(rows: &[&[i64]]) -> Result<Self> {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&v| ExactComplex::from_int(v)).collect())
                .collect(),
        )
    }

    /// Upper-triangular Jordan block of size `n` with zero eigenvalue.
    pub fn jordan_block(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 1..n {
            m.set(i - 1, i, ExactComplex::one());
        }
        m
    }

    /// The antidiagonal permutation matrix `w_0`.
    pub fn antidiagonal(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, n - 1 - i, ExactComplex::one());
        }
        m
    }

    pub fn block_diagonal(blocks: &[ExactMatrix]) -> Self {
        let r: usize = blocks.iter().map(|b| b.rows).sum();
        let c: usize = blocks.iter().map(|b| b.cols).sum();
        let mut m = Self::zeros(r, c);
        let (mut r0, mut c0) = (0, 0);
        for b in blocks {
            for i in 0..b.rows {
                for j in 0..b.cols {
                    m.set(r0 + i, c0 + j, b.get(i, j).clone());
                }
            }
            r0 += b.rows;
            c0 += b.cols;
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &ExactComplex {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: ExactComplex) {
        self.data[i * self.cols + j] = value;
    }

    pub fn row(&self, i: usize) -> &[ExactComplex] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(ExactComplex::is_zero)
    }

    /// Nonzero entries as `(row, col, value)`.
    pub fn support(&self) -> Vec<(usize, usize, &ExactComplex)> {
        (0..self.rows)
            .flat_map(|i| (0..self.cols).map(move |j| (i, j)))
            .filter_map(|(i, j)| {
                let x = self.get(i, j);
                (!x.is_zero()).then_some((i, j, x))
            })
            .collect()
    }

    pub fn transpose(&self) -> Self {
        let mut m = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                m.set(j, i, self.get(i, j).clone());
            }
        }
        m
    }

    pub fn scale(&self, c: &ExactComplex) -> Self {
        ExactMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| x * c).collect(),
        }
    }

    pub fn trace(&self) -> ExactComplex {
        let mut t = ExactComplex::zero();
        for i in 0..self.rows.min(self.cols) {
            t += self.get(i, i);
        }
        t
    }

    pub fn checked_mul(&self, other: &ExactMatrix) -> Result<ExactMatrix> {
        if self.cols != other.rows {
            return Err(Error::domain(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        out.data[i * other.cols + j] += &(a * b);
                    }
                }
            }
        }
        Ok(out)
    }

    /// `self^k`; the zeroth power is the identity.
    pub fn pow(&self, k: usize) -> Result<ExactMatrix> {
        if !self.is_square() {
            return Err(Error::domain("powers need a square matrix"));
        }
        let mut out = Self::identity(self.rows);
        for _ in 0..k {
            out = out.checked_mul(self)?;
        }
        Ok(out)
    }

    /// The commutator `[self, other] = self*other - other*self`.
    pub fn bracket(&self, other: &ExactMatrix) -> Result<ExactMatrix> {
        Ok(&self.checked_mul(other)? - &other.checked_mul(self)?)
    }

    pub fn rank(&self) -> usize {
        let rows = (0..self.rows).map(|i| self.row(i).to_vec()).collect();
        linalg::rank(rows, self.cols)
    }

    /// Exact inverse by Gauss-Jordan elimination.
    pub fn inverse(&self) -> Option<ExactMatrix> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        let rows = (0..n)
            .map(|i| {
                let mut r = self.row(i).to_vec();
                r.extend((0..n).map(|j| {
                    if i == j {
                        ExactComplex::one()
                    } else {
                        ExactComplex::zero()
                    }
                }));
                r
            })
            .collect();
        let (red, pivots) = linalg::rref(rows, 2 * n);
        if pivots.len() < n || pivots[n - 1] >= n {
            return None;
        }
        let data = red.into_iter().flat_map(|r| r.into_iter().skip(n)).collect();
        Some(ExactMatrix {
            rows: n,
            cols: n,
            data,
        })
    }

    /// `p * self * p^{-1}`.
    pub fn conjugate_by(&self, p: &ExactMatrix) -> Result<ExactMatrix> {
        let inv = p
            .inverse()
            .ok_or_else(|| Error::domain("conjugating matrix is singular"))?;
        p.checked_mul(self)?.checked_mul(&inv)
    }

    /// Parses whitespace- or comma-separated entries, one row per line.
    /// Blank lines and lines starting with `#` are skipped.
    pub fn parse(text: &str) -> Result<ExactMatrix> {
        let mut rows = Vec::new();
        let mut offset = 0;
        for line in text.split_inclusive('\n') {
            let body = line.trim_end_matches(['\n', '\r']);
            let trimmed = body.trim_start();
            if !(trimmed.is_empty() || trimmed.starts_with('#')) {
                let mut row = Vec::new();
                let mut pos = 0;
                for token in body.split(|c: char| c.is_whitespace() || c == ',') {
                    if !token.is_empty() {
                        let start = body[pos..].find(token).map_or(pos, |p| p + pos);
                        row.push(ExactComplex::parse_at(token, offset + start)?);
                        pos = start + token.len();
                    }
                }
                rows.push(row);
            }
            offset += line.len();
        }
        Self::from_rows(rows)
    }
}

/// Random invertible matrix `L*U` with small integer off-diagonal entries and
/// nonzero rational diagonal.
pub fn random_invertible<R: Rng + ?Sized>(rng: &mut R, n: usize) -> ExactMatrix {
    let mut lower = ExactMatrix::identity(n);
    let mut upper = ExactMatrix::zeros(n, n);
    for i in 0..n {
        for j in 0..n {
            if j < i {
                lower.set(i, j, ExactComplex::real(int(rng.gen_range(-3..=3))));
            } else if j > i {
                upper.set(i, j, ExactComplex::real(int(rng.gen_range(-3..=3))));
            } else {
                let num = rng.gen_range(1..=3) * if rng.gen_bool(0.5) { 1 } else { -1 };
                upper.set(i, i, ExactComplex::real(rat(num, rng.gen_range(1..=3))));
            }
        }
    }
    lower.checked_mul(&upper).expect("square factors")
}

/// Random unimodular integer matrix (unit lower times unit upper).
pub fn random_unimodular<R: Rng + ?Sized>(rng: &mut R, n: usize) -> ExactMatrix {
    let mut lower = ExactMatrix::identity(n);
    let mut upper = ExactMatrix::identity(n);
    for i in 0..n {
        for j in 0..i {
            lower.set(i, j, ExactComplex::from_int(rng.gen_range(-2..=2)));
            upper.set(j, i, ExactComplex::from_int(rng.gen_range(-2..=2)));
        }
    }
    lower.checked_mul(&upper).expect("square factors")
}

impl fmt::Display for ExactMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let words: Vec<String> = self.row(i).iter().map(|x| x.to_string()).collect();
            writeln!(f, "{}", words.join(" "))?;
        }
        Ok(())
    }
}

impl fmt::Debug for ExactMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ExactMatrix {}x{}\n{self}", self.rows, self.cols)
    }
}

fn assert_same_shape(a: &ExactMatrix, b: &ExactMatrix) {
    assert!(
        a.rows == b.rows && a.cols == b.cols,
        "shape mismatch: {}x{} vs {}x{}",
        a.rows,
        a.cols,
        b.rows,
        b.cols
    );
}

impl Add for &ExactMatrix {
    type Output = ExactMatrix;

    /// Panics on shape mismatch.
    fn add(self, rhs: &ExactMatrix) -> ExactMatrix {
        assert_same_shape(self, rhs);
        ExactMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a + b).collect(),
        }
    }
}

impl Sub for &ExactMatrix {
    type Output = ExactMatrix;

    /// Panics on shape mismatch.
    fn sub(self, rhs: &ExactMatrix) -> ExactMatrix {
        assert_same_shape(self, rhs);
        ExactMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a - b).collect(),
        }
    }
}

impl Mul for &ExactMatrix {
    type Output = ExactMatrix;

    /// Panics on shape mismatch; use [`ExactMatrix::checked_mul`] otherwise.
    fn mul(self, rhs: &ExactMatrix) -> ExactMatrix {
        self.checked_mul(rhs).expect("matrix shapes must agree")
    }
}

impl Neg for &ExactMatrix {
    type Output = ExactMatrix;

    fn neg(self) -> ExactMatrix {
        ExactMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| -x).collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn multiplication_and_powers() {
        let j = ExactMatrix::jordan_block(3);
        assert_eq!(j.pow(2).unwrap(), ExactMatrix::unit(3, 0, 2));
        assert!(j.pow(3).unwrap().is_zero());
        assert_eq!(j.pow(0).unwrap(), ExactMatrix::identity(3));
        let a = ExactMatrix::from_ints(&[&[1, 2], &[3, 4]]).unwrap();
        let b = ExactMatrix::from_ints(&[&[0, 1], &[1, 0]]).unwrap();
        assert_eq!(&a * &b, ExactMatrix::from_ints(&[&[2, 1], &[4, 3]]).unwrap());
        assert_eq!(a.trace(), ExactComplex::from_int(5));
    }

    #[test]
    fn inverse_and_rank() {
        let a = ExactMatrix::from_ints(&[&[2, 1], &[1, 1]]).unwrap();
        let inv = a.inverse().unwrap();
        assert_eq!(&a * &inv, ExactMatrix::identity(2));
        let s = ExactMatrix::from_ints(&[&[1, 2], &[2, 4]]).unwrap();
        assert!(s.inverse().is_none());
        assert_eq!(s.rank(), 1);
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for n in 1..6 {
            let p = random_invertible(&mut rng, n);
            assert_eq!(&p * &p.inverse().unwrap(), ExactMatrix::identity(n));
        }
    }

    #[test]
    fn parse_and_print() {
        let m = ExactMatrix::parse("1 1/2+i\n# comment\n\n-3*i, 0\n").unwrap();
        assert_eq!(m.rows(), 2);
        assert_eq!(m.to_string(), "1 1/2+1*i\n-3*i 0\n");
        assert_eq!(ExactMatrix::parse(&m.to_string()).unwrap(), m);
        assert!(ExactMatrix::parse("1 2\n3\n").is_err());
        match ExactMatrix::parse("1 2\n3 x\n") {
            Err(Error::Parse { pos, .. }) => assert_eq!(pos, 6),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn bracket_of_units() {
        let e12 = ExactMatrix::unit(3, 0, 1);
        let e23 = ExactMatrix::unit(3, 1, 2);
        assert_eq!(e12.bracket(&e23).unwrap(), ExactMatrix::unit(3, 0, 2));
    }
}
