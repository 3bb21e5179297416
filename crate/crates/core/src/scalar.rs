//! Exact scalars: arbitrary-precision rationals and Gaussian rationals.
//!
//! Text form for a Gaussian rational is `a+b*i` with rational `a`, `b`
//! (`p` or `p/q`). Either half may be omitted, and a bare `i` means `1*i`.
//! The printer is canonical: zero halves are dropped and the imaginary
//! coefficient is always written explicitly.

use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Rational = BigRational;

pub fn rat(numer: i64, denom: i64) -> Rational {
    Rational::new(BigInt::from(numer), BigInt::from(denom))
}

pub fn int(value: i64) -> Rational {
    Rational::from_integer(BigInt::from(value))
}

/// Parses `p` or `p/q` with an optional sign. `offset` is added to any
/// reported error position.
pub fn parse_rational(text: &str, offset: usize) -> Result<Rational> {
    let trimmed = text.trim();
    let lead = offset + (text.len() - text.trim_start().len());
    if trimmed.is_empty() {
        return Err(Error::parse(lead, "expected a rational number"));
    }
    let (numer, denom) = match trimmed.split_once('/') {
        Some((n, d)) => (n.trim(), Some(d.trim())),
        None => (trimmed, None),
    };
    let parse_int = |s: &str, pos: usize| -> Result<BigInt> {
        let digits = s.strip_prefix('+').unwrap_or(s);
        let body = digits.strip_prefix('-').unwrap_or(digits);
        if body.is_empty() || !body.bytes().all(|b| b.is_ascii_digit()) {
            return Err(Error::parse(pos, format!("malformed integer '{s}'")));
        }
        digits
            .parse::<BigInt>()
            .map_err(|_| Error::parse(pos, format!("malformed integer '{s}'")))
    };
    let n = parse_int(numer, lead)?;
    let d = match denom {
        Some(d) => {
            let pos = lead + trimmed.find('/').unwrap_or(0) + 1;
            let d = parse_int(d, pos)?;
            if d.is_zero() {
                return Err(Error::parse(pos, "zero denominator"));
            }
            d
        }
        None => BigInt::one(),
    };
    Ok(Rational::new(n, d))
}

/// Canonical rational printer: `p` for integers, `p/q` otherwise.
pub fn fmt_rational(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// A Gaussian rational `re + im·i`.
///
/// Ordering is lexicographic on `(re, im)`; it exists so multisets of
/// complex parameters have a canonical sorted form.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct ExactComplex {
    pub re: Rational,
    pub im: Rational,
}

impl ExactComplex {
    pub fn new(re: Rational, im: Rational) -> Self {
        ExactComplex { re, im }
    }

    pub fn real(re: Rational) -> Self {
        ExactComplex {
            re,
            im: Rational::zero(),
        }
    }

    pub fn imaginary(im: Rational) -> Self {
        ExactComplex {
            re: Rational::zero(),
            im,
        }
    }

    pub fn from_int(v: i64) -> Self {
        Self::real(int(v))
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::real(Rational::one())
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        ExactComplex::new(self.re.clone(), -self.im.clone())
    }

    /// Squared modulus, always rational.
    pub fn norm_sqr(&self) -> Rational {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        if self.im.is_zero() {
            return Some(Self::real(self.re.recip()));
        }
        let n = self.norm_sqr();
        Some(ExactComplex::new(&self.re / &n, -(&self.im / &n)))
    }

    /// Parses a complex literal; `offset` shifts reported error positions.
    pub fn parse_at(text: &str, offset: usize) -> Result<Self> {
        let lead = text.len() - text.trim_start().len();
        let s = text.trim();
        let base = offset + lead;
        if s.is_empty() {
            return Err(Error::parse(base, "expected a complex number"));
        }
        // Split at the last sign that is not leading and not right after '/'.
        let bytes = s.as_bytes();
        let mut split = None;
        for idx in (1..bytes.len()).rev() {
            if (bytes[idx] == b'+' || bytes[idx] == b'-') && bytes[idx - 1] != b'/' {
                split = Some(idx);
                break;
            }
        }
        let (first, second) = match split {
            Some(idx) => (&s[..idx], Some((&s[idx..], idx))),
            None => (s, None),
        };
        let mut value = ExactComplex::zero();
        let mut seen_re = false;
        let mut seen_im = false;
        for (part, at) in std::iter::once((first, 0)).chain(second) {
            let (is_im, r) = parse_term(part, base + at)?;
            let slot = if is_im { &mut seen_im } else { &mut seen_re };
            if *slot {
                return Err(Error::parse(
                    base + at,
                    "duplicate real or imaginary part in complex literal",
                ));
            }
            *slot = true;
            if is_im {
                value.im = r;
            } else {
                value.re = r;
            }
        }
        Ok(value)
    }
}

fn parse_term(part: &str, pos: usize) -> Result<(bool, Rational)> {
    let p = part.trim();
    let (sign, body) = match p.as_bytes().first() {
        Some(b'-') => (-1, p[1..].trim()),
        Some(b'+') => (1, p[1..].trim()),
        _ => (1, p),
    };
    let signed = |r: Rational| if sign < 0 { -r } else { r };
    if body == "i" {
        return Ok((true, signed(Rational::one())));
    }
    if let Some(coef) = body.strip_suffix('i') {
        let coef = coef.trim_end();
        let coef = coef
            .strip_suffix('*')
            .ok_or_else(|| Error::parse(pos, format!("expected '*i' in imaginary term '{p}'")))?;
        let r = parse_rational(coef, pos)?;
        return Ok((true, signed(r)));
    }
    Ok((false, signed(parse_rational(body, pos)?)))
}

impl FromStr for ExactComplex {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        ExactComplex::parse_at(s, 0)
    }
}

impl fmt::Display for ExactComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.re.is_zero(), self.im.is_zero()) {
            (_, true) => write!(f, "{}", fmt_rational(&self.re)),
            (true, false) => write!(f, "{}*i", fmt_rational(&self.im)),
            (false, false) => {
                let sign = if self.im.is_negative() { '-' } else { '+' };
                write!(
                    f,
                    "{}{}{}*i",
                    fmt_rational(&self.re),
                    sign,
                    fmt_rational(&self.im.abs())
                )
            }
        }
    }
}

impl fmt::Debug for ExactComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl From<Rational> for ExactComplex {
    fn from(r: Rational) -> Self {
        ExactComplex::real(r)
    }
}

impl From<i64> for ExactComplex {
    fn from(v: i64) -> Self {
        ExactComplex::from_int(v)
    }
}

impl<'a> Add<&'a ExactComplex> for &'a ExactComplex {
    type Output = ExactComplex;
    fn add(self, rhs: &ExactComplex) -> ExactComplex {
        ExactComplex::new(&self.re + &rhs.re, &self.im + &rhs.im)
    }
}

impl Add for ExactComplex {
    type Output = ExactComplex;
    fn add(self, rhs: ExactComplex) -> ExactComplex {
        &self + &rhs
    }
}

impl AddAssign<&ExactComplex> for ExactComplex {
    fn add_assign(&mut self, rhs: &ExactComplex) {
        self.re += &rhs.re;
        if !rhs.im.is_zero() {
            self.im += &rhs.im;
        }
    }
}

impl SubAssign<&ExactComplex> for ExactComplex {
    fn sub_assign(&mut self, rhs: &ExactComplex) {
        self.re -= &rhs.re;
        if !rhs.im.is_zero() {
            self.im -= &rhs.im;
        }
    }
}

impl<'a> Sub<&'a ExactComplex> for &'a ExactComplex {
    type Output = ExactComplex;
    fn sub(self, rhs: &ExactComplex) -> ExactComplex {
        ExactComplex::new(&self.re - &rhs.re, &self.im - &rhs.im)
    }
}

impl Sub for ExactComplex {
    type Output = ExactComplex;
    fn sub(self, rhs: ExactComplex) -> ExactComplex {
        &self - &rhs
    }
}

impl<'a> Mul<&'a ExactComplex> for &'a ExactComplex {
    type Output = ExactComplex;
    fn mul(self, rhs: &ExactComplex) -> ExactComplex {
        // Real operands are the common case in matrix powers.
        if self.im.is_zero() && rhs.im.is_zero() {
            return ExactComplex::real(&self.re * &rhs.re);
        }
        ExactComplex::new(
            &self.re * &rhs.re - &self.im * &rhs.im,
            &self.re * &rhs.im + &self.im * &rhs.re,
        )
    }
}

impl Mul for ExactComplex {
    type Output = ExactComplex;
    fn mul(self, rhs: ExactComplex) -> ExactComplex {
        &self * &rhs
    }
}

impl<'a> Div<&'a ExactComplex> for &'a ExactComplex {
    type Output = ExactComplex;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, rhs: &ExactComplex) -> ExactComplex {
        let inv = rhs.inv().expect("division by zero");
        self * &inv
    }
}

impl Neg for ExactComplex {
    type Output = ExactComplex;
    fn neg(self) -> ExactComplex {
        ExactComplex::new(-self.re, -self.im)
    }
}

impl Neg for &ExactComplex {
    type Output = ExactComplex;
    fn neg(self) -> ExactComplex {
        ExactComplex::new(-self.re.clone(), -self.im.clone())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(s: &str) -> ExactComplex {
        s.parse().unwrap()
    }

    #[test]
    fn parses_literal_forms() {
        assert_eq!(c("3/4"), ExactComplex::real(rat(3, 4)));
        assert_eq!(c("2*i"), ExactComplex::imaginary(int(2)));
        assert_eq!(c("-i"), ExactComplex::imaginary(int(-1)));
        assert_eq!(c("1/2-3/4*i"), ExactComplex::new(rat(1, 2), rat(-3, 4)));
        assert_eq!(c(" -1 + 2*i "), ExactComplex::new(int(-1), int(2)));
        assert_eq!(c("-1/2"), ExactComplex::real(rat(-1, 2)));
        assert_eq!(c("2*i+1"), ExactComplex::new(int(1), int(2)));
    }

    #[test]
    fn rejects_bad_literals() {
        assert!(matches!("1/0".parse::<ExactComplex>(), Err(Error::Parse { .. })));
        assert!("".parse::<ExactComplex>().is_err());
        assert!("2i".parse::<ExactComplex>().is_err());
        assert!("1+2".parse::<ExactComplex>().is_err());
        assert!("a".parse::<ExactComplex>().is_err());
        match "7+x*i".parse::<ExactComplex>() {
            Err(Error::Parse { pos, .. }) => assert_eq!(pos, 1),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn printer_is_canonical() {
        assert_eq!(c("0").to_string(), "0");
        assert_eq!(c("i").to_string(), "1*i");
        assert_eq!(c("2/4-6/4*i").to_string(), "1/2-3/2*i");
        for s in ["0", "5", "-1/3", "1*i", "-2/7*i", "1/2+1*i", "-3-1/5*i"] {
            assert_eq!(c(s).to_string(), s);
        }
    }

    #[test]
    fn field_arithmetic() {
        let a = c("1+2*i");
        let b = c("3-1*i");
        assert_eq!(&a * &b, c("5+5*i"));
        assert_eq!(&(&a / &b) * &b, a);
        assert_eq!(&a - &a, ExactComplex::zero());
        assert!(ExactComplex::zero().inv().is_none());
    }
}
