use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

/// Element of the enveloping algebra of `span{I, X}` with `[I, X] = X`,
/// stored in the normal-ordered basis `X^a I^b`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct TwoGen {
    terms: BTreeMap<(u32, u32), BigInt>,
}

impl TwoGen {
    pub fn zero() -> Self {
        TwoGen::default()
    }

    /// The basis monomial `X^a I^b`.
    pub fn monomial(a: u32, b: u32) -> Self {
        Self::term(a, b, BigInt::one())
    }

    pub fn term(a: u32, b: u32, c: BigInt) -> Self {
        let mut t = TwoGen::zero();
        t.add_term(a, b, c);
        t
    }

    pub fn x() -> Self {
        Self::monomial(1, 0)
    }

    pub fn i() -> Self {
        Self::monomial(0, 1)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, a: u32, b: u32) -> BigInt {
        self.terms.get(&(a, b)).cloned().unwrap_or_default()
    }

    fn add_term(&mut self, a: u32, b: u32, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry((a, b)).or_default();
        *e += c;
        if e.is_zero() {
            self.terms.remove(&(a, b));
        }
    }

    pub fn add(&self, other: &TwoGen) -> TwoGen {
        let mut out = self.clone();
        for (&(a, b), c) in &other.terms {
            out.add_term(a, b, c.clone());
        }
        out
    }

    pub fn scale(&self, s: &BigInt) -> TwoGen {
        let mut out = TwoGen::zero();
        for (&(a, b), c) in &self.terms {
            out.add_term(a, b, c * s);
        }
        out
    }

    pub fn sub(&self, other: &TwoGen) -> TwoGen {
        self.add(&other.scale(&-BigInt::one()))
    }

    /// Product using `I^b X^c = X^c (I + c)^b`.
    pub fn mul(&self, other: &TwoGen) -> TwoGen {
        let mut out = TwoGen::zero();
        for (&(a, b), c1) in &self.terms {
            for (&(c, e), c2) in &other.terms {
                // (I + c)^b = sum_r binom(b, r) c^(b-r) I^r
                let shift = BigInt::from(c);
                let mut binom = BigInt::one();
                for r in 0..=b {
                    let coeff = &binom * num_traits::pow(shift.clone(), (b - r) as usize) * c1 * c2;
                    out.add_term(a + c, r + e, coeff);
                    binom = binom * BigInt::from(b - r) / BigInt::from(r + 1);
                }
            }
        }
        out
    }

    pub fn pow(&self, k: u32) -> TwoGen {
        let mut out = TwoGen::monomial(0, 0);
        for _ in 0..k {
            out = out.mul(self);
        }
        out
    }

    /// `ad(X)(u) = X u - u X`.
    pub fn ad_x(&self) -> TwoGen {
        let x = TwoGen::x();
        x.mul(self).sub(&self.mul(&x))
    }
}

impl fmt::Display for TwoGen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let words: Vec<String> = self
            .terms
            .iter()
            .map(|(&(a, b), c)| {
                let mut w = c.to_string();
                if a > 0 {
                    w.push_str(&format!("*X^{a}"));
                }
                if b > 0 {
                    w.push_str(&format!("*I^{b}"));
                }
                w
            })
            .collect();
        write!(f, "{}", words.join(" + "))
    }
}

/// `ad(X)^k(I^m)` for `m = 0..=k`, checked against `k!(-X)^k` for `m = k`
/// and `0` for `m < k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AdIdentityReport {
    pub k: u32,
    pub values: Vec<(u32, String)>,
    pub passed: bool,
}

pub fn ad_power_identity(k: u32) -> AdIdentityReport {
    let mut values = Vec::new();
    let mut passed = true;
    let factorial: BigInt = (1..=k).map(BigInt::from).product();
    for m in 0..=k {
        let mut u = TwoGen::i().pow(m);
        for _ in 0..k {
            u = u.ad_x();
        }
        let expected = if m == k {
            let sign = if k.is_multiple_of(2) {
                BigInt::one()
            } else {
                -BigInt::one()
            };
            TwoGen::term(k, 0, &factorial * sign)
        } else {
            TwoGen::zero()
        };
        passed &= u == expected;
        values.push((m, u.to_string()));
    }
    AdIdentityReport { k, values, passed }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    /// Normal form by repeatedly rewriting `I X -> X I + X` in words.
    fn rewrite(word: Vec<bool>) -> TwoGen {
        // true = X, false = I
        let mut out = TwoGen::zero();
        let mut stack = vec![(word, BigInt::one())];
        while let Some((w, c)) = stack.pop() {
            match w.windows(2).position(|p| !p[0] && p[1]) {
                None => {
                    let a = w.iter().filter(|&&g| g).count() as u32;
                    out = out.add(&TwoGen::term(a, w.len() as u32 - a, c));
                }
                Some(p) => {
                    let mut swapped = w.clone();
                    swapped.swap(p, p + 1);
                    let mut shorter = w.clone();
                    shorter.remove(p);
                    stack.push((swapped, c.clone()));
                    stack.push((shorter, c));
                }
            }
        }
        out
    }

    fn from_word(word: &[bool]) -> TwoGen {
        word.iter().fold(TwoGen::monomial(0, 0), |acc, &g| {
            acc.mul(&if g { TwoGen::x() } else { TwoGen::i() })
        })
    }

    #[test]
    fn multiplication_matches_rewriting() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..200 {
            let len = rng.gen_range(0..8);
            let word: Vec<bool> = (0..len).map(|_| rng.gen_bool(0.5)).collect();
            assert_eq!(from_word(&word), rewrite(word.clone()), "{word:?}");
        }
    }

    #[test]
    fn identity_examples() {
        assert_eq!(TwoGen::i().ad_x(), TwoGen::term(1, 0, -BigInt::one()));
        assert_eq!(
            TwoGen::i().pow(2).ad_x().ad_x(),
            TwoGen::term(2, 0, BigInt::from(2))
        );
        let mut u = TwoGen::i().pow(2);
        for _ in 0..3 {
            u = u.ad_x();
        }
        assert!(u.is_zero());
        for k in 1..=8 {
            assert!(ad_power_identity(k).passed, "k = {k}");
        }
    }
}
