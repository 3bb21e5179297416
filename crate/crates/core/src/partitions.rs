//! Partitions and compositions of integers.
//!
//! Partitions of `n` label the nilpotent orbits in `gl(n)` (via Jordan
//! type); compositions label block parabolics and Whittaker data. The
//! empty partition of `0` is an ordinary value.
//!
//! Text form: `part ::= int ('^' int)?`, separated by whitespace or commas,
//! optionally wrapped in parentheses. `4^2 2 1^3` is `(4,4,2,1,1,1)`. The
//! printer writes descending bases with `^1` omitted; `()` is the empty
//! partition.

use std::cmp::Ordering;
use std::fmt;
use std::ops::Index;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A finite sequence of positive integers.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Composition {
    parts: Vec<usize>,
}

impl Composition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if let Some(i) = parts.iter().position(|&p| p == 0) {
            return Err(Error::domain(format!(
                "composition part {} is zero; parts must be positive",
                i + 1
            )));
        }
        Ok(Composition { parts })
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// The partition obtained by sorting the parts.
    pub fn sorted(&self) -> Partition {
        Partition::from_unsorted(self.parts.clone()).expect("parts are positive")
    }

    /// All compositions of `n`, in lexicographic order.
    pub fn all(n: usize) -> Vec<Composition> {
        fn go(rest: usize, acc: &mut Vec<usize>, out: &mut Vec<Composition>) {
            if rest == 0 {
                out.push(Composition { parts: acc.clone() });
                return;
            }
            for p in 1..=rest {
                acc.push(p);
                go(rest - p, acc, out);
                acc.pop();
            }
        }
        let mut out = Vec::new();
        go(n, &mut Vec::new(), &mut out);
        out
    }
}

impl From<Partition> for Composition {
    fn from(p: Partition) -> Self {
        Composition { parts: p.parts }
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let body: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", body.join(","))
    }
}

impl fmt::Debug for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Composition{self}")
    }
}

impl FromStr for Composition {
    type Err = Error;

    /// Comma/whitespace list of positive integers, order kept. Exponents
    /// expand in place, so `2^2,1` is `(2,2,1)`.
    fn from_str(s: &str) -> Result<Self> {
        let parts = parse_parts(s)?;
        Composition::new(parts)
    }
}

/// A non-increasing finite sequence of positive integers.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Builds a partition from parts that are already non-increasing.
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::domain("partition parts must be positive"));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::domain(format!("parts {parts:?} are not non-increasing")));
        }
        Ok(Partition { parts })
    }

    /// Sorts the parts into non-increasing order.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Result<Self> {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(parts)
    }

    pub fn empty() -> Self {
        Partition::default()
    }

    /// `part^count`, e.g. `rectangle(2, 3)` is `2^3 = (2,2,2)`.
    pub fn rectangle(part: usize, count: usize) -> Self {
        if part == 0 {
            return Partition::empty();
        }
        Partition {
            parts: vec![part; count],
        }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Largest part, `0` for the empty partition.
    pub fn largest(&self) -> usize {
        self.parts.first().copied().unwrap_or(0)
    }

    /// The partition with its first (largest) part removed.
    pub fn tail(&self) -> Partition {
        Partition {
            parts: self.parts.iter().skip(1).copied().collect(),
        }
    }

    /// Column lengths of the Young diagram.
    pub fn transpose(&self) -> Partition {
        let parts = (1..=self.largest())
            .map(|j| self.parts.iter().take_while(|&&p| p >= j).count())
            .collect();
        Partition { parts }
    }

    /// Dominance order: every prefix sum of `self` is at most that of `other`.
    pub fn dominance_leq(&self, other: &Partition) -> Result<bool> {
        if self.size() != other.size() {
            return Err(Error::domain(format!(
                "dominance compares partitions of one integer, got {} and {}",
                self.size(),
                other.size()
            )));
        }
        let len = self.len().max(other.len());
        let (mut a, mut b) = (0usize, 0usize);
        for j in 0..len {
            a += self[j];
            b += other[j];
            if a > b {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// `(base, multiplicity)` pairs with descending base.
    pub fn exponents(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<(usize, usize)> = Vec::new();
        for &p in &self.parts {
            match out.last_mut() {
                Some((b, m)) if *b == p => *m += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }

    /// Comma tuple form, e.g. `(4,4,2,1,1,1)`.
    pub fn tuple_string(&self) -> String {
        Composition::from(self.clone()).to_string()
    }

    /// All partitions of `n` in reverse lexicographic order, starting at `(n)`.
    pub fn all(n: usize) -> PartitionIter {
        PartitionIter {
            next: Some(if n == 0 { vec![] } else { vec![n] }),
        }
    }
}

/// Componentwise sum of zero-padded partitions.
///
/// This is the induced-orbit rule for block parabolics of `GL(n)`: the orbit
/// attached to a product of representations has the column-sum partition
/// of the factors' partitions.
pub fn induced_sum<'a, I>(parts: I) -> Partition
where
    I: IntoIterator<Item = &'a Partition>,
{
    let mut acc: Vec<usize> = Vec::new();
    for p in parts {
        if acc.len() < p.len() {
            acc.resize(p.len(), 0);
        }
        for (slot, &x) in acc.iter_mut().zip(p.parts()) {
            *slot += x;
        }
    }
    Partition { parts: acc }
}

/// Parses the exponential or comma notation into a sorted partition.
pub fn parse_exponential(text: &str) -> Result<Partition> {
    let parts = parse_parts(text)?;
    Partition::from_unsorted(parts)
}

fn parse_parts(text: &str) -> Result<Vec<usize>> {
    let mut body = text;
    let mut offset = 0;
    let trimmed = body.trim();
    if trimmed.starts_with('(') {
        if !trimmed.ends_with(')') {
            return Err(Error::parse(text.len(), "missing closing ')'"));
        }
        offset = text.find('(').unwrap_or(0) + 1;
        body = &trimmed[1..trimmed.len() - 1];
    }
    let mut parts = Vec::new();
    let bytes = body.as_bytes();
    let mut i = 0;
    let read_int = |i: &mut usize| -> Result<usize> {
        let start = *i;
        while *i < bytes.len() && bytes[*i].is_ascii_digit() {
            *i += 1;
        }
        if start == *i {
            let found = body[start..]
                .chars()
                .next()
                .map_or("end of input".to_string(), |c| format!("'{c}'"));
            return Err(Error::parse(
                offset + start,
                format!("expected an integer, found {found}"),
            ));
        }
        body[start..*i]
            .parse::<usize>()
            .map_err(|_| Error::parse(offset + start, "integer out of range"))
    };
    loop {
        while i < bytes.len() && (bytes[i].is_ascii_whitespace() || bytes[i] == b',') {
            i += 1;
        }
        if i >= bytes.len() {
            break;
        }
        let base_pos = offset + i;
        let base = read_int(&mut i)?;
        let mut exp = 1;
        if i < bytes.len() && bytes[i] == b'^' {
            i += 1;
            let exp_pos = offset + i;
            exp = read_int(&mut i)?;
            if exp == 0 {
                return Err(Error::domain(format!("zero exponent at position {exp_pos}")));
            }
        }
        if i < bytes.len() && !(bytes[i].is_ascii_whitespace() || bytes[i] == b',') {
            return Err(Error::parse(
                offset + i,
                format!(
                    "unexpected character '{}'",
                    body[i..].chars().next().unwrap_or(' ')
                ),
            ));
        }
        if base == 0 {
            return Err(Error::domain(format!("zero part at position {base_pos}")));
        }
        parts.extend(std::iter::repeat_n(base, exp));
    }
    Ok(parts)
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_exponential(s)
    }
}

impl Index<usize> for Partition {
    type Output = usize;

    /// Parts past the end read as zero.
    fn index(&self, index: usize) -> &usize {
        self.parts.get(index).unwrap_or(&0)
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.size()
            .cmp(&other.size())
            .then_with(|| self.parts.cmp(&other.parts))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return write!(f, "()");
        }
        let words: Vec<String> = self
            .exponents()
            .into_iter()
            .map(|(b, m)| if m == 1 { b.to_string() } else { format!("{b}^{m}") })
            .collect();
        write!(f, "{}", words.join(" "))
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Partition{}", self.tuple_string())
    }
}

pub struct PartitionIter {
    next: Option<Vec<usize>>,
}

impl Iterator for PartitionIter {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        let current = self.next.take()?;
        // Successor: decrement the last part > 1 and refill greedily.
        if let Some(pos) = current.iter().rposition(|&p| p > 1) {
            let mut succ = current[..pos].to_vec();
            let v = current[pos] - 1;
            let mut rest = current[pos + 1..].len() + 1;
            succ.push(v);
            while rest > 0 {
                let take = rest.min(v);
                succ.push(take);
                rest -= take;
            }
            self.next = Some(succ);
        }
        Some(Partition { parts: current })
    }
}
