use itertools::Itertools;
use rand::Rng;

use super::ExactMatrix;
use crate::error::{Error, Result};
use crate::scalar::{int, rat, ExactComplex};

/// Which block of superdiagonal ones `u` carries.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NilpotentReading {
    /// `d-1` ones at `(j, j+1)`, `j = n-d+1, ..., n-1` (1-based): the
    /// Jordan block `J_d` on the last `d` rows and columns.
    LastBlock,
    /// `d` ones at `(j, j+1)`, `j = n-d, ..., n-1` (1-based).
    Extended,
}

/// The matrices `u` and `v` of the linear-algebra lemma for `gl(n)`.
///
/// `v` occupies column `n-d+1`, rows `1..n-d` (1-based).
pub fn lemma_matrices(
    n: usize,
    d: usize,
    v: &[ExactComplex],
    reading: NilpotentReading,
) -> Result<(ExactMatrix, ExactMatrix)> {
    check_range(n, d)?;
    if v.len() != n - d {
        return Err(Error::domain(format!(
            "v has {} entries, expected n - d = {}",
            v.len(),
            n - d
        )));
    }
    let first = match reading {
        NilpotentReading::LastBlock => n - d,
        NilpotentReading::Extended => (n - d).saturating_sub(1),
    };
    let mut u = ExactMatrix::zeros(n, n);
    for j in first..n - 1 {
        u.set(j, j + 1, ExactComplex::one());
    }
    let mut vm = ExactMatrix::zeros(n, n);
    for (i, x) in v.iter().enumerate() {
        vm.set(i, n - d, x.clone());
    }
    Ok((u, vm))
}

fn check_range(n: usize, d: usize) -> Result<()> {
    if d == 0 || d > n {
        return Err(Error::domain(format!("need 1 <= d <= n, got n = {n}, d = {d}")));
    }
    Ok(())
}

/// Outcome of checking `(u+v)^d = 0 <=> v = 0` on a sample of vectors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinAlgReport {
    pub n: usize,
    pub d: usize,
    pub samples: usize,
    /// Samples where the equivalence or the closed form failed.
    pub failures: Vec<String>,
    pub closed_form: String,
    /// The `Extended` reading at `n = 2, d = 1` with `v = (-1)` gives
    /// `(u+v)^1 = 0` although `v != 0`; this records that observation.
    pub extended_reading_counterexample: String,
}

impl LinAlgReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Checks the lemma under the `LastBlock` reading for every sample `v`.
///
/// For each sample it also checks the closed form
/// `(u+v)^d = sum_i v_i E_{i,n}`.
pub fn verify_linalg_lemma(n: usize, d: usize, samples: &[Vec<ExactComplex>]) -> Result<LinAlgReport> {
    check_range(n, d)?;
    let mut failures = Vec::new();
    for v in samples {
        let (u, vm) = lemma_matrices(n, d, v, NilpotentReading::LastBlock)?;
        let power = (&u + &vm).pow(d)?;
        let mut expected = ExactMatrix::zeros(n, n);
        for (i, x) in v.iter().enumerate() {
            expected.set(i, n - 1, x.clone());
        }
        let v_zero = v.iter().all(ExactComplex::is_zero);
        if power != expected {
            failures.push(format!(
                "v = {}: (u+v)^d differs from the closed form",
                fmt_vec(v)
            ));
        }
        if power.is_zero() != v_zero {
            failures.push(format!("v = {}: (u+v)^d = 0 does not match v = 0", fmt_vec(v)));
        }
    }
    Ok(LinAlgReport {
        n,
        d,
        samples: samples.len(),
        failures,
        closed_form: format!("(u+v)^{d} = sum_{{i=1..{}}} v_i E_{{i,{n}}}", n - d),
        extended_reading_counterexample: extended_counterexample()?,
    })
}

fn extended_counterexample() -> Result<String> {
    let v = vec![ExactComplex::from_int(-1)];
    let (u, vm) = lemma_matrices(2, 1, &v, NilpotentReading::Extended)?;
    let a = &u + &vm;
    Ok(format!(
        "extended reading, n=2, d=1, v=(-1): u+v is {}",
        if a.is_zero() {
            "zero although v != 0"
        } else {
            "nonzero"
        }
    ))
}

fn fmt_vec(v: &[ExactComplex]) -> String {
    format!("({})", v.iter().join(","))
}

/// All vectors in `{-1,0,1}^len`.
pub fn sign_vectors(len: usize) -> Vec<Vec<ExactComplex>> {
    if len == 0 {
        return vec![Vec::new()];
    }
    (0..len)
        .map(|_| -1..=1)
        .multi_cartesian_product()
        .map(|v| v.into_iter().map(ExactComplex::from_int).collect())
        .collect()
}

/// A random vector with rational entries `p/q`, `|p| <= 5`, `1 <= q <= 5`.
pub fn random_rational_vector<R: Rng + ?Sized>(rng: &mut R, len: usize) -> Vec<ExactComplex> {
    (0..len)
        .map(|_| ExactComplex::real(rat(rng.gen_range(-5..=5), rng.gen_range(1..=5))))
        .collect()
}

/// A random vector with Gaussian rational entries.
pub fn random_gaussian_vector<R: Rng + ?Sized>(rng: &mut R, len: usize) -> Vec<ExactComplex> {
    (0..len)
        .map(|_| {
            ExactComplex::new(
                rat(rng.gen_range(-5..=5), rng.gen_range(1..=5)),
                int(rng.gen_range(-2..=2)),
            )
        })
        .collect()
}
