use std::fmt;

use super::ExactMatrix;
use crate::error::{Error, Result};
use crate::partitions::{Composition, Partition};
use crate::scalar::ExactComplex;

/// A linear functional on `gl(n)` realized through the trace pairing
/// `f(Z) = tr(Z * dual)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LinearFunctional {
    dual: ExactMatrix,
}

impl LinearFunctional {
    pub fn from_dual(dual: ExactMatrix) -> Result<Self> {
        if !dual.is_square() {
            return Err(Error::domain("a dual matrix must be square"));
        }
        Ok(LinearFunctional { dual })
    }

    pub fn zero(n: usize) -> Self {
        LinearFunctional {
            dual: ExactMatrix::zeros(n, n),
        }
    }

    /// The functional taking value `1` on each listed `E_ab` and `0` on the
    /// other matrix units.
    pub fn indicator(n: usize, units: &[(usize, usize)]) -> Self {
        let mut dual = ExactMatrix::zeros(n, n);
        for &(a, b) in units {
            dual.set(b, a, ExactComplex::one());
        }
        LinearFunctional { dual }
    }

    pub fn n(&self) -> usize {
        self.dual.rows()
    }

    pub fn dual(&self) -> &ExactMatrix {
        &self.dual
    }

    pub fn evaluate(&self, z: &ExactMatrix) -> Result<ExactComplex> {
        Ok(z.checked_mul(&self.dual)?.trace())
    }

    /// Value on the matrix unit `E_ab`.
    pub fn on_unit(&self, a: usize, b: usize) -> &ExactComplex {
        self.dual.get(b, a)
    }

    /// Matrix units with nonzero value, as `(a, b, value)`.
    pub fn support(&self) -> Vec<(usize, usize, &ExactComplex)> {
        let mut out: Vec<_> = self
            .dual
            .support()
            .into_iter()
            .map(|(b, a, x)| (a, b, x))
            .collect();
        out.sort_by_key(|&(a, b, _)| (a, b));
        out
    }

    pub fn add(&self, other: &LinearFunctional) -> Result<LinearFunctional> {
        if self.n() != other.n() {
            return Err(Error::domain("functionals live on different gl(n)"));
        }
        Ok(LinearFunctional {
            dual: &self.dual + &other.dual,
        })
    }
}

impl fmt::Display for LinearFunctional {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self
            .support()
            .into_iter()
            .map(|(a, b, x)| format!("{x}*E{},{}", a + 1, b + 1))
            .collect();
        if terms.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", terms.join(" + "))
        }
    }
}

/// The Jordan type of a nilpotent matrix.
pub fn jordan_partition(a: &ExactMatrix) -> Result<Partition> {
    if !a.is_square() {
        return Err(Error::domain("jordan_partition needs a square matrix"));
    }
    let n = a.rows();
    let mut ranks = vec![n];
    let mut power = ExactMatrix::identity(n);
    while *ranks.last().unwrap() > 0 {
        if ranks.len() > n {
            return Err(Error::domain(format!(
                "matrix is not nilpotent: A^{n} is nonzero (rank {})",
                ranks.last().unwrap()
            )));
        }
        power = power.checked_mul(a)?;
        ranks.push(power.rank());
    }
    let columns: Vec<usize> = ranks.windows(2).map(|w| w[0] - w[1]).collect();
    Ok(Partition::from_unsorted(columns)?.transpose())
}

/// The functional `X -> tr(X w0 J_lambda w0^{-1})`, with `J_lambda` block
/// diagonal with upper Jordan blocks of sizes `lambda_i`.
pub fn psi_lambda(lambda: &Composition, n: usize) -> Result<LinearFunctional> {
    if lambda.size() != n {
        return Err(Error::domain(format!(
            "composition {lambda} has size {}, expected {n}",
            lambda.size()
        )));
    }
    let blocks: Vec<ExactMatrix> = lambda
        .parts()
        .iter()
        .map(|&p| ExactMatrix::jordan_block(p))
        .collect();
    let j = ExactMatrix::block_diagonal(&blocks);
    let w0 = ExactMatrix::antidiagonal(n);
    LinearFunctional::from_dual(&(&w0 * &j) * &w0)
}

/// The functional `sum_j Z_{j,j+1}` over the last `k` superdiagonal
/// positions of `gl(n)`, i.e. `j = n-k, ..., n-1` in 1-based indexing.
pub fn psi_tail(n: usize, k: usize) -> Result<LinearFunctional> {
    if n == 0 || k >= n {
        return Err(Error::domain(format!("tail length {k} must be below n = {n}")));
    }
    let units: Vec<(usize, usize)> = (n - 1 - k..n - 1).map(|j| (j, j + 1)).collect();
    Ok(LinearFunctional::indicator(n, &units))
}

/// Smallest `d >= 1` with `dual^d = 0`.
pub fn depth_of_functional(f: &LinearFunctional) -> Result<usize> {
    let n = f.n();
    let mut power = f.dual().clone();
    for d in 1..=n.max(1) {
        if power.is_zero() {
            return Ok(d);
        }
        power = power.checked_mul(f.dual())?;
    }
    Err(Error::domain(format!(
        "dual matrix is not nilpotent: its {}-th power is nonzero",
        n.max(1)
    )))
}
