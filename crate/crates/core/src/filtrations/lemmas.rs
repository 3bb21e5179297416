use rand::Rng;

use super::{FiltrationChain, Subspace};
use crate::error::{Error, Result};

fn same_ambient(f: &FiltrationChain, phi: &FiltrationChain) -> Result<()> {
    if f.ambient() != phi.ambient() {
        return Err(Error::domain(format!(
            "filtrations of Q^{} and Q^{} are not comparable",
            f.ambient(),
            phi.ambient()
        )));
    }
    Ok(())
}

/// Number of indices after which both chains (shifted by up to `shift`)
/// are constant.
fn horizon(f: &FiltrationChain, phi: &FiltrationChain, shift: usize) -> usize {
    f.len().max(phi.len()) + shift
}

/// First index `i` where `Phi^i ⊆ F^{i+k} ⊆ Phi^{i+2k}` fails, if any.
fn comparability_failure(f: &FiltrationChain, phi: &FiltrationChain, k: usize) -> Result<Option<usize>> {
    for i in 0..horizon(f, phi, 2 * k) {
        let mid = f.step(i + k);
        if !mid.contains(phi.step(i))? || !phi.step(i + 2 * k).contains(mid)? {
            return Ok(Some(i));
        }
    }
    Ok(None)
}

/// `Phi^i ⊆ F^{i+k} ⊆ Phi^{i+2k}` for all `i >= 0`. `k = 0` is accepted
/// and means the chains coincide.
pub fn comparable(f: &FiltrationChain, phi: &FiltrationChain, k: usize) -> Result<bool> {
    same_ambient(f, phi)?;
    Ok(comparability_failure(f, phi, k)?.is_none())
}

/// The chains `Psi_j^i = F^{i+k} + Phi^{i+j}` for `j = 0..=2k`.
///
/// Each returned chain has `max(len F, len Phi) + 2k` steps.
pub fn interpolate(f: &FiltrationChain, phi: &FiltrationChain, k: usize) -> Result<Vec<FiltrationChain>> {
    same_ambient(f, phi)?;
    if let Some(i) = comparability_failure(f, phi, k)? {
        return Err(Error::domain(format!(
            "filtrations are not {k}-comparable at index {i}"
        )));
    }
    let len = horizon(f, phi, 2 * k);
    (0..=2 * k)
        .map(|j| {
            let steps = (0..len)
                .map(|i| f.step(i + k).sum(phi.step(i + j)))
                .collect::<Result<Vec<_>>>()?;
            FiltrationChain::new(f.ambient(), steps)
        })
        .collect()
}

/// Checks the endpoint identities and the nesting
/// `Psi_j^i ⊆ Psi_{j+1}^i ⊆ Psi_j^{i+1}`; returns the violations.
pub fn check_interpolation(
    f: &FiltrationChain,
    phi: &FiltrationChain,
    k: usize,
    psi: &[FiltrationChain],
) -> Result<Vec<String>> {
    let mut out = Vec::new();
    if psi.len() != 2 * k + 1 {
        out.push(format!("expected {} chains, got {}", 2 * k + 1, psi.len()));
        return Ok(out);
    }
    let len = horizon(f, phi, 2 * k) + 1;
    for i in 0..len {
        if psi[0].step(i) != f.step(i + k) {
            out.push(format!("Psi_0^{i} differs from F^{}", i + k));
        }
        if psi[2 * k].step(i) != phi.step(i + 2 * k) {
            out.push(format!("Psi_{}^{i} differs from Phi^{}", 2 * k, i + 2 * k));
        }
        for j in 0..2 * k {
            if !psi[j + 1].step(i).contains(psi[j].step(i))? {
                out.push(format!("Psi_{j}^{i} is not inside Psi_{}^{i}", j + 1));
            }
            if !psi[j].step(i + 1).contains(psi[j + 1].step(i))? {
                out.push(format!("Psi_{}^{i} is not inside Psi_{j}^{}", j + 1, i + 1));
            }
        }
    }
    Ok(out)
}

/// Dimensions of `F^0` and of the successive quotients `F^{i+1}/F^i`.
pub fn graded_dims(f: &FiltrationChain) -> Vec<usize> {
    let dims = f.dims();
    let mut out = vec![dims[0]];
    out.extend(dims.windows(2).map(|w| w[1] - w[0]));
    out
}

/// One index of the kernel/cokernel comparison.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShiftRow {
    pub i: usize,
    /// `dim Phi^{i-1} - dim F^{i-1}` (zero for `i = 0`).
    pub k_formula: usize,
    /// Kernel of `F^i/F^{i-1} -> Phi^i/Phi^{i-1}`.
    pub k_graded: usize,
    /// `dim Phi^i - dim F^i`.
    pub c_formula: usize,
    /// Cokernel of the same map.
    pub c_graded: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShiftReport {
    pub rows: Vec<ShiftRow>,
    pub failures: Vec<String>,
}

impl ShiftReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// For interleaved chains `F^i ⊆ Phi^i ⊆ F^{i+1}`, compares kernel and
/// cokernel of the graded map `Gr_F -> Gr_Phi` with the quotient formulas
/// and checks `dim C_i = dim K_{i+1}`.
pub fn shift_lemma_dims(f: &FiltrationChain, phi: &FiltrationChain) -> Result<ShiftReport> {
    same_ambient(f, phi)?;
    let len = horizon(f, phi, 1);
    for i in 0..len {
        if !phi.step(i).contains(f.step(i))? {
            return Err(Error::domain(format!("F^{i} is not inside Phi^{i}")));
        }
        if !f.step(i + 1).contains(phi.step(i))? {
            return Err(Error::domain(format!("Phi^{i} is not inside F^{}", i + 1)));
        }
    }
    let zero = Subspace::zero(f.ambient());
    let prev = |c: &FiltrationChain, i: usize| -> Subspace {
        if i == 0 {
            zero.clone()
        } else {
            c.step(i - 1).clone()
        }
    };
    let mut rows = Vec::with_capacity(len + 1);
    for i in 0..=len {
        let (f_prev, phi_prev) = (prev(f, i), prev(phi, i));
        let (fi, phii) = (f.step(i), phi.step(i));
        let k_formula = phi_prev.dim() - f_prev.dim();
        let c_formula = phii.dim() - fi.dim();
        // kernel: (F^i ∩ Phi^{i-1}) / F^{i-1}
        let k_graded = fi.intersection_dim(&phi_prev)? - f_prev.dim();
        // cokernel: Phi^i / (F^i + Phi^{i-1})
        let c_graded = phii.dim() - fi.sum(&phi_prev)?.dim();
        rows.push(ShiftRow {
            i,
            k_formula,
            k_graded,
            c_formula,
            c_graded,
        });
    }
    let mut failures = Vec::new();
    for r in &rows {
        if r.k_formula != r.k_graded {
            failures.push(format!(
                "K_{}: formula {} but kernel {}",
                r.i, r.k_formula, r.k_graded
            ));
        }
        if r.c_formula != r.c_graded {
            failures.push(format!(
                "C_{}: formula {} but cokernel {}",
                r.i, r.c_formula, r.c_graded
            ));
        }
    }
    for w in rows.windows(2) {
        if w[0].c_graded != w[1].k_graded {
            failures.push(format!(
                "dim C_{} = {} but dim K_{} = {}",
                w[0].i, w[0].c_graded, w[1].i, w[1].k_graded
            ));
        }
    }
    Ok(ShiftReport { rows, failures })
}

/// A random pair with `Phi` `k`-comparable to `F`:
/// `Phi^j = Phi^{j-1} + F^{j-k} + (random vectors of F^{j+k})`.
pub fn random_comparable_pair<R: Rng + ?Sized>(
    rng: &mut R,
    ambient: usize,
    len: usize,
    k: usize,
) -> (FiltrationChain, FiltrationChain) {
    let f = FiltrationChain::random(rng, ambient, len);
    let mut steps = Vec::new();
    let mut current = Subspace::zero(ambient);
    for j in 0..f.len() + k {
        if j >= k {
            current = current.sum(f.step(j - k)).expect("same ambient");
        }
        let target = f.step(j + k);
        let extra: Vec<_> = (0..rng.gen_range(0..=2))
            .map(|_| target.random_vector(rng))
            .collect();
        current = current
            .sum(&Subspace::span(ambient, extra).expect("lengths agree"))
            .expect("same ambient");
        steps.push(current.clone());
    }
    let phi = FiltrationChain::new(ambient, steps).expect("ascending by construction");
    (f, phi)
}

/// A random pair with `F^i ⊆ Phi^i ⊆ F^{i+1}`.
pub fn random_interleaved_pair<R: Rng + ?Sized>(
    rng: &mut R,
    ambient: usize,
    len: usize,
) -> (FiltrationChain, FiltrationChain) {
    let f = FiltrationChain::random(rng, ambient, len);
    let steps = (0..f.len())
        .map(|i| {
            let extra: Vec<_> = (0..rng.gen_range(0..=2))
                .map(|_| f.step(i + 1).random_vector(rng))
                .collect();
            f.step(i)
                .sum(&Subspace::span(ambient, extra).expect("lengths agree"))
                .expect("same ambient")
        })
        .collect();
    let phi = FiltrationChain::new(ambient, steps).expect("ascending by construction");
    (f, phi)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::int;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn comparable_examples() {
        let f = FiltrationChain::coordinate(4, &[1, 2, 3, 4]).unwrap();
        assert!(comparable(&f, &f, 1).unwrap());
        assert!(comparable(&f, &f, 0).unwrap());
        // Phi two steps ahead of F
        let ahead = FiltrationChain::coordinate(4, &[3, 4]).unwrap();
        assert!(!comparable(&f, &ahead, 1).unwrap());
        assert!(comparable(&f, &ahead, 2).unwrap());

        let line = |v: [i64; 2]| Subspace::span(2, vec![v.iter().map(|&x| int(x)).collect()]).unwrap();
        let a = FiltrationChain::new(2, vec![line([1, 0]), Subspace::full(2)]).unwrap();
        let b = FiltrationChain::new(2, vec![line([0, 1]), Subspace::full(2)]).unwrap();
        assert!(!comparable(&a, &b, 0).unwrap());
        assert!(comparable(&a, &b, 1).unwrap());
        assert!(comparable(&a, &FiltrationChain::coordinate(3, &[1]).unwrap(), 1).is_err());
    }

    #[test]
    fn interpolation_endpoints() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for k in 1..=2 {
            let (f, phi) = random_comparable_pair(&mut rng, 6, 4, k);
            assert!(comparable(&f, &phi, k).unwrap());
            let psi = interpolate(&f, &phi, k).unwrap();
            assert!(check_interpolation(&f, &phi, k, &psi).unwrap().is_empty());
        }
        let f = FiltrationChain::coordinate(4, &[1, 2, 3, 4]).unwrap();
        let ahead = FiltrationChain::coordinate(4, &[3, 4]).unwrap();
        assert!(interpolate(&f, &ahead, 1).is_err());
    }

    #[test]
    fn graded_examples() {
        let constant = FiltrationChain::coordinate(3, &[2, 2, 2]).unwrap();
        assert_eq!(graded_dims(&constant), vec![2, 0, 0]);
        let flag = FiltrationChain::coordinate(4, &[1, 2, 3, 4]).unwrap();
        assert_eq!(graded_dims(&flag), vec![1, 1, 1, 1]);
    }

    #[test]
    fn shift_examples() {
        let f = FiltrationChain::coordinate(4, &[0, 1, 2, 3, 4]).unwrap();
        let same = shift_lemma_dims(&f, &f).unwrap();
        assert!(same.passed());
        assert!(same.rows.iter().all(|r| r.k_graded == 0 && r.c_graded == 0));

        let phi = FiltrationChain::coordinate(4, &[1, 2, 3, 4, 4]).unwrap();
        let r = shift_lemma_dims(&f, &phi).unwrap();
        assert!(r.passed(), "{:?}", r.failures);
        let c: Vec<usize> = r.rows.iter().map(|r| r.c_graded).collect();
        let k: Vec<usize> = r.rows.iter().map(|r| r.k_graded).collect();
        assert_eq!(c[..4], [1, 1, 1, 1]);
        assert_eq!(k[1..5], [1, 1, 1, 1]);
        assert_eq!(k[0], 0);

        let bad = FiltrationChain::coordinate(4, &[2, 4]).unwrap();
        match shift_lemma_dims(&f, &bad) {
            Err(Error::Domain(m)) => assert!(m.contains("Phi^0")),
            other => panic!("unexpected {other:?}"),
        }
    }
}
