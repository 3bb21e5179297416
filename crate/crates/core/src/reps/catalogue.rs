use rand::seq::SliceRandom;
use rand::Rng;

use super::{BasicRep, Field, RepExpr};
use crate::scalar::{int, rat, ExactComplex, Rational};

/// Parameter grid for enumerating basic unitary factors.
#[derive(Clone, Debug)]
pub struct CatalogueParams {
    /// Largest group size `n` of a single factor.
    pub max_size: usize,
    pub ks: Vec<usize>,
    pub ss: Vec<Rational>,
    /// Imaginary twists `t` (characters get `z = i t`).
    pub ts: Vec<Rational>,
}

impl Default for CatalogueParams {
    fn default() -> Self {
        CatalogueParams {
            max_size: 8,
            ks: (1..=4).collect(),
            ss: vec![rat(1, 4), rat(1, 3)],
            ts: vec![int(0), int(1)],
        }
    }
}

fn sign_data(field: Field) -> &'static [i64] {
    match field {
        Field::Real => &[0, 1],
        Field::Complex => &[-1, 0, 1],
    }
}

/// Every basic unitary factor on the parameter grid with size at most
/// `params.max_size`. Over `C` only characters and Stein factors occur.
pub fn catalogue(field: Field, params: &CatalogueParams) -> Vec<BasicRep> {
    let max = params.max_size;
    let mut out = Vec::new();
    for n in 1..=max {
        for &eps in sign_data(field) {
            for t in &params.ts {
                out.push(BasicRep::chi(n, eps, ExactComplex::imaginary(t.clone())));
            }
        }
    }
    for m in (1..).take_while(|m| 2 * m <= max) {
        for s in &params.ss {
            for &eps in sign_data(field) {
                for t in &params.ts {
                    out.push(BasicRep::stein(m, s.clone(), eps, t.clone()));
                }
            }
        }
    }
    if field == Field::Real {
        for m in (1..).take_while(|m| 2 * m <= max) {
            for &k in &params.ks {
                for t in &params.ts {
                    out.push(BasicRep::speh(m, k, t.clone()));
                }
            }
        }
        for m in (1..).take_while(|m| 4 * m <= max) {
            for &k in &params.ks {
                for s in &params.ss {
                    for t in &params.ts {
                        out.push(BasicRep::spehcs(m, k, s.clone(), t.clone()));
                    }
                }
            }
        }
    }
    out
}

/// A random product of catalogue factors with total size at most `max_total`
/// and at least one factor.
pub fn random_product<R: Rng + ?Sized>(
    rng: &mut R,
    field: Field,
    max_total: usize,
    params: &CatalogueParams,
) -> RepExpr {
    let pool = catalogue(field, params);
    let wanted = rng.gen_range(1..=6);
    let mut remaining = max_total;
    let mut factors = Vec::new();
    for _ in 0..wanted {
        let fits: Vec<&BasicRep> = pool
            .iter()
            .filter(|f| f.as_factor().size() <= remaining)
            .collect();
        let Some(pick) = fits.choose(rng) else { break };
        remaining -= pick.as_factor().size();
        factors.push((*pick).clone());
    }
    RepExpr::new(field, factors)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn catalogue_is_valid_and_bounded() {
        for field in [Field::Real, Field::Complex] {
            let cat = catalogue(field, &CatalogueParams::default());
            assert!(!cat.is_empty());
            for f in &cat {
                let e = RepExpr::single(field, f.clone());
                assert!(e.validate().is_valid(), "{e}");
                assert!(e.size() <= 8);
            }
        }
        let real = catalogue(Field::Real, &CatalogueParams::default());
        // 8*2*2 characters, 4*2*2*2 Stein, 4*4*2 Speh, 2*4*2*2 Speh CS
        assert_eq!(real.len(), 32 + 32 + 32 + 32);
    }

    #[test]
    fn random_products_respect_budget() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..50 {
            let e = random_product(&mut rng, Field::Real, 40, &CatalogueParams::default());
            assert!(e.size() <= 40 && !e.factors.is_empty());
            assert!(e.validate().is_valid());
        }
    }
}
