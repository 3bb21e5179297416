//! Derivatives, adduced representations and related transforms.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::partitions::Composition;
use crate::reps::{CharacterRep, RepExpr};
use crate::scalar::{rat, ExactComplex};

/// Result of a derivative: either a representation or the zero object.
///
/// The zero object differs from the trivial representation of `G_0`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Derivative {
    Zero,
    Rep(RepExpr),
}

impl Derivative {
    pub fn is_zero(&self) -> bool {
        matches!(self, Derivative::Zero)
    }

    pub fn rep(&self) -> Option<&RepExpr> {
        match self {
            Derivative::Zero => None,
            Derivative::Rep(e) => Some(e),
        }
    }
}

impl fmt::Display for Derivative {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Derivative::Zero => write!(f, "0"),
            Derivative::Rep(e) => write!(f, "{e}"),
        }
    }
}

/// The k-th derivative of a product of `k` characters.
///
/// For `order == k` every factor is restricted to one size smaller and
/// factors of size 0 are dropped. For `order > k` (the depth of a
/// monomial) the result is the zero object. Orders strictly between are
/// not determined.
pub fn derivative_monomial(e: &RepExpr, order: usize) -> Result<Derivative> {
    e.ensure_valid()?;
    let mut chars = Vec::with_capacity(e.factors.len());
    for f in &e.factors {
        match f.as_character() {
            Some(c) => chars.push(c.clone()),
            None => {
                return Err(Error::domain(format!(
                    "derivative_monomial needs character factors, found {f}"
                )))
            }
        }
    }
    let k = chars.len();
    if order == k {
        let restricted = chars.iter().filter_map(CharacterRep::restrict);
        Ok(Derivative::Rep(RepExpr::monomial(e.field, restricted)))
    } else if order > k {
        Ok(Derivative::Zero)
    } else {
        Err(Error::Undetermined(format!(
            "derivative of order {order} below the depth {k} of a monomial has no closed formula"
        )))
    }
}

/// The adduced representation, computed factorwise.
pub fn adduce(e: &RepExpr) -> Result<RepExpr> {
    e.ensure_valid()?;
    let factors = e.factors.iter().filter_map(|f| f.as_factor().adduce()).collect();
    Ok(RepExpr::new(e.field, factors))
}

/// The highest derivative `E^depth`, which coincides with the adduced
/// representation.
pub fn highest_derivative(e: &RepExpr) -> Result<RepExpr> {
    adduce(e)
}

/// The attached monomial: all attached characters sorted by non-ascending
/// real part of `z`, ties kept in attachment order.
pub fn igeq(e: &RepExpr) -> Result<RepExpr> {
    e.ensure_valid()?;
    let mut chars: Vec<CharacterRep> = e
        .factors
        .iter()
        .flat_map(|f| f.as_factor().attached_characters())
        .collect();
    chars.sort_by(|a, b| b.z.re.cmp(&a.z.re));
    Ok(RepExpr::monomial(e.field, chars))
}

/// Dimension of the space of degenerate Whittaker functionals.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum WhittakerDim {
    Zero,
    One,
    Unknown(String),
}

impl fmt::Display for WhittakerDim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            WhittakerDim::Zero => write!(f, "0"),
            WhittakerDim::One => write!(f, "1"),
            WhittakerDim::Unknown(reason) => write!(f, "unknown ({reason})"),
        }
    }
}

/// Determines `dim Wh*_lambda(e)` by applying the parts of `lambda` in order.
pub fn whittaker_dim(e: &RepExpr, lambda: &Composition) -> Result<WhittakerDim> {
    e.ensure_valid()?;
    if lambda.size() != e.size() {
        return Err(Error::domain(format!(
            "composition {lambda} has size {} but the representation lives on G_{}",
            lambda.size(),
            e.size()
        )));
    }
    let mut current = e.clone();
    for (step, &part) in lambda.parts().iter().enumerate() {
        let depth = current.depth()?;
        if part > depth {
            return Ok(WhittakerDim::Zero);
        }
        if part < depth {
            return Ok(WhittakerDim::Unknown(format!(
                "step {}: part {part} is below the current depth {depth}; whether \
                 the derivative B^d preserves irreducibility is open, so \
                 sub-depth derivatives are not determined",
                step + 1
            )));
        }
        current = adduce(&current)?;
    }
    Ok(WhittakerDim::One)
}

/// A multiset of complex numbers, stored sorted.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct InfCharMultiset {
    elements: Vec<ExactComplex>,
}

impl InfCharMultiset {
    pub fn new(mut elements: Vec<ExactComplex>) -> Self {
        elements.sort();
        InfCharMultiset { elements }
    }

    pub fn elements(&self) -> &[ExactComplex] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }
}

impl fmt::Display for InfCharMultiset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let words: Vec<String> = self.elements.iter().map(|x| x.to_string()).collect();
        write!(f, "{{{}}}", words.join(", "))
    }
}

/// All multisets obtained by deleting `k` elements of `s` and adding `1/2`
/// to each survivor.
pub fn infchar_transform(s: &InfCharMultiset, k: usize) -> Result<BTreeSet<InfCharMultiset>> {
    let n = s.len();
    if k == 0 || k > n {
        return Err(Error::domain(format!(
            "order {k} is outside 1..={n} for a multiset of {n} elements"
        )));
    }
    let half = ExactComplex::real(rat(1, 2));
    let mut out = BTreeSet::new();
    for kept in itertools::Itertools::combinations(0..n, n - k) {
        let survivors = kept.iter().map(|&i| &s.elements[i] + &half).collect();
        out.insert(InfCharMultiset::new(survivors));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::reps::{parse_expr, Field};
    use crate::scalar::int;

    fn real(text: &str) -> RepExpr {
        parse_expr(text, Field::Real).unwrap()
    }

    #[test]
    fn monomial_derivative_examples() {
        let e = real("chi(3,0,1/2) x chi(2,1,-1)");
        let d = derivative_monomial(&e, 2).unwrap();
        assert_eq!(d, Derivative::Rep(real("chi(2,0,1/2) x chi(1,1,-1)")));

        let e = real("chi(1,0,0) x chi(1,1,0) x chi(1,0,2)");
        assert_eq!(
            derivative_monomial(&e, 3).unwrap(),
            Derivative::Rep(RepExpr::trivial(Field::Real))
        );

        let e = real("chi(2,0,0) x chi(2,0,1)");
        assert_eq!(derivative_monomial(&e, 3).unwrap(), Derivative::Zero);
        assert!(matches!(derivative_monomial(&e, 1), Err(Error::Undetermined(_))));
        assert!(matches!(
            derivative_monomial(&real("speh(2,1)"), 2),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn adduce_examples() {
        assert_eq!(adduce(&real("spehcs(2,3,1/4)")).unwrap(), real("spehcs(1,3,1/4)"));
        assert_eq!(
            adduce(&real("chi(1,1,0)")).unwrap(),
            RepExpr::trivial(Field::Real)
        );
        assert_eq!(highest_derivative(&real("speh(2,3)")).unwrap(), real("speh(1,3)"));
        assert_eq!(
            highest_derivative(&RepExpr::trivial(Field::Real)).unwrap(),
            RepExpr::trivial(Field::Real)
        );
    }

    #[test]
    fn igeq_examples() {
        assert_eq!(
            igeq(&real("speh(2,2)")).unwrap(),
            real("chi(2,1,1) x chi(2,0,-1)")
        );
        assert_eq!(igeq(&real("chi(3,1,2*i)")).unwrap(), real("chi(3,1,2*i)"));
        // equal real parts keep attachment order
        let e = real("chi(1,0,0) x chi(1,1,0)");
        assert_eq!(igeq(&e).unwrap(), e);
    }

    #[test]
    fn whittaker_examples() {
        let c = |s: &str| s.parse::<Composition>().unwrap();
        let speh = real("speh(2,3)");
        assert_eq!(whittaker_dim(&speh, &c("(2,2)")).unwrap(), WhittakerDim::One);
        assert_eq!(whittaker_dim(&speh, &c("(3,1)")).unwrap(), WhittakerDim::Zero);
        let cs = real("spehcs(2,1,1/3)");
        assert!(matches!(
            whittaker_dim(&cs, &c("(2,2,2,2)")).unwrap(),
            WhittakerDim::Unknown(_)
        ));
        assert!(whittaker_dim(&speh, &c("(2,1)")).is_err());
    }

    #[test]
    fn infchar_examples() {
        let x = |v: i64| ExactComplex::real(int(v));
        let h = |v: i64| ExactComplex::real(rat(2 * v + 1, 2));
        let s = InfCharMultiset::new(vec![x(0), x(1), x(2)]);
        let got = infchar_transform(&s, 1).unwrap();
        let want: BTreeSet<_> = [
            InfCharMultiset::new(vec![h(1), h(2)]),
            InfCharMultiset::new(vec![h(0), h(2)]),
            InfCharMultiset::new(vec![h(0), h(1)]),
        ]
        .into_iter()
        .collect();
        assert_eq!(got, want);

        let all = infchar_transform(&s, 3).unwrap();
        assert_eq!(all.len(), 1);
        assert!(all.iter().next().unwrap().is_empty());

        let dup = InfCharMultiset::new(vec![x(0), x(0), x(1)]);
        assert_eq!(infchar_transform(&dup, 1).unwrap().len(), 2);
        assert!(infchar_transform(&dup, 0).is_err());
        assert!(infchar_transform(&dup, 4).is_err());
    }
}
