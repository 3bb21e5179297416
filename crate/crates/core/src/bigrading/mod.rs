//! Bigradings of `gl(n)` by two commuting diagonal elements, PBW monomials
//! and the coinvariant map `Xi`, plus a two-generator enveloping algebra.

mod basis;
mod enveloping;
mod pbw;

pub use basis::{
    build_bigrading, build_unshifted, check_condition, check_condition_with, group_of, stabilizes,
    BigradedBasis, ConditionReport, Unit, WeightConvention, XiCharacter,
};
pub use enveloping::{ad_power_identity, AdIdentityReport, TwoGen};
pub use pbw::{
    ad_weight, classify_monomial, enumerate_monomials, evaluate_symbol, key_depth_consistent, key_functional,
    verify_keylemma_premises, xi_apply, Classification, KeyLemmaReport, PBWMonomial, XiImage,
};
