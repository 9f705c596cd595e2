//! Nonzero minors against the selector and animation monomials that should
//! parameterize them.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::One;

use super::matrix::{build_c_graph, build_c_hyper, Sign};
use super::minors::{nonzero_minors_with_guard, unsigned_minor_set};
use super::poly::SignedMonomialPolynomial;
use super::LinmatError;
use crate::incidence::{Graph, Hypergraph};
use crate::mappings::{for_each_animation, for_each_selector, AnimationFilter};

/// Outcome for one minor size `k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MinorCheck {
    pub k: usize,
    pub expected: BTreeSet<SignedMonomialPolynomial>,
    pub found: BTreeSet<SignedMonomialPolynomial>,
}

impl MinorCheck {
    pub fn passed(&self) -> bool {
        self.expected == self.found
    }
}

/// `{mon φ : φ ∈ Sel_k(H)}`.
pub fn selector_monomials(h: &Hypergraph, k: usize) -> BTreeSet<SignedMonomialPolynomial> {
    let mut out = BTreeSet::new();
    for_each_selector(h, Some(k), |phi| {
        out.insert(SignedMonomialPolynomial::term(BigInt::one(), phi.monomial()));
    });
    out
}

/// `{mon α : α ∈ Fix_k(Γ)}` for sign `-`, `{2^{ol(α)} mon α : α ∈ Ods_k(Γ)}` for `+`.
pub fn animation_monomials(g: &Graph, sign: Sign, k: usize) -> BTreeSet<SignedMonomialPolynomial> {
    let class = if sign.is_plus() { AnimationFilter::Ods } else { AnimationFilter::Fix };
    let mut out = BTreeSet::new();
    for_each_animation(g, class, Some(k), |alpha| {
        let coeff = if sign.is_plus() { BigInt::from(1u8) << alpha.classify().odlen } else { BigInt::one() };
        out.insert(SignedMonomialPolynomial::term(coeff, alpha.monomial()));
    });
    out
}

/// One [`MinorCheck`] per `k = 0..=min(f, m)` for `C_H`.
pub fn check_selectors(h: &Hypergraph, guard: u128) -> Result<Vec<MinorCheck>, LinmatError> {
    let c = build_c_hyper(h);
    (0..=c.rows().min(c.cols()))
        .map(|k| {
            let found = unsigned_minor_set(&nonzero_minors_with_guard(&c, k, guard)?);
            Ok(MinorCheck { k, expected: selector_monomials(h, k), found })
        })
        .collect()
}

/// One [`MinorCheck`] per `k = 0..=min(m, n)` for `C^±_Γ`.
pub fn check_animations(g: &Graph, sign: Sign, guard: u128) -> Result<Vec<MinorCheck>, LinmatError> {
    let c = build_c_graph(g, sign);
    (0..=c.rows().min(c.cols()))
        .map(|k| {
            let found = unsigned_minor_set(&nonzero_minors_with_guard(&c, k, guard)?);
            Ok(MinorCheck { k, expected: animation_monomials(g, sign, k), found })
        })
        .collect()
}
