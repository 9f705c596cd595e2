//! Operators on computed functions: joins, unions, join powers, generic rows
//! and columns, and variable substitutions.

use alloc::boxed::Box;
use alloc::vec;

use crate::bivratfun::{BivariateRational, LaurentPoly, TPoly};

use super::{JoinKind, Provenance, SubstKind, ZetaError, ZetaResult};

fn x_t(c: i64) -> BivariateRational {
    BivariateRational::monomial(1, c, 1)
}

/// `(1 - X^a T)` as a value.
fn factor(a: i64) -> BivariateRational {
    BivariateRational::from_tpoly(TPoly::factor(a))
}

/// Sanity check on a formula output: the series starts with `α₀ = 1`.
fn check_constant_term(w: &BivariateRational) {
    assert!(w.coefficient(0).is_one(), "formula output does not start with 1: {w}");
}

/// `W⁻_{Γ₁ ∨ Γ₂}` from `W⁻_{Γ_i}` and the vertex counts `n_i ≥ 1`.
///
/// With `z_i = X^{-n_i}`, the value is
/// `(z₁z₂XT - 1 + W₁(X, z₂T)(1 - z₂T)(1 - z₂XT) + W₂(X, z₁T)(1 - z₁T)(1 - z₁XT)) / ((1 - T)(1 - XT))`.
pub fn join_wminus(w1: &ZetaResult, n1: usize, w2: &ZetaResult, n2: usize) -> Result<ZetaResult, ZetaError> {
    if n1 == 0 || n2 == 0 {
        return Err(ZetaError::InvalidArgument("join formula needs nonempty graphs"));
    }
    let (e1, e2) = (-(n1 as i64), -(n2 as i64));
    let a = w1.value.subst_t_scale(e2) * factor(e2) * factor(e2 + 1);
    let b = w2.value.subst_t_scale(e1) * factor(e1) * factor(e1 + 1);
    let sum = &(&x_t(e1 + e2 + 1) - &BivariateRational::one()) + &(&a + &b);
    let value = sum.div_by_factor(0).div_by_factor(1);
    check_constant_term(&value);
    Ok(ZetaResult::new(
        value,
        Provenance::JoinFormula { kind: JoinKind::Minus { n1, n2 }, inputs: vec![w1.clone(), w2.clone()] },
    ))
}

/// `W♯_{Γ₁ ∨ Γ₂}`:
/// `(z₁z₂T - 1 + W♯₁(X, z₂T)(1 - z₂T)² + W♯₂(X, z₁T)(1 - z₁T)²) / (1 - T)²`.
pub fn wsharp_join(w1: &ZetaResult, n1: usize, w2: &ZetaResult, n2: usize) -> Result<ZetaResult, ZetaError> {
    if n1 == 0 || n2 == 0 {
        return Err(ZetaError::InvalidArgument("join formula needs nonempty graphs"));
    }
    let (e1, e2) = (-(n1 as i64), -(n2 as i64));
    let a = w1.value.subst_t_scale(e2) * factor(e2) * factor(e2);
    let b = w2.value.subst_t_scale(e1) * factor(e1) * factor(e1);
    let sum = &(&x_t(e1 + e2) - &BivariateRational::one()) + &(&a + &b);
    let value = sum.div_by_factor(0).div_by_factor(0);
    check_constant_term(&value);
    Ok(ZetaResult::new(
        value,
        Provenance::JoinFormula { kind: JoinKind::Sharp { n1, n2 }, inputs: vec![w1.clone(), w2.clone()] },
    ))
}

/// `W♯_{Γ₁ ⊕ Γ₂} = W♯₁ *_T W♯₂`.
pub fn wsharp_disjoint(w1: &ZetaResult, w2: &ZetaResult) -> ZetaResult {
    hyper_disjoint(w1, w2)
}

/// `W_{H₁ ⊕ H₂} = W₁ *_T W₂`.
pub fn hyper_disjoint(w1: &ZetaResult, w2: &ZetaResult) -> ZetaResult {
    ZetaResult::new(
        w1.value.hadamard_t(&w2.value),
        Provenance::HadamardProduct { left: Box::new(w1.clone()), right: Box::new(w2.clone()) },
    )
}

/// `W_{H₁ ⊛ H₂}` for `H_i` with `n_i` vertices and `m_i` hyperedges. With
/// `y_i = X^{n_i}` and `z_i = X^{-m_i}` this is
/// `(z₁z₂T - 1 + W₁(X, z₂T)(1 - z₂T)(1 - y₁z₁z₂T) + W₂(X, z₁T)(1 - z₁T)(1 - y₂z₁z₂T)) / ((1 - T)(1 - y₁y₂z₁z₂T))`.
pub fn hyper_complete_union(
    w1: &ZetaResult,
    n1: usize,
    m1: usize,
    w2: &ZetaResult,
    n2: usize,
    m2: usize,
) -> ZetaResult {
    let (y1, y2) = (n1 as i64, n2 as i64);
    let (z1, z2) = (-(m1 as i64), -(m2 as i64));
    let a = w1.value.subst_t_scale(z2) * factor(z2) * factor(y1 + z1 + z2);
    let b = w2.value.subst_t_scale(z1) * factor(z1) * factor(y2 + z1 + z2);
    let sum = &(&x_t(z1 + z2) - &BivariateRational::one()) + &(&a + &b);
    let value = sum.div_by_factor(0).div_by_factor(y1 + y2 + z1 + z2);
    check_constant_term(&value);
    ZetaResult::new(
        value,
        Provenance::JoinFormula {
            kind: JoinKind::CompleteUnion { n1, m1, n2, m2 },
            inputs: vec![w1.clone(), w2.clone()],
        },
    )
}

/// `W_{H^𝟏} = (1 - X^{-1}T)/(1 - T) · W_H(X, X^{-1}T)`.
pub fn hyper_covering(w: &ZetaResult) -> ZetaResult {
    let value = (w.value.subst_t_scale(-1) * factor(-1)).div_by_factor(0);
    ZetaResult::new(
        value,
        Provenance::Substitution { input: Box::new(w.clone()), kind: SubstKind::CoveringHyperedge },
    )
}

/// `W_{H^𝟎} = W_H`.
pub fn hyper_empty(w: &ZetaResult) -> ZetaResult {
    ZetaResult::new(
        w.value.clone(),
        Provenance::Substitution { input: Box::new(w.clone()), kind: SubstKind::EmptyHyperedge },
    )
}

/// `T ↦ X^c T`; with `c = n` this turns `W⁻_Γ` into `W♭_Γ`.
pub fn flat(w: &ZetaResult, c: i64) -> ZetaResult {
    ZetaResult::new(
        w.value.subst_t_scale(c),
        Provenance::Substitution { input: Box::new(w.clone()), kind: SubstKind::TScale(c) },
    )
}

/// Inverse of [`flat`] for a graph on `n` vertices.
pub fn unflat(w: &ZetaResult, n: usize) -> ZetaResult {
    flat(w, -(n as i64))
}

/// `W♭_{Γ^{∨k}} = ((k - 1)(XT - 1) + k·W♭_Γ·(1 - X^n T)(1 - X^{n+1} T)) / ((1 - X^{kn} T)(1 - X^{kn+1} T))`.
pub fn join_power_flat(w_flat: &ZetaResult, n: usize, k: usize) -> ZetaResult {
    let (n_, k_) = (n as i64, k as i64);
    let first = (&x_t(1) - &BivariateRational::one()).mul_laurent(&LaurentPoly::constant(k_ - 1));
    let second = (w_flat.value.clone() * factor(n_) * factor(n_ + 1))
        .mul_laurent(&LaurentPoly::constant(k_));
    let value = (&first + &second).div_by_factor(k_ * n_).div_by_factor(k_ * n_ + 1);
    ZetaResult::new(
        value,
        Provenance::JoinFormula { kind: JoinKind::Power { n, k }, inputs: vec![w_flat.clone()] },
    )
}

/// Appends a generic row to an `n × m` matrix: `Z · (1 - X^{n-m}T)/(1 - X^{n-m+1}T)`.
pub fn add_generic_row(z: &ZetaResult, n: usize, m: usize) -> ZetaResult {
    let d = n as i64 - m as i64;
    let value = (z.value.clone() * factor(d)).div_by_factor(d + 1);
    ZetaResult::new(
        value,
        Provenance::RowTransform { input: Box::new(z.clone()), rows: n, cols: m, column: false },
    )
}

/// Appends a generic column to an `n × m` matrix: `Z(X^{-1}T) · (1 - X^{-1}T)/(1 - T)`.
pub fn add_generic_column(z: &ZetaResult, n: usize, m: usize) -> ZetaResult {
    let value = (z.value.subst_t_scale(-1) * factor(-1)).div_by_factor(0);
    ZetaResult::new(
        value,
        Provenance::RowTransform { input: Box::new(z.clone()), rows: n, cols: m, column: true },
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::incidence::Graph;
    use crate::zetacalc::{wminus, wsharp};
    use alloc::string::ToString;

    #[test]
    fn k1_join_k1() {
        let k1 = wminus(&Graph::empty(1)).unwrap();
        let j = join_wminus(&k1, 1, &k1, 1).unwrap();
        assert_eq!(j.value, wminus(&Graph::complete(2)).unwrap().value);
        assert_eq!(j.value.to_string(), "(1 - X^-1*T) / (1 - X*T) * (1 - T)");
        assert_eq!(j.replay().unwrap(), j.value);
    }

    #[test]
    fn sharp_join_and_union() {
        let k1 = wsharp(&Graph::empty(1)).unwrap();
        let j = wsharp_join(&k1, 1, &k1, 1).unwrap();
        assert_eq!(j.value.to_string(), "(1 - X^-2*T) / (1 - T)^2");
        let u = wsharp_disjoint(&k1, &k1);
        assert_eq!(u.value.to_string(), "(1 + X^-2*T - 4*X^-1*T + T + X^-2*T^2) / (1 - T)^3");
    }

    #[test]
    fn join_power_edge_cases() {
        let k2 = wminus(&Graph::complete(2)).unwrap();
        let f = flat(&k2, 2);
        assert_eq!(join_power_flat(&f, 2, 1).value, f.value);
        assert_eq!(join_power_flat(&f, 2, 0).value, BivariateRational::geometric(0));
        assert_eq!(unflat(&f, 2).value, k2.value);
    }

    #[test]
    fn rejects_empty_join_side() {
        let k1 = wminus(&Graph::empty(1)).unwrap();
        assert!(join_wminus(&k1, 0, &k1, 1).is_err());
    }

    #[test]
    fn generic_row_on_zero_column_matrix() {
        let z = wminus(&Graph::empty(1)).unwrap();
        assert_eq!(add_generic_row(&z, 1, 0).value, BivariateRational::geometric(2));
        assert_eq!(add_generic_row(&z, 1, 1).value.to_string(), "(1 - T) / (1 - X*T)^2");
    }
}
