use alloc::vec;
use alloc::vec::Vec;

use crate::bivratfun::{BivariateRational, LaurentPoly, TPoly};
use crate::incidence::Hypergraph;

use super::{Provenance, ZetaError, ZetaResult};

pub const DEFAULT_VERTEX_LIMIT: usize = 12;

/// `W_H` by the flag sum over chains of subsets of `V`.
pub fn master_w_h(h: &Hypergraph) -> Result<ZetaResult, ZetaError> {
    master_w_h_with_limit(h, DEFAULT_VERTEX_LIMIT)
}

pub fn master_w_h_with_limit(h: &Hypergraph, limit: usize) -> Result<ZetaResult, ZetaError> {
    let n = h.vertex_count();
    if n > limit {
        return Err(ZetaError::TooLarge { vertices: n, limit });
    }
    let masks = h.support_masks()?;
    let cost: Vec<i64> = (0..1u64 << n)
        .map(|u| {
            let touched = masks.iter().filter(|&&e| e & u != 0).count();
            u.count_ones() as i64 - touched as i64
        })
        .collect();
    let weight = &LaurentPoly::one() - &LaurentPoly::x_pow(-1);
    let value = chain_sum(n, &cost, &weight);
    Ok(ZetaResult::new(value, Provenance::MasterFormula { hypergraph: h.clone() }))
}

/// `Σ_y w^{|sup y|} ∏_{U ∈ y} X^{c(U)}T / (1 - X^{c(U)}T)` over all chains `y`
/// of distinct subsets of an `n`-set (the empty chain and `∅` included).
///
/// With `g(S)` the sum over chains whose largest member is `S`,
/// `g(S) = t(S)·(1 + Σ_{S' ⊊ S} g(S'))` and the total is `1 + Σ_S w^{|S|} g(S)`.
pub(crate) fn chain_sum(n: usize, cost: &[i64], weight: &LaurentPoly) -> BivariateRational {
    let full = 1usize << n;
    debug_assert_eq!(cost.len(), full);
    let mut g: Vec<BivariateRational> = Vec::with_capacity(full);
    for s in 0..full {
        let mut acc = BivariateRational::one();
        // Proper submasks of s, all smaller than s and hence already known.
        let mut sub = s;
        while sub > 0 {
            sub = (sub - 1) & s;
            acc = acc.add_unreduced(&g[sub]);
        }
        let c = cost[s];
        let t = BivariateRational::raw(TPoly::monomial(1, c, 1), [(c, 1)].into_iter().collect());
        g.push((&acc * &t).reduced());
    }

    let mut powers = vec![LaurentPoly::one()];
    for k in 1..=n {
        powers.push(&powers[k - 1] * weight);
    }
    let mut total = BivariateRational::one();
    for (s, gs) in g.iter().enumerate() {
        let w = &powers[s.count_ones() as usize];
        total = total.add_unreduced(&gs.mul_laurent(w));
    }
    total.reduced()
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    #[test]
    fn single_vertex() {
        let w = master_w_h(&Hypergraph::edgeless(1)).unwrap().value;
        assert_eq!(w, BivariateRational::geometric(1));
        let w0 = master_w_h(&Hypergraph::edgeless(1).with_empty_hyperedge()).unwrap().value;
        assert_eq!(w0, w);
    }

    #[test]
    fn single_full_hyperedge() {
        let h = Hypergraph::edgeless(1).with_covering_hyperedge();
        let w = master_w_h(&h).unwrap().value;
        assert_eq!(w.to_string(), "(1 - X^-1*T) / (1 - T)^2");
    }

    #[test]
    fn size_guard() {
        let h = Hypergraph::edgeless(5);
        assert_eq!(
            master_w_h_with_limit(&h, 4).unwrap_err(),
            ZetaError::TooLarge { vertices: 5, limit: 4 }
        );
    }
}
