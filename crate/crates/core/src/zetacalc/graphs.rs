use alloc::boxed::Box;
use alloc::vec::Vec;

use crate::bivratfun::LaurentPoly;
use crate::incidence::{complete_union, cotree, disjoint_union_hyper, Cotree, Graph, Hypergraph, IncidenceError};

use super::master::{chain_sum, master_w_h, DEFAULT_VERTEX_LIMIT};
use super::{Provenance, SubstKind, ZetaError, ZetaResult};

/// `W♯_Γ` from neighbourhood excesses `ν(U) = |N[U] \ U|`. Loops are ignored:
/// the reflexive closure has the same closed neighbourhoods.
pub fn wsharp(g: &Graph) -> Result<ZetaResult, ZetaError> {
    let n = g.vertex_count();
    if n == 0 {
        return Err(ZetaError::EmptyGraph);
    }
    if n > DEFAULT_VERTEX_LIMIT {
        return Err(ZetaError::TooLarge { vertices: n, limit: DEFAULT_VERTEX_LIMIT });
    }
    let nbhd = g.closed_neighborhood_masks()?;
    let cost: Vec<i64> = (0..1u64 << n)
        .map(|u| {
            let closed = (0..n).filter(|&v| u >> v & 1 == 1).fold(0u64, |m, v| m | nbhd[v]);
            (closed & !u).count_ones() as i64
        })
        .collect();
    let weight = &LaurentPoly::one() - &LaurentPoly::x_pow(1);
    let value = chain_sum(n, &cost, &weight).subst_x_inverse();
    Ok(ZetaResult::new(value, Provenance::WsharpFormula { graph: g.clone() }))
}

/// `W♯_Γ` as `W_{Adj(Γ̂)}`.
pub fn wsharp_via_master(g: &Graph) -> Result<ZetaResult, ZetaError> {
    if g.vertex_count() == 0 {
        return Err(ZetaError::EmptyGraph);
    }
    master_w_h(&g.reflexive_closure().adjacency_hypergraph())
}

/// The modelling hypergraph of a cograph: `n` vertices, `n - 1` hyperedges,
/// with `W_H = W⁻_Γ`. Vertex `v` of the result is vertex `v` of `g`.
pub fn model_hypergraph(g: &Graph) -> Result<Hypergraph, ZetaError> {
    if !g.is_loopless() {
        return Err(ZetaError::HasLoops);
    }
    let tree = match cotree(g) {
        Ok(t) => t,
        Err(IncidenceError::NotCograph) => return Err(ZetaError::Unsupported("not a cograph")),
        Err(IncidenceError::Empty) => return Err(ZetaError::EmptyGraph),
        Err(e) => return Err(e.into()),
    };
    let (h, leaves) = build_model(&tree);
    let n = g.vertex_count();
    assert_eq!(h.vertex_count(), n, "model has one vertex per graph vertex");
    assert_eq!(h.hyperedge_count(), n - 1, "model has n - 1 hyperedges");
    // Model vertex i stands for graph vertex leaves[i].
    Ok(h.relabel_vertices(&leaves))
}

fn build_model(t: &Cotree) -> (Hypergraph, Vec<usize>) {
    match t {
        Cotree::Leaf(v) => (Hypergraph::edgeless(1), alloc::vec![*v]),
        Cotree::Union(children) | Cotree::Join(children) => {
            let is_join = matches!(t, Cotree::Join(_));
            let mut parts = children.iter().map(build_model);
            let (mut acc, mut leaves) = parts.next().expect("inner cotree nodes have children");
            for (h, l) in parts {
                acc = if is_join {
                    complete_union(&acc, &h).with_covering_hyperedge()
                } else {
                    disjoint_union_hyper(&acc, &h).with_empty_hyperedge()
                };
                leaves.extend(l);
            }
            (acc, leaves)
        }
    }
}

/// `W⁻_Γ` for a loopless cograph, via its modelling hypergraph.
pub fn wminus(g: &Graph) -> Result<ZetaResult, ZetaError> {
    let h = model_hypergraph(g)?;
    let value = master_w_h(&h)?.value;
    Ok(ZetaResult::new(value, Provenance::CographModel { graph: g.clone() }))
}

/// `W⁻_Γ(X, X^m T)` with `m = |E|`.
pub fn class_counting(g: &Graph) -> Result<ZetaResult, ZetaError> {
    let w = wminus(g)?;
    let c = g.edge_count() as i64;
    let value = w.value.subst_t_scale(c);
    Ok(ZetaResult::new(value, Provenance::Substitution { input: Box::new(w), kind: SubstKind::TScale(c) }))
}

/// `W_{Adj(Γ)}` for reflexive `Γ`, the common value of `W⁺_Γ` and `W⁻_Γ`.
pub fn rgmt_values(g: &Graph) -> Result<ZetaResult, ZetaError> {
    if g.vertex_count() == 0 {
        return Err(ZetaError::EmptyGraph);
    }
    if !g.is_reflexive() {
        return Err(ZetaError::NotReflexive);
    }
    master_w_h(&g.adjacency_hypergraph())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::incidence::{disjoint_union, join};
    use alloc::string::ToString;

    #[test]
    fn table_rows_small() {
        let k1 = wsharp(&Graph::empty(1)).unwrap().value;
        assert_eq!(k1.to_string(), "(1 - X^-1*T) / (1 - T)^2");
        let k2 = wsharp(&Graph::complete(2)).unwrap().value;
        assert_eq!(k2.to_string(), "(1 - X^-2*T) / (1 - T)^2");
        let p3 = wsharp(&Graph::path(3)).unwrap().value;
        assert_eq!(p3.to_string(), "(1 + X^-3*T - 4*X^-2*T + X^-1*T + X^-4*T^2) / (1 - T)^2 * (1 - X^-1*T)");
    }

    #[test]
    fn wsharp_paths_agree() {
        for g in [Graph::path(3), Graph::cycle(4), Graph::complete(3)] {
            assert_eq!(wsharp(&g).unwrap().value, wsharp_via_master(&g).unwrap().value);
        }
    }

    #[test]
    fn model_of_k2() {
        let h = model_hypergraph(&Graph::complete(2)).unwrap();
        assert_eq!(h.supports(), &[alloc::vec![0, 1]]);
    }

    #[test]
    fn wminus_join_example() {
        let two = disjoint_union(&Graph::empty(1), &Graph::empty(1));
        let g = join(&Graph::complete(2), &two);
        let w = wminus(&g).unwrap().value;
        assert_eq!(w.to_string(), "(1 - X^-2*T - X^-1*T + X^-3*T^2) / (1 - X*T) * (1 - T)^2");
        assert_eq!(wminus(&Graph::path(4)).unwrap_err(), ZetaError::Unsupported("not a cograph"));
        assert_eq!(wminus(&Graph::empty(1)).unwrap().value.to_string(), "1 / (1 - X*T)");
    }

    #[test]
    fn class_counting_examples() {
        assert_eq!(class_counting(&Graph::empty(1)).unwrap().value.to_string(), "1 / (1 - X*T)");
        assert_eq!(
            class_counting(&Graph::complete(2)).unwrap().value.to_string(),
            "(1 - T) / (1 - X^2*T) * (1 - X*T)"
        );
        assert_eq!(class_counting(&Graph::empty(2)).unwrap().value.to_string(), "1 / (1 - X^2*T)");
    }

    #[test]
    fn rgmt_requires_loops() {
        assert_eq!(rgmt_values(&Graph::path(2)).unwrap_err(), ZetaError::NotReflexive);
        let w = rgmt_values(&Graph::empty(1).reflexive_closure()).unwrap().value;
        assert_eq!(w.to_string(), "(1 - X^-1*T) / (1 - T)^2");
    }
}
