use alloc::vec;
use alloc::vec::Vec;

use super::LinmatError;
use crate::incidence::Graph;

/// Shape of `H[V′|E′]` for `H = Inc(Γ)` and `|V′| = |E′|`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SquareClass {
    /// An isolated vertex or an empty restricted hyperedge.
    Degenerate,
    /// `(V′, E′)` is a connected unicyclic loopless subgraph.
    U1,
    /// A single restricted hyperedge of size 1 (given as an edge index of `Γ`)
    /// whose removal leaves a spanning tree of `V′`.
    U2 { loop_edge: usize },
    /// Connected parts as `(vertices, edges)`, in order of smallest vertex.
    Disconnected(Vec<(Vec<usize>, Vec<usize>)>),
}

/// Classifies `Inc(Γ)[V′|E′]`, with `edges` indexing `Γ`'s edges in
/// lexicographic order.
pub fn classify_square_subhypergraph(g: &Graph, vertices: &[usize], edges: &[usize]) -> Result<SquareClass, LinmatError> {
    if vertices.len() != edges.len() {
        return Err(LinmatError::SizeMismatch(vertices.len(), edges.len()));
    }
    let inc = g.incidence_hypergraph();
    let restricted = inc.restrict(vertices, edges).map_err(|_| {
        let bad = vertices.iter().copied().find(|&v| v >= g.vertex_count()).or(edges.iter().copied().find(|&e| e >= g.edge_count()));
        LinmatError::OutOfRange { index: bad.unwrap_or(0), len: g.vertex_count().max(g.edge_count()) }
    })?;
    let n = vertices.len();
    let supports = restricted.supports();
    if supports.iter().any(Vec::is_empty) {
        return Ok(SquareClass::Degenerate);
    }
    let mut covered = vec![false; n];
    for s in supports {
        for &v in s {
            covered[v] = true;
        }
    }
    if covered.iter().any(|&c| !c) {
        return Ok(SquareClass::Degenerate);
    }

    // union-find over positions in V′
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while p[r] != r {
            r = p[r];
        }
        p[x] = r;
        r
    }
    for s in supports {
        for w in s.windows(2) {
            let (a, b) = (find(&mut parent, w[0]), find(&mut parent, w[1]));
            parent[a] = b;
        }
    }
    let mut roots: Vec<usize> = Vec::new();
    for v in 0..n {
        let r = find(&mut parent, v);
        if !roots.contains(&r) {
            roots.push(r);
        }
    }
    if roots.len() > 1 {
        let parts = roots
            .iter()
            .map(|&r| {
                let vs: Vec<usize> = (0..n).filter(|&v| find(&mut parent, v) == r).map(|v| vertices[v]).collect();
                let es: Vec<usize> = (0..edges.len())
                    .filter(|&i| find(&mut parent, supports[i][0]) == r)
                    .map(|i| edges[i])
                    .collect();
                (vs, es)
            })
            .collect();
        return Ok(SquareClass::Disconnected(parts));
    }
    let loops: Vec<usize> = (0..edges.len()).filter(|&i| supports[i].len() == 1).collect();
    match loops.as_slice() {
        [] => Ok(SquareClass::U1),
        [i] => Ok(SquareClass::U2 { loop_edge: edges[*i] }),
        _ => unreachable!("connected square incidence structure has at most one loop"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        let tri = Graph::cycle(3);
        assert_eq!(classify_square_subhypergraph(&tri, &[0, 1, 2], &[0, 1, 2]).unwrap(), SquareClass::U1);
        let p2 = Graph::path(2);
        assert_eq!(classify_square_subhypergraph(&p2, &[0], &[0]).unwrap(), SquareClass::U2 { loop_edge: 0 });
        let p3 = Graph::path(3);
        assert_eq!(classify_square_subhypergraph(&p3, &[0, 2], &[0, 1]).unwrap(), SquareClass::Disconnected(vec![(vec![0], vec![0]), (vec![2], vec![1])]));
        let k1k2 = crate::incidence::disjoint_union(&Graph::empty(1), &Graph::complete(2));
        assert_eq!(classify_square_subhypergraph(&k1k2, &[0], &[0]).unwrap(), SquareClass::Degenerate);
        assert!(matches!(classify_square_subhypergraph(&tri, &[0], &[0, 1]), Err(LinmatError::SizeMismatch(1, 2))));
    }
}
