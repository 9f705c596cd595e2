use alloc::vec;
use alloc::vec::Vec;

use super::IncidenceError;

/// A hypergraph `(V, E, ι)` stored as one support list per hyperedge.
///
/// Hyperedges are positional: parallel and empty hyperedges are kept.
/// Supports are sorted and free of repeats.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Hypergraph {
    n: usize,
    supports: Vec<Vec<usize>>,
}

impl Hypergraph {
    pub fn new(n: usize, supports: Vec<Vec<usize>>) -> Result<Self, IncidenceError> {
        let mut out = Vec::with_capacity(supports.len());
        for mut s in supports {
            if let Some(&v) = s.iter().find(|&&v| v >= n) {
                return Err(IncidenceError::VertexOutOfRange { vertex: v, count: n });
            }
            s.sort_unstable();
            s.dedup();
            out.push(s);
        }
        Ok(Hypergraph { n, supports: out })
    }

    /// Builds from incidence pairs `(vertex, hyperedge)`.
    pub fn from_incidences<I>(n: usize, m: usize, pairs: I) -> Result<Self, IncidenceError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut supports = vec![Vec::new(); m];
        for (v, e) in pairs {
            if e >= m {
                return Err(IncidenceError::VertexOutOfRange { vertex: e, count: m });
            }
            supports[e].push(v);
        }
        Self::new(n, supports)
    }

    pub(crate) fn from_sorted_supports(n: usize, supports: Vec<Vec<usize>>) -> Self {
        debug_assert!(supports.iter().all(|s| s.windows(2).all(|w| w[0] < w[1])));
        Hypergraph { n, supports }
    }

    /// `n` vertices and no hyperedges.
    pub fn edgeless(n: usize) -> Self {
        Hypergraph { n, supports: Vec::new() }
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn hyperedge_count(&self) -> usize {
        self.supports.len()
    }

    pub fn support(&self, e: usize) -> &[usize] {
        &self.supports[e]
    }

    pub fn supports(&self) -> &[Vec<usize>] {
        &self.supports
    }

    pub fn is_incident(&self, v: usize, e: usize) -> bool {
        self.supports[e].binary_search(&v).is_ok()
    }

    /// Flags `(v, e)` with `v ι e`, ordered lexicographically.
    pub fn flags(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for v in 0..self.n {
            for e in 0..self.supports.len() {
                if self.is_incident(v, e) {
                    out.push((v, e));
                }
            }
        }
        out
    }

    pub fn flag_count(&self) -> usize {
        self.supports.iter().map(Vec::len).sum()
    }

    pub fn nonempty_hyperedge_count(&self) -> usize {
        self.supports.iter().filter(|s| !s.is_empty()).count()
    }

    /// No empty hyperedges and no two hyperedges with the same support.
    pub fn is_simple(&self) -> bool {
        let mut seen = self.supports.clone();
        seen.sort();
        seen.dedup();
        seen.len() == self.supports.len() && self.supports.iter().all(|s| !s.is_empty())
    }

    /// Support bitmask of each hyperedge.
    pub(crate) fn support_masks(&self) -> Result<Vec<u64>, IncidenceError> {
        if self.n > 64 {
            return Err(IncidenceError::TooLarge(self.n));
        }
        Ok(self
            .supports
            .iter()
            .map(|s| s.iter().fold(0u64, |m, &v| m | 1 << v))
            .collect())
    }

    /// 0/1 incidence matrix, rows indexed by vertices.
    pub fn incidence_matrix(&self) -> Vec<Vec<u8>> {
        (0..self.n)
            .map(|v| (0..self.supports.len()).map(|e| self.is_incident(v, e) as u8).collect())
            .collect()
    }

    /// `H^𝟏`: appends a hyperedge containing every vertex.
    pub fn with_covering_hyperedge(&self) -> Hypergraph {
        let mut h = self.clone();
        h.supports.push((0..self.n).collect());
        h
    }

    /// `H^𝟎`: appends an empty hyperedge.
    pub fn with_empty_hyperedge(&self) -> Hypergraph {
        let mut h = self.clone();
        h.supports.push(Vec::new());
        h
    }

    /// `perm[v]` is the new id of vertex `v`.
    pub fn relabel_vertices(&self, perm: &[usize]) -> Hypergraph {
        let supports = self
            .supports
            .iter()
            .map(|s| {
                let mut t: Vec<usize> = s.iter().map(|&v| perm[v]).collect();
                t.sort_unstable();
                t
            })
            .collect();
        Hypergraph { n: self.n, supports }
    }

    /// Reorders hyperedges so that new hyperedge `i` is old hyperedge `order[i]`.
    pub fn permute_hyperedges(&self, order: &[usize]) -> Hypergraph {
        let supports = order.iter().map(|&e| self.supports[e].clone()).collect();
        Hypergraph { n: self.n, supports }
    }

    /// The sub-hypergraph `H[V′|E′]`: vertices `V′`, hyperedges `E′` restricted
    /// to `V′`, relabelled by position.
    pub fn restrict(&self, vertices: &[usize], hyperedges: &[usize]) -> Result<Hypergraph, IncidenceError> {
        let mut pos = vec![None; self.n];
        for (i, &v) in vertices.iter().enumerate() {
            if v >= self.n {
                return Err(IncidenceError::VertexOutOfRange { vertex: v, count: self.n });
            }
            pos[v] = Some(i);
        }
        let mut supports = Vec::with_capacity(hyperedges.len());
        for &e in hyperedges {
            if e >= self.supports.len() {
                return Err(IncidenceError::VertexOutOfRange { vertex: e, count: self.supports.len() });
            }
            let mut s: Vec<usize> = self.supports[e].iter().filter_map(|&v| pos[v]).collect();
            s.sort_unstable();
            supports.push(s);
        }
        Ok(Hypergraph { n: vertices.len(), supports })
    }
}

/// `H₁ ⊕ H₂`.
pub fn disjoint_union_hyper(left: &Hypergraph, right: &Hypergraph) -> Hypergraph {
    let shift = left.n;
    let mut supports = left.supports.clone();
    supports.extend(right.supports.iter().map(|s| s.iter().map(|&v| v + shift).collect()));
    Hypergraph { n: left.n + right.n, supports }
}

/// `H₁ ⊛ H₂`: the disjoint union with every hyperedge enlarged by all
/// vertices of the other side.
pub fn complete_union(left: &Hypergraph, right: &Hypergraph) -> Hypergraph {
    let (n1, n2) = (left.n, right.n);
    let mut supports = Vec::with_capacity(left.supports.len() + right.supports.len());
    for s in &left.supports {
        let mut t = s.clone();
        t.extend(n1..n1 + n2);
        supports.push(t);
    }
    for s in &right.supports {
        let mut t: Vec<usize> = (0..n1).collect();
        t.extend(s.iter().map(|&v| v + n1));
        supports.push(t);
    }
    Hypergraph { n: n1 + n2, supports }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complete_union_small_cases() {
        let point = Hypergraph::edgeless(1);
        let u = complete_union(&point, &point);
        assert_eq!((u.vertex_count(), u.hyperedge_count()), (2, 0));

        let with_empty = point.with_empty_hyperedge();
        let u = complete_union(&with_empty, &point);
        assert_eq!(u.supports(), &[vec![1]]);

        let k2 = complete_union(&point, &point).with_covering_hyperedge();
        assert_eq!(k2.supports(), &[vec![0, 1]]);
    }

    #[test]
    fn covering_and_empty_hyperedges() {
        for n in 0..3 {
            let h = Hypergraph::edgeless(n);
            let one = h.with_covering_hyperedge();
            assert_eq!(one.hyperedge_count(), 1);
            assert_eq!(one.support(0).len(), n);
            let zero = h.with_empty_hyperedge();
            assert_eq!(zero.hyperedge_count(), 1);
            assert!(zero.support(0).is_empty());
        }
    }

    #[test]
    fn flags_are_lexicographic() {
        let h = Hypergraph::new(3, vec![vec![2, 0], vec![1], vec![0, 1]]).unwrap();
        assert_eq!(h.flags(), vec![(0, 0), (0, 2), (1, 1), (1, 2), (2, 0)]);
        assert_eq!(h.flag_count(), 5);
    }

    #[test]
    fn restriction_keeps_parallel_hyperedges() {
        let h = Hypergraph::new(3, vec![vec![0, 1], vec![1, 2]]).unwrap();
        let r = h.restrict(&[1], &[0, 1]).unwrap();
        assert_eq!(r.supports(), &[vec![0], vec![0]]);
        assert!(!r.is_simple());
    }

    #[test]
    fn rejects_out_of_range() {
        assert!(Hypergraph::new(2, vec![vec![2]]).is_err());
        assert!(Hypergraph::from_incidences(2, 1, [(0, 1)]).is_err());
    }
}
