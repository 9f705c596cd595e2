use alloc::collections::{BTreeSet, VecDeque};
use alloc::vec;
use alloc::vec::Vec;

use super::{subset_mask, Hypergraph, IncidenceError};

/// A finite graph with loops allowed and no parallel edges.
///
/// Edges are stored as `(u, v)` with `u <= v`; a loop is `(v, v)`. Iteration
/// order over edges is lexicographic, which is also the row order of the
/// linearised matrices built from the graph.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Graph {
    n: usize,
    edges: BTreeSet<(usize, usize)>,
}

/// Per-component data used by the rank formulas.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComponentInfo {
    pub vertices: Vec<usize>,
    pub has_loop: bool,
    /// Loops count as odd cycles.
    pub has_odd_cycle: bool,
}

impl ComponentInfo {
    pub fn is_bipartite(&self) -> bool {
        !self.has_odd_cycle
    }
}

impl Graph {
    pub fn new<I>(n: usize, edges: I) -> Result<Self, IncidenceError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut set = BTreeSet::new();
        for (a, b) in edges {
            for v in [a, b] {
                if v >= n {
                    return Err(IncidenceError::VertexOutOfRange { vertex: v, count: n });
                }
            }
            let e = (a.min(b), a.max(b));
            if !set.insert(e) {
                return Err(IncidenceError::DuplicateEdge(e.0, e.1));
            }
        }
        Ok(Graph { n, edges: set })
    }

    pub fn empty(n: usize) -> Self {
        Graph { n, edges: BTreeSet::new() }
    }

    pub fn complete(n: usize) -> Self {
        let edges = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
        Graph { n, edges }
    }

    pub fn path(n: usize) -> Self {
        let edges = (1..n).map(|i| (i - 1, i)).collect();
        Graph { n, edges }
    }

    /// Cycle on `n >= 3` vertices.
    pub fn cycle(n: usize) -> Self {
        let mut g = Self::path(n);
        if n >= 3 {
            g.edges.insert((0, n - 1));
        }
        g
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().copied()
    }

    pub fn edge_index(&self, u: usize, v: usize) -> Option<usize> {
        let e = (u.min(v), u.max(v));
        if !self.edges.contains(&e) {
            return None;
        }
        Some(self.edges.range(..e).count())
    }

    pub fn is_adjacent(&self, u: usize, v: usize) -> bool {
        self.edges.contains(&(u.min(v), u.max(v)))
    }

    pub fn has_loop(&self, v: usize) -> bool {
        self.edges.contains(&(v, v))
    }

    pub fn loop_count(&self) -> usize {
        self.edges.iter().filter(|(a, b)| a == b).count()
    }

    pub fn is_loopless(&self) -> bool {
        self.loop_count() == 0
    }

    pub fn is_reflexive(&self) -> bool {
        (0..self.n).all(|v| self.has_loop(v))
    }

    /// Neighbours of `v` in increasing order (`v` itself if it carries a loop).
    pub fn neighbors(&self, v: usize) -> Vec<usize> {
        (0..self.n).filter(|&u| self.is_adjacent(u, v)).collect()
    }

    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut deg = vec![0usize; self.n];
        for (a, b) in self.edges() {
            deg[a] += 1;
            if a != b {
                deg[b] += 1;
            }
        }
        deg.sort_unstable();
        deg
    }

    /// Adds every missing loop.
    pub fn reflexive_closure(&self) -> Graph {
        let mut edges = self.edges.clone();
        edges.extend((0..self.n).map(|v| (v, v)));
        Graph { n: self.n, edges }
    }

    /// Removes every loop.
    pub fn loopless_part(&self) -> Graph {
        let edges = self.edges.iter().copied().filter(|(a, b)| a != b).collect();
        Graph { n: self.n, edges }
    }

    /// Loopless complement: distinct `u, v` are adjacent iff they are not adjacent here.
    pub fn complement(&self) -> Graph {
        let edges = (0..self.n)
            .flat_map(|i| (i + 1..self.n).map(move |j| (i, j)))
            .filter(|&(i, j)| !self.is_adjacent(i, j))
            .collect();
        Graph { n: self.n, edges }
    }

    /// Subgraph induced on `vertices`, relabelled `0..len` in the given order.
    pub fn induced(&self, vertices: &[usize]) -> Result<Graph, IncidenceError> {
        subset_mask(vertices, self.n.max(vertices.len()))?;
        let mut edges = BTreeSet::new();
        for (i, &a) in vertices.iter().enumerate() {
            if a >= self.n {
                return Err(IncidenceError::VertexOutOfRange { vertex: a, count: self.n });
            }
            for (j, &b) in vertices.iter().enumerate().skip(i) {
                if self.is_adjacent(a, b) {
                    edges.insert((i, j));
                }
            }
        }
        Ok(Graph { n: vertices.len(), edges })
    }

    /// `perm[v]` is the new id of vertex `v`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        let edges = self
            .edges
            .iter()
            .map(|&(a, b)| {
                let (x, y) = (perm[a], perm[b]);
                (x.min(y), x.max(y))
            })
            .collect();
        Graph { n: self.n, edges }
    }

    /// Connected components as sorted vertex lists, ordered by least vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for w in self.neighbors(u) {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                        queue.push_back(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn component_graphs(&self) -> Vec<Graph> {
        self.components()
            .iter()
            .map(|c| self.induced(c).expect("component vertices are in range"))
            .collect()
    }

    pub fn component_info(&self) -> Vec<ComponentInfo> {
        self.components()
            .into_iter()
            .map(|vertices| {
                let has_loop = vertices.iter().any(|&v| self.has_loop(v));
                // 2-colour by BFS; a conflict (or loop) witnesses an odd cycle.
                let mut colour = vec![None; self.n];
                let mut odd = has_loop;
                colour[vertices[0]] = Some(false);
                let mut queue = VecDeque::from([vertices[0]]);
                while let Some(u) = queue.pop_front() {
                    let cu = colour[u].expect("queued vertices are coloured");
                    for w in self.neighbors(u) {
                        match colour[w] {
                            None => {
                                colour[w] = Some(!cu);
                                queue.push_back(w);
                            }
                            Some(cw) if cw == cu => odd = true,
                            _ => {}
                        }
                    }
                }
                ComponentInfo { vertices, has_loop, has_odd_cycle: odd }
            })
            .collect()
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() == 1
    }

    /// `|N[U] \ U|`: vertices outside `U` with a neighbour in `U`.
    pub fn neighborhood_excess(&self, subset: &[usize]) -> Result<usize, IncidenceError> {
        let mut inside = vec![false; self.n];
        for &v in subset {
            if v >= self.n {
                return Err(IncidenceError::VertexOutOfRange { vertex: v, count: self.n });
            }
            inside[v] = true;
        }
        Ok((0..self.n)
            .filter(|&w| !inside[w] && subset.iter().any(|&u| self.is_adjacent(u, w)))
            .count())
    }

    /// Closed neighbourhood masks `N[v]`, one per vertex.
    pub(crate) fn closed_neighborhood_masks(&self) -> Result<Vec<u64>, IncidenceError> {
        if self.n > 64 {
            return Err(IncidenceError::TooLarge(self.n));
        }
        let mut masks: Vec<u64> = (0..self.n).map(|v| 1u64 << v).collect();
        for (a, b) in self.edges() {
            masks[a] |= 1 << b;
            masks[b] |= 1 << a;
        }
        Ok(masks)
    }

    /// `Adj(Γ) = (V, V, ~)`.
    pub fn adjacency_hypergraph(&self) -> Hypergraph {
        let supports = (0..self.n).map(|v| self.neighbors(v)).collect();
        Hypergraph::from_sorted_supports(self.n, supports)
    }

    /// `Inc(Γ) = (V, E, ∈)`, hyperedges in lexicographic edge order.
    pub fn incidence_hypergraph(&self) -> Hypergraph {
        let supports = self
            .edges()
            .map(|(a, b)| if a == b { vec![a] } else { vec![a, b] })
            .collect();
        Hypergraph::from_sorted_supports(self.n, supports)
    }
}

/// `Γ₁ ⊕ Γ₂`; the right operand's ids are shifted by `n₁`.
pub fn disjoint_union(left: &Graph, right: &Graph) -> Graph {
    let shift = left.n;
    let mut edges = left.edges.clone();
    edges.extend(right.edges.iter().map(|&(a, b)| (a + shift, b + shift)));
    Graph { n: left.n + right.n, edges }
}

/// `Γ₁ ∨ Γ₂`: the disjoint union plus every edge between the two sides.
pub fn join(left: &Graph, right: &Graph) -> Graph {
    let mut g = disjoint_union(left, right);
    for a in 0..left.n {
        for b in 0..right.n {
            g.edges.insert((a, left.n + b));
        }
    }
    g
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn join_counts() {
        let k2 = join(&Graph::empty(1), &Graph::empty(1));
        assert_eq!(k2, Graph::complete(2));
        let two = disjoint_union(&Graph::empty(1), &Graph::empty(1));
        assert_eq!(two.edge_count(), 0);
        let g = join(&Graph::complete(2), &two);
        assert_eq!(g.vertex_count(), 4);
        assert_eq!(g.edge_count(), 5);
        assert!(!g.is_adjacent(2, 3));
        assert_eq!(join(&g, &Graph::empty(0)), g);
    }

    #[test]
    fn join_restricts_to_inputs() {
        let a = Graph::path(3);
        let b = Graph::cycle(4);
        let j = join(&a, &b);
        assert_eq!(j.edge_count(), 2 + 4 + 12);
        assert_eq!(j.induced(&[0, 1, 2]).unwrap(), a);
        assert_eq!(j.induced(&[3, 4, 5, 6]).unwrap(), b);
    }

    #[test]
    fn closure_adds_missing_loops() {
        let g = Graph::new(3, [(0, 0), (0, 1)]).unwrap();
        let c = g.reflexive_closure();
        assert_eq!(c.edge_count(), 4);
        assert!(c.is_reflexive());
        assert_eq!(Graph::empty(1).reflexive_closure().edges().collect::<Vec<_>>(), [(0, 0)]);
    }

    #[test]
    fn component_flags() {
        let c3 = Graph::cycle(3);
        let info = c3.component_info();
        assert_eq!(info.len(), 1);
        assert!(info[0].has_odd_cycle && !info[0].has_loop);

        let c4 = Graph::cycle(4).component_info();
        assert_eq!(c4.len(), 1);
        assert!(c4[0].is_bipartite() && !c4[0].has_loop);

        let g = disjoint_union(&Graph::empty(1), &Graph::complete(2));
        let info = g.component_info();
        assert_eq!(info.len(), 2);
        assert!(info.iter().all(|c| !c.has_loop));

        let looped = Graph::new(2, [(0, 0), (0, 1)]).unwrap();
        assert!(looped.component_info()[0].has_odd_cycle);
    }

    #[test]
    fn neighborhood_excess_cases() {
        let p3 = Graph::path(3);
        assert_eq!(p3.neighborhood_excess(&[1]).unwrap(), 2);
        assert_eq!(p3.neighborhood_excess(&[]).unwrap(), 0);
        assert_eq!(p3.neighborhood_excess(&[0, 1, 2]).unwrap(), 0);
        let g = disjoint_union(&Graph::complete(2), &Graph::path(3));
        assert_eq!(g.neighborhood_excess(&[0, 1]).unwrap(), 0);
        assert!(g.neighborhood_excess(&[7]).is_err());
    }

    #[test]
    fn rejects_bad_edges() {
        assert!(Graph::new(2, [(0, 2)]).is_err());
        assert_eq!(Graph::new(2, [(0, 1), (1, 0)]), Err(IncidenceError::DuplicateEdge(0, 1)));
    }

    #[test]
    fn hypergraphs_of_graphs() {
        let k2 = Graph::complete(2);
        let inc = k2.incidence_hypergraph();
        assert_eq!((inc.vertex_count(), inc.hyperedge_count()), (2, 1));
        assert_eq!(inc.support(0), &[0, 1]);

        // Looped path on four vertices gives the tridiagonal 0/1 pattern.
        let g = Graph::path(4).reflexive_closure();
        let adj = g.adjacency_hypergraph();
        let expected = [[1, 1, 0, 0], [1, 1, 1, 0], [0, 1, 1, 1], [0, 0, 1, 1]];
        for (v, row) in expected.iter().enumerate() {
            for (e, &bit) in row.iter().enumerate() {
                assert_eq!(adj.is_incident(v, e), bit == 1);
            }
        }
    }

    #[test]
    fn unions_commute_with_adj_and_inc() {
        let a = Graph::new(3, [(0, 1), (1, 1)]).unwrap();
        let b = Graph::cycle(3);
        let u = disjoint_union(&a, &b);
        assert_eq!(
            u.incidence_hypergraph(),
            super::super::disjoint_union_hyper(&a.incidence_hypergraph(), &b.incidence_hypergraph())
        );
        assert_eq!(
            u.adjacency_hypergraph(),
            super::super::disjoint_union_hyper(&a.adjacency_hypergraph(), &b.adjacency_hypergraph())
        );
    }
}
