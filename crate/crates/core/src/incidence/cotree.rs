use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;

use super::{Graph, IncidenceError};

/// Canonical cotree of a cograph. Leaves carry vertex ids of the source graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Cotree {
    Leaf(usize),
    Union(Vec<Cotree>),
    Join(Vec<Cotree>),
}

impl Cotree {
    /// Leaf ids in left-to-right order.
    pub fn leaves(&self) -> Vec<usize> {
        let mut out = Vec::new();
        self.collect_leaves(&mut out);
        out
    }

    fn collect_leaves(&self, out: &mut Vec<usize>) {
        match self {
            Cotree::Leaf(v) => out.push(*v),
            Cotree::Union(c) | Cotree::Join(c) => c.iter().for_each(|t| t.collect_leaves(out)),
        }
    }

    /// Rebuilds the graph on `n` vertices, keeping leaf ids.
    pub fn to_graph(&self, n: usize) -> Result<Graph, IncidenceError> {
        let mut edges = BTreeSet::new();
        self.collect_edges(&mut edges);
        Graph::new(n, edges)
    }

    fn collect_edges(&self, edges: &mut BTreeSet<(usize, usize)>) {
        match self {
            Cotree::Leaf(_) => {}
            Cotree::Union(c) => c.iter().for_each(|t| t.collect_edges(edges)),
            Cotree::Join(c) => {
                c.iter().for_each(|t| t.collect_edges(edges));
                let sides: Vec<Vec<usize>> = c.iter().map(Cotree::leaves).collect();
                for (i, a) in sides.iter().enumerate() {
                    for b in &sides[i + 1..] {
                        for &u in a {
                            for &v in b {
                                edges.insert((u.min(v), u.max(v)));
                            }
                        }
                    }
                }
            }
        }
    }

    pub fn is_canonical(&self) -> bool {
        match self {
            Cotree::Leaf(_) => true,
            Cotree::Union(c) => {
                c.len() >= 2 && c.iter().all(|t| !matches!(t, Cotree::Union(_)) && t.is_canonical())
            }
            Cotree::Join(c) => {
                c.len() >= 2 && c.iter().all(|t| !matches!(t, Cotree::Join(_)) && t.is_canonical())
            }
        }
    }
}

/// Cotree of a loopless graph, or `NotCograph` if some induced subgraph is `P₄`.
pub fn cotree(g: &Graph) -> Result<Cotree, IncidenceError> {
    if !g.is_loopless() {
        return Err(IncidenceError::HasLoops);
    }
    if g.vertex_count() == 0 {
        return Err(IncidenceError::Empty);
    }
    let all: Vec<usize> = (0..g.vertex_count()).collect();
    build(g, &all)
}

fn build(g: &Graph, verts: &[usize]) -> Result<Cotree, IncidenceError> {
    if verts.len() == 1 {
        return Ok(Cotree::Leaf(verts[0]));
    }
    let parts = components_within(g, verts, false);
    if parts.len() > 1 {
        return parts.iter().map(|p| build(g, p)).collect::<Result<_, _>>().map(Cotree::Union);
    }
    let parts = components_within(g, verts, true);
    if parts.len() > 1 {
        return parts.iter().map(|p| build(g, p)).collect::<Result<_, _>>().map(Cotree::Join);
    }
    Err(IncidenceError::NotCograph)
}

/// Components of the subgraph (or its complement) induced on `verts`.
fn components_within(g: &Graph, verts: &[usize], complement: bool) -> Vec<Vec<usize>> {
    let linked = |a: usize, b: usize| a != b && g.is_adjacent(a, b) != complement;
    let mut seen = vec![false; verts.len()];
    let mut out = Vec::new();
    for s in 0..verts.len() {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        let mut comp = vec![verts[s]];
        let mut stack = vec![s];
        while let Some(i) = stack.pop() {
            for j in 0..verts.len() {
                if !seen[j] && linked(verts[i], verts[j]) {
                    seen[j] = true;
                    comp.push(verts[j]);
                    stack.push(j);
                }
            }
        }
        comp.sort_unstable();
        out.push(comp);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::incidence::{disjoint_union, join};

    #[test]
    fn p4_is_not_a_cograph() {
        assert_eq!(cotree(&Graph::path(4)), Err(IncidenceError::NotCograph));
    }

    #[test]
    fn single_vertex_is_leaf() {
        assert_eq!(cotree(&Graph::empty(1)).unwrap(), Cotree::Leaf(0));
    }

    #[test]
    fn join_example_shape() {
        let two = disjoint_union(&Graph::empty(1), &Graph::empty(1));
        let g = join(&Graph::complete(2), &two);
        let t = cotree(&g).unwrap();
        // Complement components of g are {0}, {1}, {2,3}.
        assert_eq!(
            t,
            Cotree::Join(vec![
                Cotree::Leaf(0),
                Cotree::Leaf(1),
                Cotree::Union(vec![Cotree::Leaf(2), Cotree::Leaf(3)])
            ])
        );
        assert!(t.is_canonical());
        assert_eq!(t.to_graph(4).unwrap(), g);
    }

    #[test]
    fn rejects_loops_and_empty() {
        assert_eq!(cotree(&Graph::empty(1).reflexive_closure()), Err(IncidenceError::HasLoops));
        assert_eq!(cotree(&Graph::empty(0)), Err(IncidenceError::Empty));
    }
}
