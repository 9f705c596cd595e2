//! Finite graphs and hypergraphs.
//!
//! Vertices are dense integers `0..n` in input order. Binary constructions keep
//! the ids of the left operand and shift those of the right operand by the
//! left vertex count.

mod catalog;
mod cotree;
mod graph;
mod hypergraph;

pub use catalog::{canonical_form, has_induced_p4, is_isomorphic, small_graphs};
pub use cotree::{cotree, Cotree};
pub use graph::{disjoint_union, join, ComponentInfo, Graph};
pub use hypergraph::{complete_union, disjoint_union_hyper, Hypergraph};

use thiserror::Error;

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum IncidenceError {
    #[error("vertex {vertex} out of range for {count} vertices")]
    VertexOutOfRange { vertex: usize, count: usize },
    #[error("duplicate edge {{{0}, {1}}}")]
    DuplicateEdge(usize, usize),
    #[error("not a cograph")]
    NotCograph,
    #[error("graph has loops")]
    HasLoops,
    #[error("graph has no vertices")]
    Empty,
    #[error("too many vertices for a bitmask: {0}")]
    TooLarge(usize),
}

/// Bitmask of a vertex subset. Errors on ids that do not fit `count`.
pub(crate) fn subset_mask(vertices: &[usize], count: usize) -> Result<u64, IncidenceError> {
    if count > 64 {
        return Err(IncidenceError::TooLarge(count));
    }
    let mut mask = 0u64;
    for &v in vertices {
        if v >= count {
            return Err(IncidenceError::VertexOutOfRange { vertex: v, count });
        }
        mask |= 1 << v;
    }
    Ok(mask)
}
