//! Matrices of linear forms attached to hypergraphs and graphs, their minors,
//! monomial ideals of minors, and symbolic ranks.

mod check;
mod classify;
mod matrix;
mod minors;
mod poly;
mod rank;

pub use check::{animation_monomials, check_animations, check_selectors, selector_monomials, MinorCheck};
pub use classify::{classify_square_subhypergraph, SquareClass};
pub use matrix::{build_a_graph, build_a_hyper, build_c_graph, build_c_hyper, Entry, LinearFormMatrix, Sign};
pub use minors::{
    check_minor_guard, ideal_generators, k_subsets, minor, nonzero_minors, nonzero_minors_with_guard, row_subset_minors,
    unsigned_minor_set, Minor, MonomialIdeal, DEFAULT_MINOR_GUARD,
};
pub use poly::SignedMonomialPolynomial;
pub use rank::{integer_rank, symbolic_rank, symbolic_rank_seeded};

use thiserror::Error;

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum LinmatError {
    #[error("index {index} out of range for {len}")]
    OutOfRange { index: usize, len: usize },
    #[error("minor needs as many rows as columns ({rows} vs {cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("{count} minors exceed the guard of {guard}")]
    TooManyMinors { count: u128, guard: u128 },
    #[error("too many columns for minor enumeration: {0}")]
    TooManyColumns(usize),
    #[error("minor is not a single term")]
    NotMonomial,
    #[error("random evaluations disagree on the rank ({0} vs {1})")]
    RankMismatch(usize, usize),
    #[error("vertex and edge sets differ in size ({0} vs {1})")]
    SizeMismatch(usize, usize),
}
