//! Exact computation of ask zeta functions attached to graphs and hypergraphs.
//!
//! The crate is `no_std` and only needs `alloc`. It contains
//!
//! * [`incidence`]: graphs, hypergraphs, joins, complete unions, cotrees;
//! * [`mappings`]: partial maps, selectors, animations and their monomials;
//! * [`linmat`]: linearised incidence/adjacency matrices, minors, ranks;
//! * [`bivratfun`]: rational functions in `X` and `T` with denominators
//!   `∏ (1 - X^a T)`, including Hadamard products;
//! * [`zetacalc`]: closed formulas for `W_H`, `W♯`, `W⁻` of cographs, joins;
//! * [`oracle`]: brute-force average kernel sizes over `Z/p^k`.
//!
//! IO, file formats and the command-line interface live in the `askzeta`
//! companion crate.

#![no_std]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod bivratfun;
pub mod incidence;
pub mod linmat;
pub mod mappings;
pub mod oracle;
pub mod zetacalc;

pub use bivratfun::{BivariateRational, LaurentPoly};
pub use incidence::{Cotree, Graph, Hypergraph};

