//! Closed formulas for `W_H`, `W♯_Γ` and `W⁻_Γ`.
//!
//! Every function returns a [`ZetaResult`]: the reduced rational function plus
//! a [`Provenance`] recording how it was obtained, which can be replayed.

mod graphs;
mod master;
mod ops;
mod provenance;

pub use graphs::{class_counting, model_hypergraph, rgmt_values, wminus, wsharp, wsharp_via_master};
pub use master::{master_w_h, master_w_h_with_limit, DEFAULT_VERTEX_LIMIT};
pub use ops::{
    add_generic_column, add_generic_row, flat, hyper_complete_union, hyper_covering, hyper_disjoint,
    hyper_empty, join_power_flat, join_wminus, unflat, wsharp_disjoint, wsharp_join,
};
pub use provenance::{JoinKind, Provenance, SubstKind};

use thiserror::Error;

use crate::bivratfun::BivariateRational;
use crate::incidence::IncidenceError;

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum ZetaError {
    #[error("{vertices} vertices exceed the limit of {limit}")]
    TooLarge { vertices: usize, limit: usize },
    #[error("Unsupported: {0}")]
    Unsupported(&'static str),
    #[error("graph has no vertices")]
    EmptyGraph,
    #[error("graph has loops")]
    HasLoops,
    #[error("graph is not reflexive")]
    NotReflexive,
    #[error("invalid argument: {0}")]
    InvalidArgument(&'static str),
    #[error(transparent)]
    Incidence(#[from] IncidenceError),
}

/// A computed function together with its derivation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZetaResult {
    pub value: BivariateRational,
    pub provenance: Provenance,
}

impl ZetaResult {
    pub fn new(value: BivariateRational, provenance: Provenance) -> Self {
        ZetaResult { value, provenance }
    }

    /// Recomputes the value from the recorded inputs.
    pub fn replay(&self) -> Result<BivariateRational, ZetaError> {
        self.provenance.replay()
    }

    /// SHA-256 of the provenance chain.
    pub fn digest(&self) -> [u8; 32] {
        self.provenance.digest()
    }
}
