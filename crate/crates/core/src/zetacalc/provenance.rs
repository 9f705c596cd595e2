use alloc::boxed::Box;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use sha2::{Digest, Sha256};

use crate::bivratfun::BivariateRational;
use crate::incidence::{Graph, Hypergraph};

use super::{graphs, master, ops, ZetaError, ZetaResult};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum JoinKind {
    /// `W⁻` of a join of graphs on `n1` and `n2` vertices.
    Minus { n1: usize, n2: usize },
    /// `W♯` of a join.
    Sharp { n1: usize, n2: usize },
    /// `W_H` of a complete union of hypergraphs with `n_i` vertices and `m_i` hyperedges.
    CompleteUnion { n1: usize, m1: usize, n2: usize, m2: usize },
    /// `W♭` of the `k`-fold join power of a graph on `n` vertices.
    Power { n: usize, k: usize },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SubstKind {
    /// `T ↦ X^c T`.
    TScale(i64),
    /// `H ↦ H^𝟏`.
    CoveringHyperedge,
    /// `H ↦ H^𝟎`.
    EmptyHyperedge,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Provenance {
    MasterFormula { hypergraph: Hypergraph },
    WsharpFormula { graph: Graph },
    CographModel { graph: Graph },
    JoinFormula { kind: JoinKind, inputs: Vec<ZetaResult> },
    HadamardProduct { left: Box<ZetaResult>, right: Box<ZetaResult> },
    RowTransform { input: Box<ZetaResult>, rows: usize, cols: usize, column: bool },
    Substitution { input: Box<ZetaResult>, kind: SubstKind },
}

impl Provenance {
    pub fn tag(&self) -> &'static str {
        match self {
            Provenance::MasterFormula { .. } => "MasterFormula",
            Provenance::WsharpFormula { .. } => "WsharpFormula",
            Provenance::CographModel { .. } => "CographModel",
            Provenance::JoinFormula { .. } => "JoinFormula",
            Provenance::HadamardProduct { .. } => "HadamardProduct",
            Provenance::RowTransform { .. } => "RowTransform",
            Provenance::Substitution { .. } => "Substitution",
        }
    }

    pub fn replay(&self) -> Result<BivariateRational, ZetaError> {
        let r = match self {
            Provenance::MasterFormula { hypergraph } => master::master_w_h(hypergraph)?,
            Provenance::WsharpFormula { graph } => graphs::wsharp(graph)?,
            Provenance::CographModel { graph } => graphs::wminus(graph)?,
            Provenance::JoinFormula { kind, inputs } => {
                let inputs = replayed(inputs)?;
                match *kind {
                    JoinKind::Minus { n1, n2 } => ops::join_wminus(&inputs[0], n1, &inputs[1], n2)?,
                    JoinKind::Sharp { n1, n2 } => ops::wsharp_join(&inputs[0], n1, &inputs[1], n2)?,
                    JoinKind::CompleteUnion { n1, m1, n2, m2 } => {
                        ops::hyper_complete_union(&inputs[0], n1, m1, &inputs[1], n2, m2)
                    }
                    JoinKind::Power { n, k } => ops::join_power_flat(&inputs[0], n, k),
                }
            }
            Provenance::HadamardProduct { left, right } => {
                ops::hyper_disjoint(&replayed_one(left)?, &replayed_one(right)?)
            }
            Provenance::RowTransform { input, rows, cols, column } => {
                let z = replayed_one(input)?;
                if *column {
                    ops::add_generic_column(&z, *rows, *cols)
                } else {
                    ops::add_generic_row(&z, *rows, *cols)
                }
            }
            Provenance::Substitution { input, kind } => {
                let z = replayed_one(input)?;
                match *kind {
                    SubstKind::TScale(c) => ops::flat(&z, c),
                    SubstKind::CoveringHyperedge => ops::hyper_covering(&z),
                    SubstKind::EmptyHyperedge => ops::hyper_empty(&z),
                }
            }
        };
        Ok(r.value)
    }

    /// Canonical one-line description of the derivation.
    pub fn canonical_text(&self) -> String {
        match self {
            Provenance::MasterFormula { hypergraph } => format!("master[{}]", hyper_text(hypergraph)),
            Provenance::WsharpFormula { graph } => format!("wsharp[{}]", graph_text(graph)),
            Provenance::CographModel { graph } => format!("model[{}]", graph_text(graph)),
            Provenance::JoinFormula { kind, inputs } => {
                let parts: Vec<String> = inputs.iter().map(|r| r.provenance.canonical_text()).collect();
                format!("join[{kind:?}]({})", parts.join(","))
            }
            Provenance::HadamardProduct { left, right } => format!(
                "hadamard({},{})",
                left.provenance.canonical_text(),
                right.provenance.canonical_text()
            ),
            Provenance::RowTransform { input, rows, cols, column } => format!(
                "{}[{rows}x{cols}]({})",
                if *column { "column" } else { "row" },
                input.provenance.canonical_text()
            ),
            Provenance::Substitution { input, kind } => {
                format!("subst[{kind:?}]({})", input.provenance.canonical_text())
            }
        }
    }

    pub fn digest(&self) -> [u8; 32] {
        let mut h = Sha256::new();
        h.update(self.canonical_text().as_bytes());
        let out = h.finalize();
        let mut bytes = [0u8; 32];
        bytes.copy_from_slice(&out);
        bytes
    }
}

fn replayed_one(r: &ZetaResult) -> Result<ZetaResult, ZetaError> {
    Ok(ZetaResult::new(r.provenance.replay()?, r.provenance.clone()))
}

fn replayed(rs: &[ZetaResult]) -> Result<Vec<ZetaResult>, ZetaError> {
    rs.iter().map(replayed_one).collect()
}

fn graph_text(g: &Graph) -> String {
    let edges: Vec<String> = g.edges().map(|(a, b)| format!("{a}-{b}")).collect();
    format!("{};{}", g.vertex_count(), edges.join(","))
}

fn hyper_text(h: &Hypergraph) -> String {
    let sup: Vec<String> = h
        .supports()
        .iter()
        .map(|s| {
            let v: Vec<String> = s.iter().map(|x| format!("{x}")).collect();
            format!("{{{}}}", v.join(","))
        })
        .collect();
    format!("{};{}", h.vertex_count(), sup.join(","))
}
