//! Graph text files and hypergraph JSON.
//!
//! Graph text: a line `n <count>`, then one line `u v` per edge (`u u` for a
//! loop). Blank lines and lines starting with `#` are skipped.
//!
//! Hypergraph JSON: `{"vertices": n, "hyperedges": [[v, ...], ...]}`.

use std::fs;
use std::io::Read;
use std::path::Path;

use askzeta_core::incidence::IncidenceError;
use askzeta_core::{Graph, Hypergraph};
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum FormatError {
    #[error("line {line}: {msg}")]
    Syntax { line: usize, msg: String },
    #[error("missing `n <count>` header")]
    MissingHeader,
    #[error(transparent)]
    Invalid(#[from] IncidenceError),
    #[error("invalid hypergraph JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
}

pub fn parse_graph(text: &str) -> Result<Graph, FormatError> {
    let mut n = None;
    let mut edges = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let syntax = |msg: &str| FormatError::Syntax { line: i + 1, msg: msg.to_string() };
        let parts: Vec<&str> = line.split_whitespace().collect();
        match (n, parts.as_slice()) {
            (None, ["n", count]) => n = Some(count.parse::<usize>().map_err(|_| syntax("bad vertex count"))?),
            (None, _) => return Err(FormatError::MissingHeader),
            (Some(_), [u, v]) => {
                let u = u.parse::<usize>().map_err(|_| syntax("bad vertex"))?;
                let v = v.parse::<usize>().map_err(|_| syntax("bad vertex"))?;
                edges.push((u, v));
            }
            (Some(_), _) => return Err(syntax("expected `u v`")),
        }
    }
    let n = n.ok_or(FormatError::MissingHeader)?;
    Ok(Graph::new(n, edges)?)
}

pub fn write_graph(g: &Graph) -> String {
    let mut out = format!("n {}\n", g.vertex_count());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

#[derive(Serialize, Deserialize)]
struct HypergraphDoc {
    vertices: usize,
    hyperedges: Vec<Vec<usize>>,
}

pub fn parse_hypergraph(text: &str) -> Result<Hypergraph, FormatError> {
    let doc: HypergraphDoc = serde_json::from_str(text)?;
    Ok(Hypergraph::new(doc.vertices, doc.hyperedges)?)
}

pub fn write_hypergraph(h: &Hypergraph) -> String {
    let doc = HypergraphDoc { vertices: h.vertex_count(), hyperedges: h.supports().to_vec() };
    serde_json::to_string(&doc).expect("plain data serializes") + "\n"
}

/// Reads a file, or standard input for `-`.
pub fn read_input(path: &Path) -> Result<String, FormatError> {
    let io = |source| FormatError::Io { path: path.display().to_string(), source };
    if path.as_os_str() == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s).map_err(io)?;
        Ok(s)
    } else {
        fs::read_to_string(path).map_err(io)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn graph_roundtrip() {
        let g = parse_graph("# path\nn 3\n0 1\n\n2 1\n1 1\n").unwrap();
        assert_eq!(g.edge_count(), 3);
        assert_eq!(write_graph(&g), "n 3\n0 1\n1 1\n1 2\n");
        assert_eq!(parse_graph(&write_graph(&g)).unwrap(), g);
    }

    #[test]
    fn graph_errors() {
        assert!(matches!(parse_graph("0 1\n"), Err(FormatError::MissingHeader)));
        assert!(matches!(parse_graph("n 2\n0 x\n"), Err(FormatError::Syntax { line: 2, .. })));
        assert!(matches!(parse_graph("n 2\n0 5\n"), Err(FormatError::Invalid(_))));
        assert!(matches!(parse_graph("n 2\n0 1\n1 0\n"), Err(FormatError::Invalid(_))));
    }

    #[test]
    fn hypergraph_roundtrip() {
        let h = parse_hypergraph(r#"{"vertices": 3, "hyperedges": [[2, 0], [], [1]]}"#).unwrap();
        assert_eq!(write_hypergraph(&h), "{\"vertices\":3,\"hyperedges\":[[0,2],[],[1]]}\n");
        assert_eq!(parse_hypergraph(&write_hypergraph(&h)).unwrap(), h);
    }
}
