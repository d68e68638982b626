//! JSON file formats and DOT export.
//!
//! Graph: `{"num_vertices": N, "edges": [[u, v], ...]}`, written with
//! `u < v` in ascending order; any orientation is accepted on read.
//! Colouring: `{"k": K, "colors": [...]}`. Labeling: `{"labels": [...]}`.
//! Certificate: `{"graph": ..., "coloring": ..., "claim": "J" | "Jstar", "k": K}`.

use std::fmt::Write as _;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::coloring::{rainbow_report, Coloring};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::jcolor::Variant;

#[derive(Serialize, Deserialize)]
struct GraphJson {
    num_vertices: usize,
    edges: Vec<[usize; 2]>,
}

impl Serialize for Graph {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        GraphJson {
            num_vertices: self.num_vertices(),
            edges: self.edges().map(|(u, v)| [u, v]).collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Graph {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let raw = GraphJson::deserialize(deserializer)?;
        Graph::new(raw.num_vertices, raw.edges.into_iter().map(|[u, v]| (u, v)))
            .map_err(serde::de::Error::custom)
    }
}

pub fn graph_to_json(g: &Graph) -> String {
    serde_json::to_string(g).expect("graph serialization is infallible")
}

pub fn from_json<T: for<'de> Deserialize<'de>>(text: &str) -> Result<T> {
    serde_json::from_str(text).map_err(|e| Error::Malformed(e.to_string()))
}

/// A claimed J- or J*-colouring of a graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    pub graph: Graph,
    pub coloring: Coloring,
    pub claim: Variant,
    pub k: usize,
}

/// Outcome of checking a [`Certificate`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CertificateCheck {
    pub valid: bool,
    pub proper: bool,
    pub colors_used: usize,
    pub conflicting_edges: Vec<(usize, usize)>,
    /// Constrained vertices whose closed neighbourhood misses a colour.
    pub non_rainbow: Vec<usize>,
}

impl Certificate {
    pub fn new(graph: Graph, coloring: Coloring, claim: Variant) -> Self {
        let k = coloring.k();
        Certificate { graph, coloring, claim, k }
    }

    pub fn check(&self) -> Result<CertificateCheck> {
        if self.k != self.coloring.k() {
            return Err(Error::Malformed(format!(
                "certificate claims k={} but its colouring declares k={}",
                self.k,
                self.coloring.k()
            )));
        }
        let report = rainbow_report(&self.graph, &self.coloring)?;
        let conflicting_edges: Vec<_> = self
            .graph
            .edges()
            .filter(|&(u, v)| self.coloring.color(u) == self.coloring.color(v))
            .collect();
        let degrees = self.graph.degrees();
        let non_rainbow: Vec<usize> = (0..self.graph.num_vertices())
            .filter(|&v| self.claim.constrains(degrees[v]))
            .filter(|v| report.rainbow_vertices.binary_search(v).is_err())
            .collect();
        Ok(CertificateCheck {
            valid: report.proper && report.colors_used == self.k && non_rainbow.is_empty(),
            proper: report.proper,
            colors_used: report.colors_used,
            conflicting_edges,
            non_rainbow,
        })
    }
}

/// Fill colours for colour indices 1, 2, ... (cycled after six).
pub const PALETTE: [&str; 6] = ["#e6194b", "#3cb44b", "#4363d8", "#f58231", "#911eb4", "#42d4f4"];

pub fn palette_color(color: usize) -> &'static str {
    PALETTE[(color - 1) % PALETTE.len()]
}

/// Graphviz text. With a colouring, each node is filled from [`PALETTE`]
/// and labelled `vertex:colour`.
pub fn to_dot(g: &Graph, coloring: Option<&Coloring>) -> Result<String> {
    if let Some(c) = coloring {
        c.check_shape(g)?;
    }
    let mut out = String::from("graph G {\n");
    if coloring.is_some() {
        out.push_str("  node [style=filled];\n");
    }
    for v in 0..g.num_vertices() {
        match coloring {
            Some(c) => {
                let color = c.color(v);
                writeln!(
                    out,
                    "  {v} [label=\"{v}:{color}\", fillcolor=\"{}\"];",
                    palette_color(color)
                )
            }
            None => writeln!(out, "  {v};"),
        }
        .expect("writing to a String");
    }
    for (u, v) in g.edges() {
        writeln!(out, "  {u} -- {v};").expect("writing to a String");
    }
    out.push_str("}\n");
    Ok(out)
}
