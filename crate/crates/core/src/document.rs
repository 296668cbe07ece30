//! Versioned JSON interchange format for labeled graphs.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::families::{BuiltFamily, Discrepancy, ExpectedColors, Family};
use crate::graph::{GraphError, LabeledGraph, VertexId, VertexName};
use crate::verify::ColorReport;

pub const FORMAT_VERSION: u32 = 1;

#[derive(Debug, Error)]
pub enum DocumentError {
    #[error("unsupported format version {0} (expected {FORMAT_VERSION})")]
    Version(u32),
    #[error("vertex id {0} appears twice")]
    DuplicateId(usize),
    #[error("edge {index} refers to unknown vertex id {id}")]
    UnknownId { index: usize, id: usize },
    #[error("vertex `{name}` is listed with degree {listed}, but its edges give {actual}")]
    DegreeMismatch { name: String, listed: usize, actual: usize },
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("malformed document: {0}")]
    Json(#[from] serde_json::Error),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DocVertex {
    pub id: usize,
    pub name: String,
    pub degree: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct DocEdge {
    pub u: usize,
    pub v: usize,
    pub label: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphDocument {
    pub format_version: u32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub family: Option<Family>,
    pub vertices: Vec<DocVertex>,
    pub edges: Vec<DocEdge>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub expected_colors: Option<ExpectedColors>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub verification: Option<ColorReport>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub warnings: Vec<String>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub discrepancies: Vec<Discrepancy>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ambiguity: Option<String>,
}

impl GraphDocument {
    pub fn from_graph(g: &LabeledGraph) -> Self {
        let degrees = g.degrees();
        GraphDocument {
            format_version: FORMAT_VERSION,
            family: None,
            vertices: g
                .vertices()
                .map(|v| DocVertex {
                    id: v.0,
                    name: g.name(v).to_string(),
                    degree: degrees[v.0],
                })
                .collect(),
            edges: g
                .edges()
                .iter()
                .map(|e| DocEdge {
                    u: e.ends.0 .0,
                    v: e.ends.1 .0,
                    label: e.label,
                })
                .collect(),
            expected_colors: None,
            verification: None,
            warnings: Vec::new(),
            discrepancies: Vec::new(),
            ambiguity: None,
        }
    }

    pub fn from_built(b: &BuiltFamily) -> Self {
        GraphDocument {
            family: Some(b.family),
            expected_colors: Some(b.expected.clone()),
            warnings: b.warnings.clone(),
            discrepancies: b.discrepancies.clone(),
            ambiguity: b.ambiguity.clone(),
            ..Self::from_graph(&b.graph)
        }
    }

    /// Rebuilds the graph. Vertices are taken in listed order and edges keep
    /// their listed order, so edge ids match the document.
    pub fn to_graph(&self) -> Result<LabeledGraph, DocumentError> {
        if self.format_version != FORMAT_VERSION {
            return Err(DocumentError::Version(self.format_version));
        }
        let mut slot = HashMap::with_capacity(self.vertices.len());
        let mut names = Vec::with_capacity(self.vertices.len());
        for (i, v) in self.vertices.iter().enumerate() {
            if slot.insert(v.id, VertexId(i)).is_some() {
                return Err(DocumentError::DuplicateId(v.id));
            }
            names.push(v.name.parse::<VertexName>()?);
        }
        let mut g = LabeledGraph::new(names)?;
        for (index, e) in self.edges.iter().enumerate() {
            let find = |id: usize| slot.get(&id).copied().ok_or(DocumentError::UnknownId { index, id });
            g.add_edge(find(e.u)?, find(e.v)?, e.label)?;
        }
        let degrees = g.degrees();
        for (i, v) in self.vertices.iter().enumerate() {
            if degrees[i] != v.degree {
                return Err(DocumentError::DegreeMismatch {
                    name: v.name.clone(),
                    listed: v.degree,
                    actual: degrees[i],
                });
            }
        }
        Ok(g)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("documents always serialize")
    }

    pub fn from_json(text: &str) -> Result<Self, DocumentError> {
        Ok(serde_json::from_str(text)?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::build_rdf;

    #[test]
    fn round_trip() {
        let b = build_rdf(1, 2).unwrap();
        let doc = GraphDocument::from_built(&b);
        let back = GraphDocument::from_json(&doc.to_json()).unwrap();
        assert_eq!(back, doc);
        assert_eq!(back.to_graph().unwrap(), b.graph);
    }

    #[test]
    fn rejects_bad_references() {
        let b = build_rdf(1, 2).unwrap();
        let mut doc = GraphDocument::from_built(&b);
        doc.edges[0].u = 999;
        assert!(matches!(doc.to_graph(), Err(DocumentError::UnknownId { index: 0, id: 999 })));
        let mut doc = GraphDocument::from_built(&b);
        doc.edges[0].label = 0;
        assert!(doc.to_graph().is_err());
        let mut doc = GraphDocument::from_built(&b);
        doc.format_version = 7;
        assert!(matches!(doc.to_graph(), Err(DocumentError::Version(7))));
    }
}
