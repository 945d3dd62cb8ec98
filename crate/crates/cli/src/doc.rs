//! The JSON input document: a graph plus a label for every vertex.
//!
//! ```json
//! {
//!   "graph": {"vertices": ["a", "b"], "edges": [["a", "b"]]},
//!   "labels": {
//!     "a": {"kind": "cyclic", "order": 0},
//!     "b": {"kind": "free", "rank": 2}
//!   }
//! }
//! ```
//!
//! Label kinds: `cyclic` (order 0 means infinite), `free` (rank ≥ 1),
//! `higman` (k ≥ 4), `opaque` (an uninterpreted tag).

use std::collections::BTreeMap;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use graphprod::{Presentation, SimpleGraph, VertexLabel};

use crate::{CliError, CliResult};

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct GraphDoc {
    pub vertices: Vec<String>,
    #[serde(default)]
    pub edges: Vec<(String, String)>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum LabelDoc {
    Cyclic { order: u64 },
    Free { rank: u32 },
    Higman { k: u32 },
    Opaque { tag: String },
}

impl LabelDoc {
    pub fn to_label(&self) -> VertexLabel {
        match self {
            LabelDoc::Cyclic { order } => VertexLabel::Cyclic { order: *order },
            LabelDoc::Free { rank } => VertexLabel::Free { rank: *rank },
            LabelDoc::Higman { k } => VertexLabel::Higman { k: *k },
            LabelDoc::Opaque { tag } => VertexLabel::Opaque { tag: tag.clone() },
        }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct PresentationDoc {
    pub graph: GraphDoc,
    pub labels: BTreeMap<String, LabelDoc>,
}

impl PresentationDoc {
    pub fn from_json(text: &str) -> CliResult<PresentationDoc> {
        serde_json::from_str(text).map_err(|e| CliError::parse(format!("invalid document: {e}")))
    }

    pub fn read_file(path: &std::path::Path) -> CliResult<PresentationDoc> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::parse(format!("cannot read {}: {e}", path.display())))?;
        PresentationDoc::from_json(&text)
    }

    /// Validates the document and builds the presentation. Every vertex
    /// must carry a well-formed label.
    pub fn build(&self) -> CliResult<Arc<Presentation>> {
        let graph = SimpleGraph::new(
            &self.graph.vertices,
            &self
                .graph
                .edges
                .iter()
                .map(|(a, b)| (a.clone(), b.clone()))
                .collect::<Vec<_>>(),
        )
        .map_err(|e| CliError::parse(e.to_string()))?;
        for name in self.labels.keys() {
            if !self.graph.vertices.contains(name) {
                return Err(CliError::parse(format!(
                    "label for unknown vertex `{name}`"
                )));
            }
        }
        let mut labels = Vec::with_capacity(self.graph.vertices.len());
        for name in &self.graph.vertices {
            let doc = self.labels.get(name).ok_or_else(|| {
                CliError::parse(format!("vertex `{name}` has no label"))
            })?;
            labels.push(doc.to_label());
        }
        Presentation::new(graph, labels).map_err(|e| CliError::parse(e.to_string()))
    }
}

/// Builds a document from parallel vertex/label lists (test support).
pub fn doc_from_parts(
    vertices: &[&str],
    edges: &[(&str, &str)],
    labels: &[LabelDoc],
) -> PresentationDoc {
    PresentationDoc {
        graph: GraphDoc {
            vertices: vertices.iter().map(|s| s.to_string()).collect(),
            edges: edges
                .iter()
                .map(|(a, b)| (a.to_string(), b.to_string()))
                .collect(),
        },
        labels: vertices
            .iter()
            .zip(labels)
            .map(|(v, l)| (v.to_string(), l.clone()))
            .collect(),
    }
}
