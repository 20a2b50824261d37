//! The graph file format.
//!
//! ```json
//! { "vertices": ["a", "b", "c"],
//!   "edges": [["a", "b"], ["c", "b"]],
//!   "weights": { "b": 2 } }
//! ```
//!
//! Each edge is a `[tail, head]` pair; missing weights default to 1.

use std::collections::{BTreeMap, HashMap};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::WeightedOrientedGraph;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphDocument {
    pub vertices: Vec<String>,
    #[serde(default)]
    pub edges: Vec<(String, String)>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub weights: BTreeMap<String, u32>,
}

/// A weight that was reset to 1 on load because the vertex is a source.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeightAdjustment {
    pub vertex: String,
    pub from: u32,
}

impl GraphDocument {
    /// Builds the graph exactly as written, without normalizing.
    pub fn to_graph(&self) -> Result<WeightedOrientedGraph> {
        let mut index = HashMap::new();
        for (i, name) in self.vertices.iter().enumerate() {
            if index.insert(name.as_str(), i).is_some() {
                return Err(Error::InvalidGraph(format!("duplicate vertex {name:?}")));
            }
        }
        let lookup = |name: &str| {
            index
                .get(name)
                .copied()
                .ok_or_else(|| Error::InvalidGraph(format!("unknown vertex {name:?}")))
        };
        let arcs = self
            .edges
            .iter()
            .map(|(t, h)| Ok((lookup(t)?, lookup(h)?)))
            .collect::<Result<Vec<_>>>()?;
        let mut weights = vec![1; self.vertices.len()];
        for (name, &w) in &self.weights {
            weights[lookup(name)?] = w;
        }
        WeightedOrientedGraph::new(self.vertices.clone(), arcs, weights)
    }

    /// Builds the graph and resets source weights to 1, reporting which
    /// weights changed.
    pub fn load(&self) -> Result<(WeightedOrientedGraph, Vec<WeightAdjustment>)> {
        let d = self.to_graph()?;
        let adjusted = d
            .source_adjustments()
            .into_iter()
            .map(|(v, from)| WeightAdjustment {
                vertex: d.vertex_name(v).to_string(),
                from,
            })
            .collect();
        Ok((d.normalize_sources(), adjusted))
    }

    /// Document for the vertices of `d` that are still present.
    pub fn from_graph(d: &WeightedOrientedGraph) -> Self {
        let live: Vec<usize> = d.vertices().iter().collect();
        let name = |v: usize| d.vertex_name(v).to_string();
        GraphDocument {
            vertices: live.iter().map(|&v| name(v)).collect(),
            edges: d.arcs().iter().map(|&(t, h)| (name(t), name(h))).collect(),
            weights: live
                .iter()
                .filter(|&&v| d.weight(v) != 1)
                .map(|&v| (name(v), d.weight(v)))
                .collect(),
        }
    }
}

impl From<&WeightedOrientedGraph> for GraphDocument {
    fn from(d: &WeightedOrientedGraph) -> Self {
        GraphDocument::from_graph(d)
    }
}
