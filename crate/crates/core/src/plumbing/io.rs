//! JSON interchange and DOT export for plumbing graphs.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use super::{PlumbingGraph, PlumbingVertex, VertexId};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VertexJson {
    pub id: VertexId,
    pub genus: i64,
    pub e: i64,
}

/// Wire form: `{"vertices":[{"id","genus","e"}], "edges":[[id,id]], "legs":[id]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphJson {
    pub vertices: Vec<VertexJson>,
    #[serde(default)]
    pub edges: Vec<[VertexId; 2]>,
    #[serde(default)]
    pub legs: Vec<VertexId>,
}

impl From<&PlumbingGraph> for GraphJson {
    fn from(g: &PlumbingGraph) -> Self {
        GraphJson {
            vertices: g
                .vertices
                .iter()
                .map(|v| VertexJson { id: v.id, genus: i64::from(v.genus), e: v.euler_weight })
                .collect(),
            edges: g.edges.iter().map(|&(a, b)| [a, b]).collect(),
            legs: g.legs.clone(),
        }
    }
}

impl TryFrom<GraphJson> for PlumbingGraph {
    type Error = Error;

    fn try_from(j: GraphJson) -> Result<Self> {
        let mut g = PlumbingGraph::new();
        for v in j.vertices {
            let genus = u32::try_from(v.genus).map_err(|_| Error::NegativeGenus { id: v.id, genus: v.genus })?;
            g.insert_vertex(PlumbingVertex { id: v.id, genus, euler_weight: v.e })?;
        }
        for [a, b] in j.edges {
            g.add_edge(a, b)?;
        }
        for l in j.legs {
            g.add_leg(l)?;
        }
        Ok(g)
    }
}

impl PlumbingGraph {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&GraphJson::from(self)).expect("graph serializes")
    }

    /// Parses the JSON wire form. Serde errors are reported as strings.
    pub fn from_json(s: &str) -> std::result::Result<Self, String> {
        let j: GraphJson = serde_json::from_str(s).map_err(|e| e.to_string())?;
        PlumbingGraph::try_from(j).map_err(|e| e.to_string())
    }

    /// Graphviz rendering; boundary legs point at anonymous nodes.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("graph plumbing {\n");
        for v in &self.vertices {
            let _ = writeln!(out, "  v{} [label=\"g={}, e={}\"];", v.id, v.genus, v.euler_weight);
        }
        for &(a, b) in &self.edges {
            let _ = writeln!(out, "  v{a} -- v{b};");
        }
        for (i, l) in self.legs.iter().enumerate() {
            let _ = writeln!(out, "  leg{i} [shape=point, label=\"\"];");
            let _ = writeln!(out, "  v{l} -- leg{i} [dir=forward, arrowhead=normal];");
        }
        out.push_str("}\n");
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn field_names_are_exact() {
        let mut g = PlumbingGraph::bamboo(&[-2, -3]);
        g.add_leg(1).unwrap();
        let v: serde_json::Value = serde_json::from_str(&g.to_json()).unwrap();
        assert_eq!(v["vertices"][0], serde_json::json!({"id": 0, "genus": 0, "e": -2}));
        assert_eq!(v["edges"], serde_json::json!([[0, 1]]));
        assert_eq!(v["legs"], serde_json::json!([1]));
        assert_eq!(PlumbingGraph::from_json(&g.to_json()).unwrap(), g);
    }

    #[test]
    fn invalid_json_graphs() {
        let neg = r#"{"vertices":[{"id":0,"genus":-1,"e":0}],"edges":[],"legs":[]}"#;
        assert!(PlumbingGraph::from_json(neg).unwrap_err().contains("negative genus"));
        let dangling = r#"{"vertices":[{"id":0,"genus":0,"e":0}],"edges":[[0,3]],"legs":[]}"#;
        assert!(PlumbingGraph::from_json(dangling).unwrap_err().contains("unknown vertex"));
        let looped = r#"{"vertices":[{"id":0,"genus":0,"e":0}],"edges":[[0,0]]}"#;
        assert!(PlumbingGraph::from_json(looped).is_err());
    }

    #[test]
    fn dot_labels() {
        let mut g = PlumbingGraph::bamboo(&[-2]);
        g.add_leg(0).unwrap();
        let dot = g.to_dot();
        assert!(dot.contains("label=\"g=0, e=-2\""));
        assert!(dot.contains("dir=forward"));
    }
}
