//! Deterministic tree exports: JSON records and Graphviz DOT.
//!
//! Triple entries are rendered as decimal strings so arbitrary-precision
//! values survive the round trip exactly.

use crate::cubic::{JumpDir, Triple};
use crate::tree::TreeNode;
use num_bigint::BigInt;
use serde::{Deserialize, Serialize};
use std::str::FromStr;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExportError {
    #[error("malformed tree record: {0}")]
    Malformed(String),
    #[error("json: {0}")]
    Json(String),
}

/// One tree vertex as serialized: `{triple, depth, parent, dir}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TreeNodeRecord {
    pub triple: [String; 3],
    pub depth: u32,
    pub parent: Option<usize>,
    pub dir: Option<String>,
}

impl TreeNodeRecord {
    pub fn from_node(node: &TreeNode) -> Self {
        TreeNodeRecord {
            triple: [
                node.triple.a().to_string(),
                node.triple.b().to_string(),
                node.triple.c().to_string(),
            ],
            depth: node.depth,
            parent: node.parent,
            dir: node.dir.map(|d| d.as_str().to_string()),
        }
    }

    pub fn to_node(&self) -> Result<TreeNode, ExportError> {
        let parse = |s: &str| {
            BigInt::from_str(s).map_err(|_| ExportError::Malformed(format!("bad integer {s:?}")))
        };
        let triple = Triple::new(
            parse(&self.triple[0])?,
            parse(&self.triple[1])?,
            parse(&self.triple[2])?,
        )
        .map_err(|e| ExportError::Malformed(e.to_string()))?;
        let dir = match self.dir.as_deref() {
            None => None,
            Some("first") => Some(JumpDir::First),
            Some("second") => Some(JumpDir::Second),
            Some("third") => Some(JumpDir::Third),
            Some(other) => {
                return Err(ExportError::Malformed(format!("bad direction {other:?}")))
            }
        };
        Ok(TreeNode {
            triple,
            depth: self.depth,
            parent: self.parent,
            dir,
        })
    }
}

pub fn to_records(nodes: &[TreeNode]) -> Vec<TreeNodeRecord> {
    nodes.iter().map(TreeNodeRecord::from_node).collect()
}

/// JSON export: an array of `{triple:[a,b,c], depth, parent, dir}` records.
pub fn to_json(nodes: &[TreeNode]) -> String {
    serde_json::to_string_pretty(&to_records(nodes)).expect("tree records serialize")
}

pub fn from_json(json: &str) -> Result<Vec<TreeNode>, ExportError> {
    let records: Vec<TreeNodeRecord> =
        serde_json::from_str(json).map_err(|e| ExportError::Json(e.to_string()))?;
    records.iter().map(TreeNodeRecord::to_node).collect()
}

/// DOT export: one node per triple labeled `(a,b,c)`, edges labeled by jump
/// direction, in the same deterministic order as the node list.
pub fn to_dot(nodes: &[TreeNode]) -> String {
    let mut out = String::from("digraph tree {\n");
    for (i, node) in nodes.iter().enumerate() {
        out.push_str(&format!("  n{} [label=\"{}\"];\n", i, node.triple));
    }
    for (i, node) in nodes.iter().enumerate() {
        if let (Some(parent), Some(dir)) = (node.parent, node.dir) {
            out.push_str(&format!("  n{} -> n{} [label=\"{}\"];\n", parent, i, dir));
        }
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tree::{generate, EnumBound, FamilySpec};

    #[test]
    fn json_round_trip() {
        let spec = FamilySpec::cubic(0, 1, 2);
        let nodes = generate(&spec, &EnumBound::MaxDepth(2));
        let json = to_json(&nodes);
        let back = from_json(&json).unwrap();
        assert_eq!(nodes, back);
    }

    #[test]
    fn dot_depth_one_markov() {
        let spec = FamilySpec::cubic(0, 0, 0);
        let nodes = generate(&spec, &EnumBound::MaxDepth(1));
        let dot = to_dot(&nodes);
        assert_eq!(nodes.len(), 4);
        assert!(dot.starts_with("digraph tree {"));
        assert!(dot.contains("n0 [label=\"(1,1,1)\"]"));
        assert!(dot.contains("n0 -> n1 [label=\"first\"]"));
        assert!(dot.contains("n0 -> n3 [label=\"third\"]"));
        // deterministic output
        assert_eq!(dot, to_dot(&nodes));
    }

    #[test]
    fn root_only_export() {
        let spec = FamilySpec::cubic(0, 0, 0);
        let nodes = generate(&spec, &EnumBound::MaxDepth(0));
        assert_eq!(nodes.len(), 1);
        let dot = to_dot(&nodes);
        assert!(dot.contains("(1,1,1)"));
        assert!(!dot.contains("->"));
    }

    #[test]
    fn malformed_records_are_rejected() {
        assert!(from_json("[{\"triple\":[\"1\",\"1\",\"x\"],\"depth\":0,\"parent\":null,\"dir\":null}]").is_err());
        assert!(from_json("[{\"triple\":[\"1\",\"1\",\"1\"],\"depth\":0,\"parent\":null,\"dir\":\"up\"}]").is_err());
        assert!(from_json("[{\"triple\":[\"0\",\"1\",\"1\"],\"depth\":0,\"parent\":null,\"dir\":null}]").is_err());
    }
}
