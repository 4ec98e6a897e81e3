//! Iterated decomposition graphs and their admissible subgraphs.
//!
//! The tree alternates staircase nodes (integer label `m`, a standard set
//! in `N^m`) and decomposition nodes (label `m - 1/2`). Every staircase
//! node of label `m ≥ 1` has one child per decomposition; every
//! decomposition node has one child per part, repeated by multiplicity.
//! Leaves are the one-point sets in `N^0`.

use std::collections::HashMap;
use std::fmt::Write as _;

use serde_json::{json, Value};
use thiserror::Error;

use crate::decomposition::{enumerate_decompositions, multiset_count, Decomposition};
use crate::staircase::StandardSet;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("graph too large: {what} is {value}, limit {limit}")]
    SizeLimitExceeded {
        what: &'static str,
        value: usize,
        limit: usize,
    },
}

/// Resource guards for graph construction.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GraphLimits {
    pub max_dim: usize,
    pub max_size: usize,
}

impl Default for GraphLimits {
    fn default() -> Self {
        GraphLimits {
            max_dim: 4,
            max_size: 8,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StaircaseNode {
    pub delta: StandardSet,
    pub children: Vec<DecompositionNode>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DecompositionNode {
    pub decomposition: Decomposition,
    /// One child per part, in the order of [`Decomposition::parts`].
    /// Empty once the graph has been truncated below this node.
    pub children: Vec<StaircaseNode>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IteratedDecompositionGraph {
    root: StaircaseNode,
    truncated: bool,
}

impl StaircaseNode {
    pub fn label(&self) -> f64 {
        self.delta.dim() as f64
    }
}

pub fn build_iterated_graph(
    delta: &StandardSet,
    limits: GraphLimits,
) -> Result<IteratedDecompositionGraph, GraphError> {
    if delta.dim() > limits.max_dim {
        return Err(GraphError::SizeLimitExceeded {
            what: "dimension",
            value: delta.dim(),
            limit: limits.max_dim,
        });
    }
    if delta.len() > limits.max_size {
        return Err(GraphError::SizeLimitExceeded {
            what: "size",
            value: delta.len(),
            limit: limits.max_size,
        });
    }
    let mut memo = HashMap::new();
    Ok(IteratedDecompositionGraph {
        root: build_node(delta, &mut memo),
        truncated: false,
    })
}

fn build_node(
    delta: &StandardSet,
    memo: &mut HashMap<StandardSet, StaircaseNode>,
) -> StaircaseNode {
    if let Some(n) = memo.get(delta) {
        return n.clone();
    }
    let children = if delta.dim() == 0 {
        Vec::new()
    } else {
        enumerate_decompositions(delta)
            .into_iter()
            .map(|dec| {
                let parts = dec.parts().map(|p| build_node(p, memo)).collect();
                DecompositionNode {
                    decomposition: dec,
                    children: parts,
                }
            })
            .collect()
    };
    let node = StaircaseNode {
        delta: delta.clone(),
        children,
    };
    memo.insert(delta.clone(), node.clone());
    node
}

impl IteratedDecompositionGraph {
    pub fn root(&self) -> &StaircaseNode {
        &self.root
    }

    pub fn is_truncated(&self) -> bool {
        self.truncated
    }

    /// Drop every node of label `≤ 2`. The root is kept even when its own
    /// label is `≤ 2`, in which case it loses its children.
    pub fn truncate(&self) -> IteratedDecompositionGraph {
        fn cut(node: &StaircaseNode) -> StaircaseNode {
            if node.delta.dim() <= 2 {
                return StaircaseNode {
                    delta: node.delta.clone(),
                    children: Vec::new(),
                };
            }
            StaircaseNode {
                delta: node.delta.clone(),
                children: node
                    .children
                    .iter()
                    .map(|d| DecompositionNode {
                        decomposition: d.decomposition.clone(),
                        children: if node.delta.dim() <= 3 {
                            Vec::new()
                        } else {
                            d.children.iter().map(cut).collect()
                        },
                    })
                    .collect(),
            }
        }
        IteratedDecompositionGraph {
            root: cut(&self.root),
            truncated: true,
        }
    }

    /// Number of admissible subgraphs up to symmetry: one decomposition
    /// below every staircase node, and below a decomposition node an
    /// unordered choice for each class of equal parts, i.e. multisets of
    /// size `h_j` from the admissible subgraphs of that part.
    pub fn count_admissible_subgraphs(&self) -> u128 {
        fn staircase(node: &StaircaseNode) -> u128 {
            if node.children.is_empty() {
                return 1;
            }
            node.children.iter().map(decomposition).sum()
        }
        fn decomposition(node: &DecompositionNode) -> u128 {
            if node.children.is_empty() {
                return 1;
            }
            let mut classes: Vec<(&StandardSet, u128, usize)> = Vec::new();
            for child in &node.children {
                match classes.iter_mut().find(|(d, _, _)| **d == child.delta) {
                    Some(c) => c.2 += 1,
                    None => classes.push((&child.delta, staircase(child), 1)),
                }
            }
            classes
                .iter()
                .map(|&(_, e, h)| multiset_count(e, h))
                .product()
        }
        staircase(&self.root)
    }

    /// Counts of staircase and decomposition nodes.
    pub fn node_counts(&self) -> (usize, usize) {
        fn walk(n: &StaircaseNode, acc: &mut (usize, usize)) {
            acc.0 += 1;
            for d in &n.children {
                acc.1 += 1;
                for c in &d.children {
                    walk(c, acc);
                }
            }
        }
        let mut acc = (0, 0);
        walk(&self.root, &mut acc);
        acc
    }

    /// Nested JSON tree with `"label"` values `n, n - 0.5, …`.
    pub fn to_json(&self) -> Value {
        fn staircase(n: &StaircaseNode) -> Value {
            json!({
                "label": n.label(),
                "delta": n.delta,
                "children": n.children.iter().map(|d| decomposition(d, n.label() - 0.5)).collect::<Vec<_>>(),
            })
        }
        fn decomposition(d: &DecompositionNode, label: f64) -> Value {
            json!({
                "label": label,
                "decomposition": d.decomposition,
                "children": d.children.iter().map(staircase).collect::<Vec<_>>(),
            })
        }
        json!({ "truncated": self.truncated, "root": staircase(&self.root) })
    }

    /// Graphviz rendering; nodes are numbered in depth-first order.
    pub fn to_dot(&self) -> String {
        fn staircase(n: &StaircaseNode, next: &mut usize, out: &mut String) -> usize {
            let id = *next;
            *next += 1;
            let _ = writeln!(
                out,
                "  n{} [shape=box, label=\"{} : {}\"];",
                id,
                n.label(),
                n.delta
            );
            for d in &n.children {
                let did = *next;
                *next += 1;
                let _ = writeln!(
                    out,
                    "  n{} [shape=ellipse, label=\"{} : {}\"];",
                    did,
                    n.label() - 0.5,
                    d.decomposition
                );
                let _ = writeln!(out, "  n{} -> n{};", id, did);
                for c in &d.children {
                    let cid = staircase(c, next, out);
                    let _ = writeln!(out, "  n{} -> n{};", did, cid);
                }
            }
            id
        }
        let mut out = String::from("digraph decomposition {\n");
        let mut next = 0;
        staircase(&self.root, &mut next, &mut out);
        out.push_str("}\n");
        out
    }
}
