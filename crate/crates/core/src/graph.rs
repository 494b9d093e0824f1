//! Crystal graphs of tableau sets, rendered as DOT or JSON.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::Serialize;

use crate::ai::AiCrystal;
use crate::gl::GlCrystal;
use crate::tableau::Tableau;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Node {
    pub id: usize,
    pub label: String,
    pub tableau: Tableau,
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct Edge {
    pub source: usize,
    pub target: usize,
    pub color: u32,
}

/// gl graphs have a directed edge `b → F̃_i b`; AI graphs have one undirected
/// edge `{b, B̃_i b}` per pair (loops never occur).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CrystalGraph {
    pub directed: bool,
    pub nodes: Vec<Node>,
    pub edges: Vec<Edge>,
}

fn index(elements: &[Tableau]) -> (Vec<Tableau>, BTreeMap<Tableau, usize>) {
    let mut sorted = elements.to_vec();
    sorted.sort();
    sorted.dedup();
    let ids = sorted.iter().cloned().enumerate().map(|(k, t)| (t, k)).collect();
    (sorted, ids)
}

fn nodes(sorted: Vec<Tableau>) -> Vec<Node> {
    sorted.into_iter().enumerate().map(|(id, t)| Node { id, label: t.to_string(), tableau: t }).collect()
}

impl CrystalGraph {
    /// Edges leaving the set are dropped.
    pub fn gl(elements: &[Tableau]) -> Self {
        let (sorted, ids) = index(elements);
        let mut edges = Vec::new();
        for (k, t) in sorted.iter().enumerate() {
            for i in 1..t.n() {
                if let Some(&target) = t.ftil(i).and_then(|f| ids.get(&f)) {
                    edges.push(Edge { source: k, target, color: i });
                }
            }
        }
        edges.sort();
        CrystalGraph { directed: true, nodes: nodes(sorted), edges }
    }

    pub fn ai(elements: &[Tableau]) -> Self {
        let (sorted, ids) = index(elements);
        let mut edges = Vec::new();
        for (k, t) in sorted.iter().enumerate() {
            for i in 1..t.n() {
                if let Some(&target) = t.btil(i).and_then(|b| ids.get(&b)) {
                    if k < target {
                        edges.push(Edge { source: k, target, color: i });
                    }
                }
            }
        }
        edges.sort();
        CrystalGraph { directed: false, nodes: nodes(sorted), edges }
    }

    pub fn to_dot(&self) -> String {
        let (kind, arrow) = if self.directed { ("digraph", "->") } else { ("graph", "--") };
        let mut out = format!("{kind} crystal {{\n");
        for node in &self.nodes {
            let _ = writeln!(out, "  {} [label=\"{}\"];", node.id, node.label);
        }
        for e in &self.edges {
            let _ = writeln!(out, "  {} {arrow} {} [label=\"{}\"];", e.source, e.target, e.color);
        }
        out.push_str("}\n");
        out
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("graph serialises")
    }
}
