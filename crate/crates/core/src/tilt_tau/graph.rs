use std::collections::{BTreeSet, HashMap};
use std::fmt::Write as _;

use serde_json::{json, Value};

use crate::exactlin::Field;
use crate::quiver_algebra::BoundQuiverAlgebra;
use crate::repmod::{is_isomorphic, BasicModule, Representation};

use super::pairs::SupportTauTiltingPair;
use super::tilting::TiltingRecord;

/// What the nodes of a [`MutationGraph`] are.
/// Sorted summand dimension vectors and the projective part of a node.
pub type NodeKey = (Vec<Vec<usize>>, Vec<usize>);

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GraphKind {
    /// Basic support tau-tilting pairs, explored by left mutation from `(A, 0)`.
    SupportTauTilting,
    /// Basic tilting modules of projective dimension at most `n`, explored by
    /// downward mutation from `A`. Only the component reachable from `A` is seen.
    Tilting { n: usize },
}

/// A node: indecomposable summands by module id, and for pairs the vertices of `P`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GraphNode {
    pub summands: Vec<usize>,
    pub projectives: Vec<usize>,
    /// Projective dimension, for tilting nodes.
    pub pd: Option<usize>,
}

/// `from -> to` replaces summand `removed` by `added`; `added` is `None`
/// when a vertex moves into `P` instead.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MutationEdge {
    pub from: usize,
    pub to: usize,
    pub removed: usize,
    pub added: Option<usize>,
}

/// Result of a mutation search.
///
/// `modules` holds every indecomposable met during the search, pairwise
/// non-isomorphic; nodes refer to it by index. `order` lists pairs
/// `(a, b)` with `a > b`: all of them for tilting graphs, the covering
/// pairs (one per mutation edge) for support tau-tilting graphs.
#[derive(Clone, Debug)]
pub struct MutationGraph<F: Field> {
    pub kind: GraphKind,
    pub algebra: BoundQuiverAlgebra<F>,
    pub modules: Vec<Representation<F>>,
    pub nodes: Vec<GraphNode>,
    pub edges: Vec<MutationEdge>,
    pub order: Vec<(usize, usize)>,
    /// False when the node budget stopped the search.
    pub complete: bool,
    pub budget: usize,
}

impl<F: Field> MutationGraph<F> {
    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    /// Sorted dimension vectors of the summands of node `i`.
    pub fn dimvecs(&self, i: usize) -> Vec<Vec<usize>> {
        let mut d: Vec<Vec<usize>> = self.nodes[i].summands.iter().map(|&s| self.modules[s].dims().to_vec()).collect();
        d.sort();
        d
    }

    /// Deterministic sort key: dimension vectors, then projective vertices.
    pub fn key(&self, i: usize) -> NodeKey {
        (self.dimvecs(i), self.nodes[i].projectives.clone())
    }

    pub fn basic(&self, i: usize) -> BasicModule<F> {
        let parts = self.nodes[i].summands.iter().map(|&s| self.modules[s].clone()).collect();
        BasicModule::from_indecomposables(&self.algebra, parts)
    }

    pub fn pair(&self, i: usize) -> SupportTauTiltingPair<F> {
        SupportTauTiltingPair::new(self.basic(i), self.nodes[i].projectives.clone())
    }

    /// Tilting record of node `i` (tilting graphs only).
    pub fn record(&self, i: usize) -> Option<TiltingRecord<F>> {
        self.nodes[i].pd.map(|pd| TiltingRecord { module: self.basic(i), pd })
    }

    /// Human-readable label, e.g. `(1,1,0) + (0,1,0) | P(3)`.
    pub fn label(&self, i: usize) -> String {
        let q = self.algebra.quiver();
        let mut s = if self.nodes[i].summands.is_empty() {
            "0".to_string()
        } else {
            self.dimvecs(i).iter().map(|d| dimvec_string(d)).collect::<Vec<_>>().join(" + ")
        };
        if !self.nodes[i].projectives.is_empty() {
            let ps: Vec<String> = self.nodes[i].projectives.iter().map(|&v| format!("P({})", q.vertex_label(v))).collect();
            let _ = write!(s, " | {}", ps.join(" + "));
        }
        s
    }

    /// Nodes, edges and order renumbered in increasing [`key`](Self::key) order.
    pub fn canonicalize(&self) -> Self {
        let mut perm: Vec<usize> = (0..self.len()).collect();
        let keys: Vec<_> = perm.iter().map(|&i| self.key(i)).collect();
        perm.sort_by(|&a, &b| keys[a].cmp(&keys[b]));
        let mut new_index = vec![0; self.len()];
        for (new, &old) in perm.iter().enumerate() {
            new_index[old] = new;
        }
        let mut edges: Vec<MutationEdge> = self
            .edges
            .iter()
            .map(|e| MutationEdge { from: new_index[e.from], to: new_index[e.to], ..e.clone() })
            .collect();
        edges.sort_by_key(|e| (e.from, e.to));
        let mut order: Vec<(usize, usize)> = self.order.iter().map(|&(a, b)| (new_index[a], new_index[b])).collect();
        order.sort_unstable();
        MutationGraph {
            nodes: perm.iter().map(|&i| self.nodes[i].clone()).collect(),
            edges,
            order,
            ..self.clone()
        }
    }

    /// The order relation is antisymmetric and has no cycles; for tilting
    /// graphs, where the whole relation is listed, it is also transitive.
    pub fn order_is_partial(&self) -> bool {
        let set: BTreeSet<(usize, usize)> = self.order.iter().copied().collect();
        if set.iter().any(|&(a, b)| a == b || set.contains(&(b, a))) {
            return false;
        }
        if let GraphKind::Tilting { .. } = self.kind {
            for &(a, b) in &set {
                for &(_, c) in set.range((b, 0)..(b + 1, 0)) {
                    if !set.contains(&(a, c)) {
                        return false;
                    }
                }
            }
        }
        // Kahn's algorithm
        let mut indeg = vec![0usize; self.len()];
        let mut out: Vec<Vec<usize>> = vec![Vec::new(); self.len()];
        for &(a, b) in &set {
            out[a].push(b);
            indeg[b] += 1;
        }
        let mut stack: Vec<usize> = (0..self.len()).filter(|&i| indeg[i] == 0).collect();
        let mut seen = 0;
        while let Some(v) = stack.pop() {
            seen += 1;
            for &w in &out[v] {
                indeg[w] -= 1;
                if indeg[w] == 0 {
                    stack.push(w);
                }
            }
        }
        seen == self.len()
    }

    /// Covering pairs of the order relation.
    pub fn hasse(&self) -> Vec<(usize, usize)> {
        if self.kind == GraphKind::SupportTauTilting {
            return self.order.clone();
        }
        let set: BTreeSet<(usize, usize)> = self.order.iter().copied().collect();
        let mut covers: Vec<(usize, usize)> = set
            .iter()
            .copied()
            .filter(|&(a, c)| !(0..self.len()).any(|b| set.contains(&(a, b)) && set.contains(&(b, c))))
            .collect();
        covers.sort_unstable();
        covers
    }

    /// A node below every other one, if the listed order has one.
    pub fn minimum(&self) -> Option<usize> {
        let set: BTreeSet<(usize, usize)> = self.order.iter().copied().collect();
        (0..self.len()).find(|&u| (0..self.len()).all(|t| t == u || set.contains(&(t, u))))
    }

    /// Node sets agree up to isomorphism of summands, ignoring numbering.
    pub fn same_nodes(&self, other: &Self) -> bool {
        if self.len() != other.len() {
            return false;
        }
        let mut buckets: HashMap<NodeKey, Vec<usize>> = HashMap::new();
        for j in 0..other.len() {
            buckets.entry(other.key(j)).or_default().push(j);
        }
        let mut used = vec![false; other.len()];
        for i in 0..self.len() {
            let Some(cands) = buckets.get(&self.key(i)) else {
                return false;
            };
            let hit = cands.iter().copied().find(|&j| {
                !used[j]
                    && self.nodes[i].summands.iter().all(|&s| {
                        other.nodes[j].summands.iter().any(|&t| is_isomorphic(&self.modules[s], &other.modules[t]))
                    })
            });
            match hit {
                Some(j) => used[j] = true,
                None => return false,
            }
        }
        true
    }

    /// Graphviz rendering: order edges solid, mutation edges dashed.
    pub fn to_dot(&self) -> String {
        let mut s = String::from("digraph mutation {\n  node [shape=box];\n");
        for i in 0..self.len() {
            let _ = writeln!(s, "  n{i} [label=\"{}\"];", self.label(i));
        }
        for (a, b) in self.hasse() {
            let _ = writeln!(s, "  n{a} -> n{b};");
        }
        for e in &self.edges {
            let _ = writeln!(s, "  n{} -> n{} [style=dashed];", e.from, e.to);
        }
        s.push_str("}\n");
        s
    }

    pub fn to_json(&self) -> Value {
        let q = self.algebra.quiver();
        let kind = match self.kind {
            GraphKind::SupportTauTilting => json!({ "type": "sttilt" }),
            GraphKind::Tilting { n } => json!({ "type": "tilt", "n": n }),
        };
        let nodes: Vec<Value> = (0..self.len())
            .map(|i| {
                let mut v = json!({
                    "label": self.label(i),
                    "summands": self.dimvecs(i),
                    "projectives": self.nodes[i].projectives.iter().map(|&p| q.vertex_label(p)).collect::<Vec<_>>(),
                });
                if let Some(pd) = self.nodes[i].pd {
                    v["pd"] = json!(pd);
                }
                v
            })
            .collect();
        let edges: Vec<Value> = self
            .edges
            .iter()
            .map(|e| {
                json!({
                    "from": e.from,
                    "to": e.to,
                    "removed": self.modules[e.removed].dims(),
                    "added": e.added.map(|a| self.modules[a].dims().to_vec()),
                })
            })
            .collect();
        json!({
            "kind": kind,
            "complete": self.complete,
            "reachable_component": matches!(self.kind, GraphKind::Tilting { .. }),
            "budget": self.budget,
            "count": self.len(),
            "nodes": nodes,
            "edges": edges,
            "order": self.order,
        })
    }
}

pub(crate) fn dimvec_string(d: &[usize]) -> String {
    format!("({})", d.iter().map(usize::to_string).collect::<Vec<_>>().join(","))
}
