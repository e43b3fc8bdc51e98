//! The binary modular decomposition tree `T(G)`.
//!
//! Every internal node splits its representative graph into a maximal strong
//! module `H` (left child) and the quotient `g(G, H, h)` (right child), where
//! the fresh marker vertex `h` stands for `H`. Leaves are prime graphs or
//! graphs whose maximal strong modules are all singletons (complete and
//! edgeless graphs, and anything on at most two vertices).

use std::collections::{BTreeMap, HashSet};
use std::fmt::Write as _;

use crate::graph::Graph;
use crate::modules::{maximal_strong_modules, quotient_substitute};

pub type NodeId = usize;

#[derive(Clone, Debug)]
pub enum NodeKind {
    Leaf,
    Internal {
        left: NodeId,
        right: NodeId,
        /// Vertices of this node's representative forming `H`, sorted.
        /// Vertex `i` of the left representative is `module[i]`.
        module: Vec<usize>,
        /// Vertex `i < outside.len()` of the right representative is
        /// `outside[i]` here.
        outside: Vec<usize>,
        /// Index of `h` in the right representative.
        marker: usize,
    },
}

#[derive(Clone, Debug)]
pub struct DecompNode {
    pub graph: Graph,
    pub kind: NodeKind,
}

impl DecompNode {
    pub fn is_leaf(&self) -> bool {
        matches!(self.kind, NodeKind::Leaf)
    }
}

#[derive(Clone, Debug)]
pub struct DecompTree {
    nodes: Vec<DecompNode>,
    root: NodeId,
    markers: BTreeMap<String, NodeId>,
}

/// Decomposes `g`. Deterministic: at each node the maximal strong module of
/// size at least two containing the smallest vertex index is extracted.
pub fn build_tree(g: &Graph) -> DecompTree {
    let taken: HashSet<String> = g.labels().iter().cloned().collect();
    let mut builder = TreeBuilder {
        nodes: Vec::new(),
        markers: BTreeMap::new(),
        taken,
        counter: 0,
    };
    let root = builder.build(g.clone());
    DecompTree {
        nodes: builder.nodes,
        root,
        markers: builder.markers,
    }
}

struct TreeBuilder {
    nodes: Vec<DecompNode>,
    markers: BTreeMap<String, NodeId>,
    taken: HashSet<String>,
    counter: usize,
}

impl TreeBuilder {
    fn fresh_marker(&mut self) -> String {
        loop {
            self.counter += 1;
            let label = format!("#{}", self.counter);
            if !self.taken.contains(&label) {
                return label;
            }
        }
    }

    fn build(&mut self, graph: Graph) -> NodeId {
        let id = self.nodes.len();
        let module = if graph.n() <= 2 {
            None
        } else {
            maximal_strong_modules(&graph)
                .expect("n > 2")
                .into_iter()
                .find(|part| part.len() >= 2)
        };
        let Some(module) = module else {
            self.nodes.push(DecompNode {
                graph,
                kind: NodeKind::Leaf,
            });
            return id;
        };
        // reserve the slot so ids follow preorder
        self.nodes.push(DecompNode {
            graph: Graph::empty(0),
            kind: NodeKind::Leaf,
        });
        let label = self.fresh_marker();
        let quotient = quotient_substitute(&graph, &module, &label)
            .expect("maximal strong module is nontrivial");
        let left = self.build(graph.induced_sorted(&module));
        self.markers.insert(label, left);
        let right = self.build(quotient.graph);
        self.nodes[id] = DecompNode {
            graph,
            kind: NodeKind::Internal {
                left,
                right,
                module,
                outside: quotient.outside,
                marker: quotient.marker,
            },
        };
        id
    }
}

impl DecompTree {
    pub fn root(&self) -> NodeId {
        self.root
    }

    pub fn node(&self, id: NodeId) -> &DecompNode {
        &self.nodes[id]
    }

    /// `r(X)` for node `id`.
    pub fn representative(&self, id: NodeId) -> &Graph {
        &self.nodes[id].graph
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    /// Marker label to the left subtree it abbreviates.
    pub fn markers(&self) -> &BTreeMap<String, NodeId> {
        &self.markers
    }

    pub fn leaves(&self) -> impl Iterator<Item = NodeId> + '_ {
        (0..self.nodes.len()).filter(|&id| self.nodes[id].is_leaf())
    }

    pub fn internal_count(&self) -> usize {
        self.nodes.len() - self.leaves().count()
    }

    pub fn leaf_edge_sum(&self) -> usize {
        self.leaves().map(|id| self.nodes[id].graph.m()).sum()
    }

    /// Expands every marker bottom-up. The result has the labels and
    /// adjacency of the decomposed graph, possibly in another vertex order.
    pub fn reconstruct(&self) -> Graph {
        self.reconstruct_node(self.root)
    }

    fn reconstruct_node(&self, id: NodeId) -> Graph {
        match &self.nodes[id].kind {
            NodeKind::Leaf => self.nodes[id].graph.clone(),
            NodeKind::Internal {
                left,
                right,
                marker,
                ..
            } => {
                let inner = self.reconstruct_node(*left);
                let outer = self.reconstruct_node(*right);
                let marker_label = self.nodes[*right].graph.label(*marker);
                let h = outer
                    .vertex_by_label(marker_label)
                    .expect("marker survives reconstruction");
                outer.substitute(h, &inner).expect("labels stay unique")
            }
        }
    }

    /// Indented listing, one line per node in preorder.
    pub fn render_text(&self) -> String {
        let mut out = String::new();
        self.render_node(self.root, 0, &mut out);
        out
    }

    fn render_node(&self, id: NodeId, depth: usize, out: &mut String) {
        let node = &self.nodes[id];
        let indent = "  ".repeat(depth);
        let verts = node.graph.labels().join(" ");
        match &node.kind {
            NodeKind::Leaf => {
                let _ = writeln!(
                    out,
                    "{indent}leaf: {}, {} vertices, {} edges [{verts}]",
                    leaf_kind(&node.graph),
                    node.graph.n(),
                    node.graph.m()
                );
            }
            NodeKind::Internal {
                left,
                right,
                marker,
                ..
            } => {
                let h = self.nodes[*right].graph.label(*marker);
                let module = self.nodes[*left].graph.labels().join(" ");
                let _ = writeln!(
                    out,
                    "{indent}internal: {} vertices [{verts}], module [{module}] -> {h}",
                    node.graph.n()
                );
                self.render_node(*left, depth + 1, out);
                self.render_node(*right, depth + 1, out);
            }
        }
    }

    /// Graphviz rendering of the tree.
    pub fn render_dot(&self) -> String {
        let mut out = String::from("digraph decomposition {\n  node [shape=box];\n");
        for (id, node) in self.nodes.iter().enumerate() {
            let verts = node.graph.labels().join(" ");
            let text = match &node.kind {
                NodeKind::Leaf => format!("leaf ({}): {verts}", leaf_kind(&node.graph)),
                NodeKind::Internal { right, marker, .. } => {
                    format!(
                        "internal: {verts}\\nmarker {}",
                        self.nodes[*right].graph.label(*marker)
                    )
                }
            };
            let _ = writeln!(out, "  n{id} [label=\"{}\"];", text.replace('"', "\\\""));
            if let NodeKind::Internal { left, right, .. } = node.kind {
                let _ = writeln!(out, "  n{id} -> n{left} [label=\"H\"];");
                let _ = writeln!(out, "  n{id} -> n{right} [label=\"g\"];");
            }
        }
        out.push_str("}\n");
        out
    }
}

fn leaf_kind(g: &Graph) -> &'static str {
    let n = g.n();
    if n <= 2 {
        "trivial"
    } else if g.m() == 0 {
        "edgeless"
    } else if g.m() == n * (n - 1) / 2 {
        "complete"
    } else {
        "prime"
    }
}
