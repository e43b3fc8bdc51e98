//! Simple undirected graphs with dense vertex indices and external labels.

use std::collections::HashSet;
use std::fmt;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for graph with {n} vertices")]
    OutOfRange { vertex: usize, n: usize },
    #[error("self-loop on vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate vertex label {0:?}")]
    DuplicateLabel(String),
    #[error("expected {expected} labels, got {got}")]
    LabelCount { expected: usize, got: usize },
    #[error("expected {expected} weights, got {got}")]
    WeightCount { expected: usize, got: usize },
}

/// Immutable simple graph on vertices `0..n`.
///
/// Adjacency is kept twice: as a bit matrix for constant-time queries and as
/// sorted neighbor lists for iteration.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    words: usize,
    matrix: Vec<u64>,
    neighbors: Vec<Vec<usize>>,
    edge_count: usize,
    labels: Vec<String>,
}

impl Graph {
    /// Builds a graph from unordered pairs. Labels default to `"1"..="n"`.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let labels = (1..=n).map(|i| i.to_string()).collect();
        Self::from_labeled_edges(labels, edges)
    }

    pub fn from_labeled_edges(
        labels: Vec<String>,
        edges: &[(usize, usize)],
    ) -> Result<Self, GraphError> {
        let n = labels.len();
        let mut seen = HashSet::with_capacity(n);
        for label in &labels {
            if !seen.insert(label.as_str()) {
                return Err(GraphError::DuplicateLabel(label.clone()));
            }
        }
        let mut builder = Builder::new(n);
        for &(u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(GraphError::OutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            builder.add(u, v);
        }
        Ok(builder.finish(labels))
    }

    pub fn empty(n: usize) -> Self {
        Self::from_edges(n, &[]).expect("no edges")
    }

    pub fn complete(n: usize) -> Self {
        let mut edges = Vec::with_capacity(n * n.saturating_sub(1) / 2);
        for u in 0..n {
            for v in u + 1..n {
                edges.push((u, v));
            }
        }
        Self::from_edges(n, &edges).expect("valid complete graph")
    }

    /// Chordless path `0 - 1 - ... - (n-1)`.
    pub fn path(n: usize) -> Self {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Self::from_edges(n, &edges).expect("valid path")
    }

    /// Chordless cycle on `n >= 3` vertices.
    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "cycle needs at least 3 vertices");
        let mut edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        edges.push((n - 1, 0));
        Self::from_edges(n, &edges).expect("valid cycle")
    }

    /// Same graph with new labels.
    pub fn with_labels(&self, labels: Vec<String>) -> Result<Graph, GraphError> {
        if labels.len() != self.n {
            return Err(GraphError::LabelCount {
                expected: self.n,
                got: labels.len(),
            });
        }
        let edges: Vec<_> = self.edges().collect();
        Graph::from_labeled_edges(labels, &edges)
    }

    /// Same graph with labels `"{prefix}1"..="{prefix}n"`.
    pub fn prefixed(&self, prefix: &str) -> Graph {
        let labels = (1..=self.n).map(|i| format!("{prefix}{i}")).collect();
        self.with_labels(labels).expect("fresh labels are unique")
    }

    /// Whether both graphs have the same label set and the same adjacency
    /// between labels, regardless of vertex order.
    pub fn same_by_labels(&self, other: &Graph) -> bool {
        if self.n != other.n || self.edge_count != other.edge_count {
            return false;
        }
        let index: std::collections::HashMap<&str, usize> = other
            .labels
            .iter()
            .enumerate()
            .map(|(i, l)| (l.as_str(), i))
            .collect();
        let Some(map) = self
            .labels
            .iter()
            .map(|l| index.get(l.as_str()).copied())
            .collect::<Option<Vec<usize>>>()
        else {
            return false;
        };
        self.edges().all(|(u, v)| other.has_edge(map[u], map[v]))
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn m(&self) -> usize {
        self.edge_count
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.matrix[u * self.words + v / 64] >> (v % 64) & 1 == 1
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.neighbors[v]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.neighbors[v].len()
    }

    /// Adjacency row of `v` as packed 64-bit words.
    #[inline]
    pub fn row(&self, v: usize) -> &[u64] {
        &self.matrix[v * self.words..(v + 1) * self.words]
    }

    pub fn label(&self, v: usize) -> &str {
        &self.labels[v]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn vertex_by_label(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| {
            self.neighbors[u]
                .iter()
                .copied()
                .filter(move |&v| u < v)
                .map(move |v| (u, v))
        })
    }

    fn check_vertices(&self, set: &[usize]) -> Result<(), GraphError> {
        match set.iter().find(|&&v| v >= self.n) {
            Some(&v) => Err(GraphError::OutOfRange {
                vertex: v,
                n: self.n,
            }),
            None => Ok(()),
        }
    }

    /// Subgraph induced by `set`. Vertex `i` of the result is the `i`-th
    /// element of `set` after sorting and deduplication; labels are kept.
    pub fn induced_subgraph(&self, set: &[usize]) -> Result<Graph, GraphError> {
        self.check_vertices(set)?;
        let mut verts = set.to_vec();
        verts.sort_unstable();
        verts.dedup();
        Ok(self.induced_sorted(&verts))
    }

    pub(crate) fn induced_sorted(&self, verts: &[usize]) -> Graph {
        let mut builder = Builder::new(verts.len());
        for (i, &u) in verts.iter().enumerate() {
            for (j, &v) in verts.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    builder.add(i, j);
                }
            }
        }
        builder.finish(verts.iter().map(|&v| self.labels[v].clone()).collect())
    }

    pub fn complement(&self) -> Graph {
        let mut builder = Builder::new(self.n);
        for u in 0..self.n {
            for v in u + 1..self.n {
                if !self.has_edge(u, v) {
                    builder.add(u, v);
                }
            }
        }
        builder.finish(self.labels.clone())
    }

    pub fn is_stable_set(&self, set: &[usize]) -> Result<bool, GraphError> {
        self.check_vertices(set)?;
        Ok(self.is_stable_unchecked(set))
    }

    pub(crate) fn is_stable_unchecked(&self, set: &[usize]) -> bool {
        set.iter()
            .enumerate()
            .all(|(i, &u)| set[i + 1..].iter().all(|&v| u != v && !self.has_edge(u, v)))
    }

    pub fn is_clique(&self, set: &[usize]) -> bool {
        set.iter()
            .enumerate()
            .all(|(i, &u)| set[i + 1..].iter().all(|&v| self.has_edge(u, v)))
    }

    /// Connected components, each sorted, ordered by smallest member.
    pub fn components(&self) -> Vec<Vec<usize>> {
        self.components_by(|u, v| self.has_edge(u, v))
    }

    /// Components of the complement, computed without materializing it.
    pub fn co_components(&self) -> Vec<Vec<usize>> {
        self.components_by(|u, v| u != v && !self.has_edge(u, v))
    }

    fn components_by(&self, adjacent: impl Fn(usize, usize) -> bool) -> Vec<Vec<usize>> {
        let mut comp = vec![usize::MAX; self.n];
        let mut out = Vec::new();
        let mut unvisited: Vec<usize> = (0..self.n).rev().collect();
        while let Some(start) = unvisited.pop() {
            let id = out.len();
            comp[start] = id;
            let mut members = vec![start];
            let mut stack = vec![start];
            while let Some(u) = stack.pop() {
                let mut i = 0;
                while i < unvisited.len() {
                    let v = unvisited[i];
                    if adjacent(u, v) {
                        comp[v] = id;
                        members.push(v);
                        stack.push(v);
                        unvisited.swap_remove(i);
                    } else {
                        i += 1;
                    }
                }
            }
            members.sort_unstable();
            out.push(members);
            // keep the smallest unvisited vertex on top
            unvisited.sort_unstable_by(|a, b| b.cmp(a));
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.n <= 1 || self.components().len() == 1
    }

    /// Replaces vertex `v` by `module`: every neighbor of `v` becomes adjacent
    /// to every vertex of `module`. The module's vertices are appended after
    /// the remaining vertices of `self`, in their own order.
    pub fn substitute(&self, v: usize, module: &Graph) -> Result<Graph, GraphError> {
        self.check_vertices(&[v])?;
        let keep: Vec<usize> = (0..self.n).filter(|&u| u != v).collect();
        let k = keep.len();
        let mut labels: Vec<String> = keep.iter().map(|&u| self.labels[u].clone()).collect();
        labels.extend(module.labels.iter().cloned());
        let mut edges = Vec::new();
        for (i, &a) in keep.iter().enumerate() {
            for (j, &b) in keep.iter().enumerate().skip(i + 1) {
                if self.has_edge(a, b) {
                    edges.push((i, j));
                }
            }
            if self.has_edge(a, v) {
                edges.extend((0..module.n).map(|x| (i, k + x)));
            }
        }
        edges.extend(module.edges().map(|(x, y)| (k + x, k + y)));
        Graph::from_labeled_edges(labels, &edges)
    }

    /// Every inclusion-maximal clique, each exactly once.
    ///
    /// Bron–Kerbosch with Tomita pivoting. Exponential in the worst case;
    /// meant for verification on desk-scale graphs.
    pub fn maximal_cliques(&self) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        let mut r = Vec::new();
        let p: Vec<usize> = (0..self.n).collect();
        self.bron_kerbosch(&mut r, p, Vec::new(), &mut out);
        out
    }

    fn bron_kerbosch(
        &self,
        r: &mut Vec<usize>,
        p: Vec<usize>,
        mut x: Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if p.is_empty() {
            if x.is_empty() {
                let mut clique = r.clone();
                clique.sort_unstable();
                out.push(clique);
            }
            return;
        }
        let pivot = p
            .iter()
            .chain(x.iter())
            .copied()
            .max_by_key(|&u| p.iter().filter(|&&v| self.has_edge(u, v)).count())
            .expect("p is nonempty");
        let mut p = p;
        let todo: Vec<usize> = p
            .iter()
            .copied()
            .filter(|&v| !self.has_edge(pivot, v))
            .collect();
        for v in todo {
            let next_p = p.iter().copied().filter(|&u| self.has_edge(u, v)).collect();
            let next_x = x.iter().copied().filter(|&u| self.has_edge(u, v)).collect();
            r.push(v);
            self.bron_kerbosch(r, next_p, next_x, out);
            r.pop();
            p.retain(|&u| u != v);
            x.push(v);
        }
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let edges: Vec<(&str, &str)> = self
            .edges()
            .map(|(u, v)| (self.labels[u].as_str(), self.labels[v].as_str()))
            .collect();
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("m", &self.edge_count)
            .field("labels", &self.labels)
            .field("edges", &edges)
            .finish()
    }
}

pub(crate) struct Builder {
    n: usize,
    words: usize,
    matrix: Vec<u64>,
}

impl Builder {
    pub(crate) fn new(n: usize) -> Self {
        let words = n.div_ceil(64).max(1);
        Self {
            n,
            words,
            matrix: vec![0; n * words],
        }
    }

    #[inline]
    pub(crate) fn add(&mut self, u: usize, v: usize) {
        debug_assert!(u != v && u < self.n && v < self.n);
        self.matrix[u * self.words + v / 64] |= 1 << (v % 64);
        self.matrix[v * self.words + u / 64] |= 1 << (u % 64);
    }

    pub(crate) fn finish(self, labels: Vec<String>) -> Graph {
        debug_assert_eq!(labels.len(), self.n);
        let mut neighbors = vec![Vec::new(); self.n];
        let mut twice = 0;
        for (u, list) in neighbors.iter_mut().enumerate() {
            let row = &self.matrix[u * self.words..(u + 1) * self.words];
            for (w, &word) in row.iter().enumerate() {
                let mut bits = word;
                while bits != 0 {
                    let b = bits.trailing_zeros() as usize;
                    list.push(w * 64 + b);
                    bits &= bits - 1;
                }
            }
            twice += list.len();
        }
        Graph {
            n: self.n,
            words: self.words,
            matrix: self.matrix,
            neighbors,
            edge_count: twice / 2,
            labels,
        }
    }
}

/// A graph with a nonnegative integer weight on every vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightedGraph {
    graph: Graph,
    weights: Vec<u64>,
}

impl WeightedGraph {
    pub fn new(graph: Graph, weights: Vec<u64>) -> Result<Self, GraphError> {
        if weights.len() != graph.n() {
            return Err(GraphError::WeightCount {
                expected: graph.n(),
                got: weights.len(),
            });
        }
        Ok(Self { graph, weights })
    }

    pub fn unit(graph: Graph) -> Self {
        let weights = vec![1; graph.n()];
        Self { graph, weights }
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn weights(&self) -> &[u64] {
        &self.weights
    }

    pub fn weight(&self, v: usize) -> u64 {
        self.weights[v]
    }

    pub fn total_weight(&self) -> u64 {
        self.weights.iter().sum()
    }

    pub fn into_parts(self) -> (Graph, Vec<u64>) {
        (self.graph, self.weights)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(v: &[Vec<usize>]) -> Vec<Vec<usize>> {
        let mut v = v.to_vec();
        v.sort();
        v
    }

    #[test]
    fn triangle_and_cycle() {
        let k3 = Graph::from_edges(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        assert_eq!(k3.m(), 3);
        assert_eq!(k3, Graph::complete(3));
        let c5 = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)]).unwrap();
        assert_eq!(c5.m(), 5);
        assert!(c5.neighbors(0) == [1, 4]);
    }

    #[test]
    fn duplicate_edges_collapse() {
        let g = Graph::from_edges(2, &[(0, 1), (1, 0), (0, 1)]).unwrap();
        assert_eq!(g.m(), 1);
    }

    #[test]
    fn construction_errors() {
        assert_eq!(
            Graph::from_edges(3, &[(0, 3)]),
            Err(GraphError::OutOfRange { vertex: 3, n: 3 })
        );
        assert_eq!(
            Graph::from_edges(3, &[(1, 1)]),
            Err(GraphError::SelfLoop(1))
        );
        let labels = vec!["a".to_string(), "a".to_string()];
        assert!(matches!(
            Graph::from_labeled_edges(labels, &[]),
            Err(GraphError::DuplicateLabel(_))
        ));
    }

    #[test]
    fn induced_subgraph_of_cycle_is_path() {
        let c5 = Graph::cycle(5);
        let p3 = c5.induced_subgraph(&[0, 1, 2]).unwrap();
        assert_eq!(p3.m(), 2);
        assert!(p3.has_edge(0, 1) && p3.has_edge(1, 2) && !p3.has_edge(0, 2));
        assert_eq!(p3.labels(), ["1", "2", "3"]);
        let all: Vec<usize> = (0..5).collect();
        assert_eq!(c5.induced_subgraph(&all).unwrap(), c5);
        assert!(c5.induced_subgraph(&[7]).is_err());
    }

    #[test]
    fn complement_basics() {
        assert_eq!(Graph::complete(3).complement().m(), 0);
        let c5 = Graph::cycle(5);
        let co = c5.complement();
        assert_eq!(co.m(), 5);
        assert!(co.neighbors(0) == [2, 3]);
        assert_eq!(co.complement(), c5);
    }

    #[test]
    fn stable_sets() {
        let c5 = Graph::cycle(5);
        assert!(c5.is_stable_set(&[0, 2]).unwrap());
        assert!(!Graph::complete(3).is_stable_set(&[0, 1]).unwrap());
        assert!(c5.is_stable_set(&[]).unwrap());
        assert!(c5.is_stable_set(&[9]).is_err());
    }

    #[test]
    fn cliques_of_small_graphs() {
        assert_eq!(
            set(&Graph::cycle(5).maximal_cliques()),
            vec![vec![0, 1], vec![0, 4], vec![1, 2], vec![2, 3], vec![3, 4]]
        );
        assert_eq!(Graph::complete(4).maximal_cliques(), vec![vec![0, 1, 2, 3]]);
        assert_eq!(
            set(&Graph::path(4).maximal_cliques()),
            vec![vec![0, 1], vec![1, 2], vec![2, 3]]
        );
        assert_eq!(
            set(&Graph::empty(3).maximal_cliques()),
            vec![vec![0], vec![1], vec![2]]
        );
        assert!(Graph::empty(0).maximal_cliques() == vec![Vec::<usize>::new()]);
    }

    #[test]
    fn components_and_cocomponents() {
        let g = Graph::from_edges(5, &[(0, 3), (1, 4)]).unwrap();
        assert_eq!(g.components(), vec![vec![0, 3], vec![1, 4], vec![2]]);
        assert_eq!(
            Graph::complete(3).co_components(),
            vec![vec![0], vec![1], vec![2]]
        );
        assert_eq!(Graph::path(4).co_components(), vec![vec![0, 1, 2, 3]]);
    }

    #[test]
    fn substitution_appends_module() {
        let p3 = Graph::path(3);
        let k2 = Graph::from_labeled_edges(vec!["a".into(), "b".into()], &[(0, 1)]).unwrap();
        let g = p3.substitute(1, &k2).unwrap();
        assert_eq!(g.labels(), ["1", "3", "a", "b"]);
        assert_eq!(g.m(), 5);
        assert!(!g.has_edge(0, 1));
    }

    #[test]
    fn wide_graph_rows() {
        let g = Graph::path(130);
        assert!(g.has_edge(63, 64) && g.has_edge(128, 129) && !g.has_edge(0, 129));
        assert_eq!(g.m(), 129);
    }
}
