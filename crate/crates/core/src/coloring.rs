//! Weighted colorings, the substitution reduction and the recursive solver.

use thiserror::Error;

use crate::graph::{Graph, GraphError, WeightedGraph};
use crate::modules::{is_module, quotient_substitute, ModuleError};
use crate::prime::color_prime_seeded;
use crate::tree::{build_tree, DecompTree, NodeId, NodeKind};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ColorError {
    #[error("coloring mentions vertex {vertex}, graph has {n} vertices")]
    ForeignVertex { vertex: usize, n: usize },
    #[error("expected {expected} weights, got {got}")]
    WeightCount { expected: usize, got: usize },
    #[error("vertex set is not a module")]
    NotAModule,
    #[error("marker covered {covered} times, module coloring needs {needed}")]
    MarkerUnderCovered { covered: u64, needed: u64 },
    #[error("merged class is not stable; the substituted set was not a module")]
    UnstableMerge,
    #[error("no strong stable set exists; the graph is outside the class")]
    NoStrongStableSet,
    #[error("prime graph on {0} vertices contains an induced C5; the graph is outside the class")]
    OutsideClass(usize),
    #[error(transparent)]
    Module(#[from] ModuleError),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// One stable set together with its multiplicity.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ColorClass {
    pub vertices: Vec<usize>,
    pub weight: u64,
}

/// Stable sets `S_i` with positive multiplicities `I(S_i)`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct WeightedColoring {
    classes: Vec<ColorClass>,
}

impl WeightedColoring {
    /// Sorts each class's vertex list and drops classes of multiplicity zero.
    pub fn new(classes: impl IntoIterator<Item = ColorClass>) -> Self {
        let classes = classes
            .into_iter()
            .filter(|c| c.weight > 0)
            .map(|mut c| {
                c.vertices.sort_unstable();
                c
            })
            .collect();
        Self { classes }
    }

    pub fn from_pairs<I, S>(pairs: I) -> Self
    where
        I: IntoIterator<Item = (S, u64)>,
        S: AsRef<[usize]>,
    {
        Self::new(pairs.into_iter().map(|(s, weight)| ColorClass {
            vertices: s.as_ref().to_vec(),
            weight,
        }))
    }

    pub fn classes(&self) -> &[ColorClass] {
        &self.classes
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    /// `sum I(S_i)`; equals the weighted chromatic number when minimum.
    pub fn total(&self) -> u64 {
        self.classes.iter().map(|c| c.weight).sum()
    }

    /// How many times each vertex in `0..n` is covered.
    pub fn coverage(&self, n: usize) -> Vec<u64> {
        let mut cov = vec![0; n];
        for class in &self.classes {
            for &v in &class.vertices {
                if v < n {
                    cov[v] += class.weight;
                }
            }
        }
        cov
    }

    /// Renames vertices through `map`.
    pub fn map_vertices(&self, map: impl Fn(usize) -> usize) -> Self {
        Self::new(self.classes.iter().map(|c| ColorClass {
            vertices: c.vertices.iter().map(|&v| map(v)).collect(),
            weight: c.weight,
        }))
    }
}

/// True iff every class is stable and every vertex `v` is covered at least
/// `w(v)` times.
pub fn validate_coloring(
    wg: &WeightedGraph,
    coloring: &WeightedColoring,
) -> Result<bool, ColorError> {
    validate_parts(wg.graph(), wg.weights(), coloring)
}

pub(crate) fn validate_parts(
    g: &Graph,
    weights: &[u64],
    coloring: &WeightedColoring,
) -> Result<bool, ColorError> {
    let n = g.n();
    for class in coloring.classes() {
        if let Some(&v) = class.vertices.iter().find(|&&v| v >= n) {
            return Err(ColorError::ForeignVertex { vertex: v, n });
        }
    }
    if coloring
        .classes()
        .iter()
        .any(|c| !g.is_stable_unchecked(&c.vertices))
    {
        return Ok(false);
    }
    let cov = coloring.coverage(n);
    Ok(cov.iter().zip(weights).all(|(c, w)| c >= w))
}

/// `f(G, H, h)`: the quotient with the marker weighted by `chi_h`.
#[derive(Clone, Debug)]
pub struct Substitution {
    pub weighted: WeightedGraph,
    /// `outside[i]` is the original vertex that became vertex `i`.
    pub outside: Vec<usize>,
    pub marker: usize,
}

pub fn substitute_f(
    wg: &WeightedGraph,
    module: &[usize],
    marker_label: &str,
    chi_h: u64,
) -> Result<Substitution, ColorError> {
    let q = quotient_substitute(wg.graph(), module, marker_label)?;
    let mut weights: Vec<u64> = q.outside.iter().map(|&v| wg.weight(v)).collect();
    weights.push(chi_h);
    let weighted = WeightedGraph::new(q.graph, weights)?;
    Ok(Substitution {
        weighted,
        outside: q.outside,
        marker: q.marker,
    })
}

/// Combines a coloring `x` of the module `H` with a coloring `y` of
/// `f(G, H, h)` into a coloring of `G`.
///
/// `x` uses vertex ids of `g`. `y` uses ids of `g` for vertices outside the
/// module and `marker` (an id `>= g.n()`) for `h`. The result has total
/// `y.total()` and at most `x.len() + y.len()` classes.
pub fn merge_color(
    g: &Graph,
    module: &[usize],
    x: &WeightedColoring,
    y: &WeightedColoring,
    marker: usize,
) -> Result<WeightedColoring, ColorError> {
    let n = g.n();
    if let Some(&v) = module.iter().find(|&&v| v >= n) {
        return Err(ColorError::ForeignVertex { vertex: v, n });
    }
    if !is_module(g, module) {
        return Err(ColorError::NotAModule);
    }
    for class in x.classes().iter().chain(y.classes()) {
        if let Some(&v) = class.vertices.iter().find(|&&v| v >= n && v != marker) {
            return Err(ColorError::ForeignVertex { vertex: v, n });
        }
    }
    let (with_h, without_h): (Vec<&ColorClass>, Vec<&ColorClass>) = y
        .classes()
        .iter()
        .partition(|c| c.vertices.contains(&marker));
    let covered: u64 = with_h.iter().map(|c| c.weight).sum();
    let needed = x.total();
    if covered < needed {
        return Err(ColorError::MarkerUnderCovered { covered, needed });
    }

    let strip = |c: &ColorClass| -> Vec<usize> {
        c.vertices
            .iter()
            .copied()
            .filter(|&v| v != marker)
            .collect()
    };
    let xs = x.classes();
    let ys: Vec<&ColorClass> = with_h.into_iter().chain(without_h).collect();
    let mut out = Vec::with_capacity(xs.len() + ys.len());
    let (mut i, mut j) = (0, 0);
    let mut x_left = xs.first().map_or(0, |c| c.weight);
    let mut y_left = ys.first().map_or(0, |c| c.weight);
    while i < xs.len() {
        let rest = strip(ys[j]);
        // H is a module, so one representative decides stability of the union
        if let Some(&rep) = xs[i].vertices.first() {
            if rest.iter().any(|&v| g.has_edge(v, rep)) {
                return Err(ColorError::UnstableMerge);
            }
        }
        let take = x_left.min(y_left);
        let mut vertices = xs[i].vertices.clone();
        vertices.extend(rest);
        out.push(ColorClass {
            vertices,
            weight: take,
        });
        x_left -= take;
        y_left -= take;
        if x_left == 0 {
            i += 1;
            x_left = xs.get(i).map_or(0, |c| c.weight);
        }
        if y_left == 0 {
            j += 1;
            y_left = ys.get(j).map_or(0, |c| c.weight);
        }
    }
    if j < ys.len() {
        out.push(ColorClass {
            vertices: strip(ys[j]),
            weight: y_left,
        });
        out.extend(ys[j + 1..].iter().map(|c| ColorClass {
            vertices: strip(c),
            weight: c.weight,
        }));
    }
    Ok(WeightedColoring::new(out))
}

/// Minimum weighted coloring of the representative of `node`, with `weights`
/// indexed by that representative's vertices.
pub fn color(tree: &DecompTree, weights: &[u64]) -> Result<WeightedColoring, ColorError> {
    color_seeded(tree, weights, 0)
}

pub fn color_seeded(
    tree: &DecompTree,
    weights: &[u64],
    seed: u64,
) -> Result<WeightedColoring, ColorError> {
    color_node(tree, tree.root(), weights, seed)
}

pub fn color_node(
    tree: &DecompTree,
    id: NodeId,
    weights: &[u64],
    seed: u64,
) -> Result<WeightedColoring, ColorError> {
    let node = tree.node(id);
    let n = node.graph.n();
    if weights.len() != n {
        return Err(ColorError::WeightCount {
            expected: n,
            got: weights.len(),
        });
    }
    match &node.kind {
        NodeKind::Leaf => color_prime_seeded(&node.graph, weights, seed),
        NodeKind::Internal {
            left,
            right,
            module,
            outside,
            marker,
        } => {
            let inner_weights: Vec<u64> = module.iter().map(|&v| weights[v]).collect();
            let inner = color_node(tree, *left, &inner_weights, seed)?;
            let mut outer_weights: Vec<u64> = outside.iter().map(|&v| weights[v]).collect();
            outer_weights.push(inner.total());
            let outer = color_node(tree, *right, &outer_weights, seed)?;
            let x = inner.map_vertices(|v| module[v]);
            let h = n;
            let y = outer.map_vertices(|v| if v == *marker { h } else { outside[v] });
            merge_color(&node.graph, module, &x, &y, h)
        }
    }
}

/// Decomposes and colors `wg` in one call.
pub fn solve(wg: &WeightedGraph) -> Result<WeightedColoring, ColorError> {
    solve_seeded(wg, 0)
}

pub fn solve_seeded(wg: &WeightedGraph, seed: u64) -> Result<WeightedColoring, ColorError> {
    let tree = build_tree(wg.graph());
    color_seeded(&tree, wg.weights(), seed)
}
