//! Modules, maximal strong modules and the quotient `g(G, H, h)`.

use thiserror::Error;

use crate::graph::{Builder, Graph, GraphError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ModuleError {
    #[error("vertex set is not a module of the graph")]
    NotAModule,
    #[error("module of size {size} is trivial in a graph with {n} vertices")]
    Trivial { size: usize, n: usize },
    #[error("graph needs at least two vertices, has {0}")]
    TooSmall(usize),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// True iff every vertex outside `set` sees all of it or none of it.
pub fn is_module(g: &Graph, set: &[usize]) -> bool {
    let mut inside = vec![false; g.n()];
    for &v in set {
        inside[v] = true;
    }
    let size = set.iter().filter(|&&v| v < g.n()).count();
    (0..g.n()).filter(|&x| !inside[x]).all(|x| {
        let seen = set.iter().filter(|&&v| g.has_edge(x, v)).count();
        seen == 0 || seen == size
    })
}

/// Inclusion-minimal module containing both `a` and `b`.
pub fn smallest_module_containing(g: &Graph, a: usize, b: usize) -> Vec<usize> {
    module_closure(g, &[a, b], |_| false).expect("no early exit requested")
}

/// Grows `seed` by repeatedly absorbing splitters (outside vertices adjacent to
/// some but not all members) until none remain. Returns `None` as soon as a
/// vertex for which `stop` holds is absorbed.
pub(crate) fn module_closure(
    g: &Graph,
    seed: &[usize],
    stop: impl Fn(usize) -> bool,
) -> Option<Vec<usize>> {
    let n = g.n();
    let mut inside = vec![false; n];
    // number of members adjacent to each vertex
    let mut seen = vec![0usize; n];
    let mut members = Vec::with_capacity(n);
    let mut pending: Vec<usize> = Vec::new();
    for &v in seed {
        if !inside[v] {
            inside[v] = true;
            pending.push(v);
        }
    }
    loop {
        for v in pending.drain(..) {
            if stop(v) {
                return None;
            }
            members.push(v);
            for &x in g.neighbors(v) {
                seen[x] += 1;
            }
        }
        let size = members.len();
        if size == n {
            break;
        }
        for x in 0..n {
            if !inside[x] && seen[x] > 0 && seen[x] < size {
                inside[x] = true;
                pending.push(x);
            }
        }
        if pending.is_empty() {
            break;
        }
    }
    members.sort_unstable();
    Some(members)
}

/// Partition of `V(G) - {v}` into the maximal modules of `G` not containing
/// `v`, by refining `{N(v), non-neighbors of v}` until no outside vertex
/// splits a part.
pub(crate) fn maximal_modules_avoiding(g: &Graph, v: usize) -> Vec<Vec<usize>> {
    let n = g.n();
    let mut part_of = vec![usize::MAX; n];
    let mut parts: Vec<Vec<usize>> = Vec::new();
    let (adj, non): (Vec<usize>, Vec<usize>) =
        (0..n).filter(|&x| x != v).partition(|&x| g.has_edge(v, x));
    for p in [adj, non] {
        if !p.is_empty() {
            for &x in &p {
                part_of[x] = parts.len();
            }
            parts.push(p);
        }
    }
    let mut queued = vec![false; n];
    let mut queue: Vec<usize> = (0..n).rev().filter(|&x| x != v).collect();
    for &x in &queue {
        queued[x] = true;
    }
    while let Some(u) = queue.pop() {
        queued[u] = false;
        let own = part_of[u];
        for p in 0..parts.len() {
            if p == own || parts[p].len() < 2 {
                continue;
            }
            let hits = parts[p].iter().filter(|&&x| g.has_edge(u, x)).count();
            if hits == 0 || hits == parts[p].len() {
                continue;
            }
            let (near, far): (Vec<usize>, Vec<usize>) =
                parts[p].iter().partition(|&&x| g.has_edge(u, x));
            let new_id = parts.len();
            for &x in &far {
                part_of[x] = new_id;
            }
            for &x in near.iter().chain(far.iter()) {
                if !queued[x] {
                    queued[x] = true;
                    queue.push(x);
                }
            }
            parts[p] = near;
            parts.push(far);
        }
    }
    for p in &mut parts {
        p.sort_unstable();
    }
    parts.sort_unstable_by_key(|p| p[0]);
    parts
}

/// The unique partition of `V(G)` into maximal strong modules, each part
/// sorted and parts ordered by their smallest vertex.
///
/// Disconnected graphs yield their components and graphs with a disconnected
/// complement their co-components. Otherwise the parts are the maximal proper
/// modules.
pub fn maximal_strong_modules(g: &Graph) -> Result<Vec<Vec<usize>>, ModuleError> {
    let n = g.n();
    if n < 2 {
        return Err(ModuleError::TooSmall(n));
    }
    let comps = g.components();
    if comps.len() > 1 {
        return Ok(comps);
    }
    let cocomps = g.co_components();
    if cocomps.len() > 1 {
        return Ok(cocomps);
    }

    // G and its complement are connected: maximal proper modules partition V.
    // Every part avoiding vertex 0 that is not inside the part of 0 is itself
    // maximal; a part X is inside it iff the closure of {0} + X is proper.
    let v = 0;
    let avoiding = maximal_modules_avoiding(g, v);
    let mut part_of = vec![usize::MAX; n];
    for (i, part) in avoiding.iter().enumerate() {
        for &x in part {
            part_of[x] = i;
        }
    }
    let mut home = vec![false; n];
    let mut outside = vec![false; n];
    home[v] = true;
    let mut result = Vec::new();
    for part in &avoiding {
        if home[part[0]] {
            continue;
        }
        let mut seed = part.clone();
        seed.push(v);
        match module_closure(g, &seed, |x| outside[x]) {
            Some(closure) if closure.len() < n => {
                // a part meeting the part of v lies inside it
                for x in closure {
                    if x != v && !home[x] {
                        for &y in &avoiding[part_of[x]] {
                            home[y] = true;
                        }
                    }
                }
            }
            _ => {
                for &x in part {
                    outside[x] = true;
                }
                result.push(part.clone());
            }
        }
    }
    result.push((0..n).filter(|&x| home[x]).collect());
    result.sort_unstable_by_key(|p| p[0]);
    Ok(result)
}

/// `g(G, H, h)` together with the vertex correspondence.
#[derive(Clone, Debug)]
pub struct Quotient {
    pub graph: Graph,
    /// `outside[i]` is the vertex of the original graph that became vertex `i`.
    pub outside: Vec<usize>,
    /// Index of the marker vertex `h` (always the last vertex).
    pub marker: usize,
}

/// Replaces the nontrivial module `module` by a single vertex labelled
/// `marker_label`, adjacent to exactly the outside vertices that have a
/// neighbor in the module.
pub fn quotient_substitute(
    g: &Graph,
    module: &[usize],
    marker_label: &str,
) -> Result<Quotient, ModuleError> {
    let n = g.n();
    if let Some(&v) = module.iter().find(|&&v| v >= n) {
        return Err(GraphError::OutOfRange { vertex: v, n }.into());
    }
    let mut inside = vec![false; n];
    for &v in module {
        inside[v] = true;
    }
    let size = inside.iter().filter(|&&b| b).count();
    if size < 2 || size >= n {
        return Err(ModuleError::Trivial { size, n });
    }
    if !is_module(g, module) {
        return Err(ModuleError::NotAModule);
    }
    let outside: Vec<usize> = (0..n).filter(|&v| !inside[v]).collect();
    if outside.iter().any(|&v| g.label(v) == marker_label) {
        return Err(GraphError::DuplicateLabel(marker_label.to_string()).into());
    }
    let rep = (0..n).find(|&v| inside[v]).expect("module is nonempty");
    let k = outside.len();
    let mut builder = Builder::new(k + 1);
    for (i, &a) in outside.iter().enumerate() {
        for (j, &b) in outside.iter().enumerate().skip(i + 1) {
            if g.has_edge(a, b) {
                builder.add(i, j);
            }
        }
        if g.has_edge(a, rep) {
            builder.add(i, k);
        }
    }
    let mut labels: Vec<String> = outside.iter().map(|&v| g.label(v).to_string()).collect();
    labels.push(marker_label.to_string());
    Ok(Quotient {
        graph: builder.finish(labels),
        outside,
        marker: k,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c5_with_twin(adjacent: bool) -> Graph {
        // vertex 5 is a twin of vertex 1
        let mut edges = vec![(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 5), (5, 2)];
        if adjacent {
            edges.push((1, 5));
        }
        Graph::from_edges(6, &edges).unwrap()
    }

    #[test]
    fn clique_pairs_are_modules() {
        assert_eq!(
            smallest_module_containing(&Graph::complete(3), 0, 1),
            vec![0, 1]
        );
    }

    #[test]
    fn closure_of_path_escalates() {
        let p4 = Graph::path(4);
        assert_eq!(smallest_module_containing(&p4, 0, 1), vec![0, 1, 2, 3]);
    }

    #[test]
    fn strong_modules_of_small_graphs() {
        let p4 = Graph::path(4);
        assert_eq!(
            maximal_strong_modules(&p4).unwrap(),
            vec![vec![0], vec![1], vec![2], vec![3]]
        );
        let two_k2 = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(
            maximal_strong_modules(&two_k2).unwrap(),
            vec![vec![0, 1], vec![2, 3]]
        );
        assert_eq!(
            maximal_strong_modules(&c5_with_twin(false)).unwrap(),
            vec![vec![0], vec![1, 5], vec![2], vec![3], vec![4]]
        );
        assert_eq!(
            maximal_strong_modules(&Graph::empty(1)),
            Err(ModuleError::TooSmall(1))
        );
    }

    #[test]
    fn part_of_vertex_zero_can_be_large() {
        // C5 with vertex 0 blown up into a P3
        let c5 = Graph::cycle(5);
        let g = c5.substitute(0, &Graph::path(3).prefixed("a")).unwrap();
        let parts = maximal_strong_modules(&g).unwrap();
        assert_eq!(
            parts,
            vec![vec![0], vec![1], vec![2], vec![3], vec![4, 5, 6]]
        );
    }

    #[test]
    fn quotient_restores_c5() {
        for adjacent in [false, true] {
            let g = c5_with_twin(adjacent);
            let q = quotient_substitute(&g, &[1, 5], "#1").unwrap();
            assert_eq!(q.outside, vec![0, 2, 3, 4]);
            assert_eq!(q.marker, 4);
            assert_eq!(q.graph.m(), 5);
            let mut degrees: Vec<_> = (0..5).map(|v| q.graph.degree(v)).collect();
            degrees.dedup();
            assert_eq!(degrees, vec![2]);
        }
    }

    #[test]
    fn quotient_of_clique() {
        let q = quotient_substitute(&Graph::complete(4), &[1, 3], "#h").unwrap();
        assert_eq!(
            q.graph,
            Graph::complete(3)
                .with_labels(vec!["1".into(), "3".into(), "#h".into()])
                .unwrap()
        );
    }

    #[test]
    fn quotient_rejects_non_modules() {
        let p4 = Graph::path(4);
        assert_eq!(
            quotient_substitute(&p4, &[0, 1], "#").unwrap_err(),
            ModuleError::NotAModule
        );
        assert!(matches!(
            quotient_substitute(&p4, &[0], "#"),
            Err(ModuleError::Trivial { size: 1, n: 4 })
        ));
        let k3 = Graph::complete(3);
        assert!(matches!(
            quotient_substitute(&k3, &[0, 1], "3"),
            Err(ModuleError::Graph(GraphError::DuplicateLabel(_)))
        ));
    }
}
