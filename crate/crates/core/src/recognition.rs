//! Forbidden-pattern search, class membership, primality and buoys.

use thiserror::Error;

use crate::graph::Graph;
use crate::modules::{is_module, module_closure};
use crate::par::Parallelism;
use crate::tree::build_tree;

/// The three five-vertex patterns the solver cares about.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Pattern {
    /// Chordless path `t0 - t1 - t2 - t3 - t4`.
    P5,
    /// Complement of a P5: the returned tuple is a path in the complement.
    CoP5,
    /// Chordless cycle in cyclic order.
    C5,
}

impl Pattern {
    /// Whether pattern vertices `i` and `j` are adjacent.
    pub fn adjacent(self, i: usize, j: usize) -> bool {
        let d = i.abs_diff(j);
        match self {
            Pattern::P5 => d == 1,
            Pattern::CoP5 => d > 1,
            Pattern::C5 => d == 1 || d == 4,
        }
    }

    /// Order in which tuple positions are filled; every position after the
    /// first is adjacent to an earlier one so candidates come from a
    /// neighbor list.
    fn search_order(self) -> [usize; 5] {
        match self {
            Pattern::P5 | Pattern::C5 => [0, 1, 2, 3, 4],
            Pattern::CoP5 => [0, 2, 4, 1, 3],
        }
    }
}

/// An ordered 5-tuple of vertices inducing a [`Pattern`].
pub type Embedding = [usize; 5];

/// Exhaustive search for an induced copy of `pattern`.
///
/// Tuples are explored in lexicographic order of the search positions, so
/// the answer is deterministic and identical in both parallelism modes.
pub fn find_induced(g: &Graph, pattern: Pattern) -> Option<Embedding> {
    find_induced_with(g, pattern, Parallelism::default())
}

pub fn find_induced_with(g: &Graph, pattern: Pattern, mode: Parallelism) -> Option<Embedding> {
    if g.n() < 5 {
        return None;
    }
    let order = pattern.search_order();
    mode.find_map_first(g.n(), |first| {
        let mut tuple = [usize::MAX; 5];
        tuple[order[0]] = first;
        extend(g, pattern, &order, 1, &mut tuple).then_some(tuple)
    })
}

fn extend(
    g: &Graph,
    pattern: Pattern,
    order: &[usize; 5],
    depth: usize,
    tuple: &mut Embedding,
) -> bool {
    if depth == 5 {
        return true;
    }
    let pos = order[depth];
    let placed = &order[..depth];
    let anchor = placed
        .iter()
        .copied()
        .find(|&q| pattern.adjacent(pos, q))
        .expect("search order keeps positions connected");
    let candidates = g.neighbors(tuple[anchor]);
    for &c in candidates {
        let fits = placed.iter().all(|&q| {
            let other = tuple[q];
            c != other && g.has_edge(c, other) == pattern.adjacent(pos, q)
        });
        if fits {
            tuple[pos] = c;
            if extend(g, pattern, order, depth + 1, tuple) {
                return true;
            }
        }
    }
    tuple[pos] = usize::MAX;
    false
}

/// Whether `g` is (P5, co-P5)-free.
///
/// Both patterns are prime graphs, so an induced copy lies inside the
/// representative of a single decomposition leaf; only the leaves are
/// searched. [`is_in_class_exhaustive`] searches the whole graph.
pub fn is_in_class(g: &Graph) -> bool {
    let tree = build_tree(g);
    let free = tree
        .leaves()
        .all(|leaf| is_in_class_exhaustive(tree.representative(leaf)));
    free
}

pub fn is_in_class_exhaustive(g: &Graph) -> bool {
    find_induced(g, Pattern::P5).is_none() && find_induced(g, Pattern::CoP5).is_none()
}

/// True iff `g` has no module `H` with `1 < |H| < n`, decided by checking
/// the module closure of every vertex pair.
pub fn is_prime(g: &Graph) -> bool {
    is_prime_with(g, Parallelism::default())
}

pub fn is_prime_with(g: &Graph, mode: Parallelism) -> bool {
    let n = g.n();
    mode.find_map_first(n, |a| {
        (a + 1..n).find(|&b| {
            let closure = module_closure(g, &[a, b], |_| false).expect("no early exit");
            closure.len() < n
        })
    })
    .is_none()
}

/// Five disjoint nonempty classes with all edges between cyclically
/// consecutive classes and none between classes at distance two.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BuoyPartition {
    pub classes: [Vec<usize>; 5],
}

impl BuoyPartition {
    pub fn vertices(&self) -> Vec<usize> {
        let mut all: Vec<usize> = self.classes.iter().flatten().copied().collect();
        all.sort_unstable();
        all
    }

    /// Checks both adjacency rules and that the classes are disjoint and
    /// nonempty.
    pub fn is_valid(&self, g: &Graph) -> bool {
        let all = self.vertices();
        if all.windows(2).any(|w| w[0] == w[1]) || self.classes.iter().any(Vec::is_empty) {
            return false;
        }
        (0..5).all(|i| {
            let next = &self.classes[(i + 1) % 5];
            let skip = &self.classes[(i + 2) % 5];
            self.classes[i].iter().all(|&u| {
                next.iter().all(|&v| g.has_edge(u, v)) && skip.iter().all(|&v| !g.has_edge(u, v))
            })
        })
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum BuoyError {
    #[error("graph has {0} vertices; a buoy needs at least 5")]
    TooSmall(usize),
    #[error("graph is not connected")]
    NotConnected,
    #[error("the given tuple does not induce a C5 in cyclic order")]
    NotACycle,
    #[error("grown buoy is neither the whole graph nor a module; the graph is outside the class")]
    OutsideClass,
}

/// Grows the buoy around the induced C5 `cycle` by absorbing, in index order
/// and until a fixed point, every vertex that is complete to two cyclically
/// consecutive-neighbor classes and anticomplete to the two opposite ones.
pub fn buoy_of_c5(g: &Graph, cycle: Embedding) -> Result<BuoyPartition, BuoyError> {
    let n = g.n();
    if n < 5 {
        return Err(BuoyError::TooSmall(n));
    }
    if !g.is_connected() {
        return Err(BuoyError::NotConnected);
    }
    let cycle_ok = cycle.iter().all(|&v| v < n)
        && (0..5).all(|i| {
            (i + 1..5).all(|j| {
                cycle[i] != cycle[j] && g.has_edge(cycle[i], cycle[j]) == Pattern::C5.adjacent(i, j)
            })
        });
    if !cycle_ok {
        return Err(BuoyError::NotACycle);
    }
    let mut slot = vec![None; n];
    let mut classes: [Vec<usize>; 5] = Default::default();
    for (i, &v) in cycle.iter().enumerate() {
        slot[v] = Some(i);
        classes[i].push(v);
    }
    loop {
        let mut grew = false;
        #[allow(clippy::needless_range_loop)]
        for x in 0..n {
            if slot[x].is_some() {
                continue;
            }
            let fits = |i: usize| {
                let complete = |c: &Vec<usize>| c.iter().all(|&v| g.has_edge(x, v));
                let anti = |c: &Vec<usize>| c.iter().all(|&v| !g.has_edge(x, v));
                complete(&classes[(i + 1) % 5])
                    && complete(&classes[(i + 4) % 5])
                    && anti(&classes[(i + 2) % 5])
                    && anti(&classes[(i + 3) % 5])
            };
            if let Some(i) = (0..5).find(|&i| fits(i)) {
                slot[x] = Some(i);
                classes[i].push(x);
                grew = true;
            }
        }
        if !grew {
            break;
        }
    }
    for class in &mut classes {
        class.sort_unstable();
    }
    let buoy = BuoyPartition { classes };
    let members = buoy.vertices();
    if members.len() < n && !is_module(g, &members) {
        return Err(BuoyError::OutsideClass);
    }
    Ok(buoy)
}
