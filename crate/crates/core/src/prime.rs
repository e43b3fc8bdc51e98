//! Solvers for the leaves of the decomposition tree.
//!
//! A prime (P5, co-P5)-free graph is either the C5 or C5-free. The C5 is
//! solved directly; C5-free members of the class are strongly perfect and are
//! colored by repeatedly peeling strong stable sets.

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::coloring::{ColorClass, ColorError, WeightedColoring};
use crate::graph::{Graph, WeightedGraph};
use crate::recognition::{find_induced, Pattern};

/// Random greedy restarts tried before the exhaustive fallback.
const RANDOM_RESTARTS: usize = 16;

/// Minimum weighted coloring of a leaf graph.
pub fn color_prime(wg: &WeightedGraph) -> Result<WeightedColoring, ColorError> {
    color_prime_seeded(wg.graph(), wg.weights(), 0)
}

pub(crate) fn color_prime_seeded(
    g: &Graph,
    weights: &[u64],
    seed: u64,
) -> Result<WeightedColoring, ColorError> {
    if weights.len() != g.n() {
        return Err(ColorError::WeightCount {
            expected: g.n(),
            got: weights.len(),
        });
    }
    if let Some(order) = c5_order(g) {
        let w = order.map(|v| weights[v]);
        return Ok(color_c5(w).map_vertices(|i| order[i]));
    }
    if let Some(_cycle) = find_induced(g, Pattern::C5) {
        return Err(ColorError::OutsideClass(g.n()));
    }
    color_via_strong_stable_sets_seeded(g, weights, seed)
}

/// Cyclic vertex order if `g` is a chordless 5-cycle.
pub fn c5_order(g: &Graph) -> Option<[usize; 5]> {
    if g.n() != 5 || g.m() != 5 || (0..5).any(|v| g.degree(v) != 2) {
        return None;
    }
    let mut order = [0; 5];
    let (mut prev, mut cur) = (0, g.neighbors(0)[0]);
    for slot in order.iter_mut().skip(1) {
        *slot = cur;
        let next = g.neighbors(cur).iter().copied().find(|&x| x != prev)?;
        prev = cur;
        cur = next;
    }
    (cur == 0).then_some(order)
}

/// `max(heaviest adjacent pair, ceil(total / 2))` for a weighted C5 given in
/// cyclic order.
pub fn c5_closed_form(w: [u64; 5]) -> u64 {
    let pair = (0..5).map(|i| w[i] + w[(i + 1) % 5]).max().unwrap_or(0);
    let total: u64 = w.iter().sum();
    pair.max(total.div_ceil(2))
}

/// Minimum weighted coloring of a C5 with weights in cyclic order, built
/// constructively to match [`c5_closed_form`]. Uses at most six classes.
pub fn color_c5(w: [u64; 5]) -> WeightedColoring {
    let at = |i: usize| w[i % 5];
    // heaviest edge {a, a+1}
    let a = (0..5)
        .max_by_key(|&i| (at(i) + at(i + 1), std::cmp::Reverse(i)))
        .expect("five edges");
    let total: u64 = w.iter().sum();
    let heavy = at(a) + at(a + 1);
    let mut w = w;
    let mut classes = Vec::new();
    // Peel the stable pair opposite the heaviest edge until half the total
    // weight no longer exceeds it.
    let peel = total.div_ceil(2).saturating_sub(heavy);
    if peel > 0 {
        let (p, q) = ((a + 2) % 5, (a + 4) % 5);
        classes.push(ColorClass {
            vertices: vec![p, q],
            weight: peel,
        });
        w[p] -= peel;
        w[q] -= peel;
    }
    // Now the edge {a, a+1} is tight: every class contains a or a+1.
    let idx = |k: usize| (a + k) % 5;
    let (wa, wb) = (w[idx(0)], w[idx(1)]);
    let (w2, w3, w4) = (w[idx(2)], w[idx(3)], w[idx(4)]);
    let spare_a = wa - w2;
    let spare_b = wb - w4;
    let alpha = w3.min(spare_a);
    classes.extend([
        ColorClass {
            vertices: vec![idx(0), idx(2)],
            weight: w2,
        },
        ColorClass {
            vertices: vec![idx(1), idx(4)],
            weight: w4,
        },
        ColorClass {
            vertices: vec![idx(0), idx(3)],
            weight: alpha,
        },
        ColorClass {
            vertices: vec![idx(0)],
            weight: spare_a - alpha,
        },
        ColorClass {
            vertices: vec![idx(1), idx(3)],
            weight: w3 - alpha,
        },
        ColorClass {
            vertices: vec![idx(1)],
            weight: spare_b - (w3 - alpha),
        },
    ]);
    WeightedColoring::new(classes)
}

/// Exact C5 solver by enumerating the multiplicity of each of the five
/// stable pairs in `0..=max(w)`; leftover demand goes to singletons.
/// Cost is `(max(w) + 1)^5`, so this is for small weights only.
pub fn color_c5_bounded_search(w: [u64; 5]) -> WeightedColoring {
    let cap = w.iter().copied().max().unwrap_or(0);
    let pairs: [[usize; 2]; 5] = std::array::from_fn(|i| [i, (i + 2) % 5]);
    let mut best: Option<(u64, [u64; 5])> = None;
    let mut x = [0u64; 5];
    loop {
        let mut cov = [0u64; 5];
        for (k, p) in pairs.iter().enumerate() {
            cov[p[0]] += x[k];
            cov[p[1]] += x[k];
        }
        let singles: u64 = (0..5).map(|v| w[v].saturating_sub(cov[v])).sum();
        let total = x.iter().sum::<u64>() + singles;
        if best.is_none_or(|(b, _)| total < b) {
            best = Some((total, x));
        }
        // odometer increment
        let mut k = 0;
        while k < 5 && x[k] == cap {
            x[k] = 0;
            k += 1;
        }
        if k == 5 {
            break;
        }
        x[k] += 1;
    }
    let (_, x) = best.expect("at least one assignment");
    let mut cov = [0u64; 5];
    let mut classes = Vec::new();
    for (k, p) in pairs.iter().enumerate() {
        cov[p[0]] += x[k];
        cov[p[1]] += x[k];
        classes.push(ColorClass {
            vertices: p.to_vec(),
            weight: x[k],
        });
    }
    for v in 0..5 {
        classes.push(ColorClass {
            vertices: vec![v],
            weight: w[v].saturating_sub(cov[v]),
        });
    }
    WeightedColoring::new(classes)
}

/// Whether the stable set `set` meets every clique in `cliques`.
fn meets_all(n: usize, set: &[usize], cliques: &[Vec<usize>]) -> bool {
    let mut member = vec![false; n];
    for &v in set {
        member[v] = true;
    }
    cliques.iter().all(|k| k.iter().any(|&v| member[v]))
}

fn greedy_stable(g: &Graph, order: &[usize]) -> Vec<usize> {
    let mut chosen: Vec<usize> = Vec::new();
    for &v in order {
        if chosen.iter().all(|&u| !g.has_edge(u, v)) {
            chosen.push(v);
        }
    }
    chosen.sort_unstable();
    chosen
}

/// A stable set meeting every maximal clique of `g`.
///
/// Tries the first greedy color class under several vertex orders (degree
/// descending, index, reverse index, degree ascending, then seeded random
/// shuffles), then every maximal stable set. Whatever is returned has been
/// checked against the full list of maximal cliques.
pub fn strong_stable_set(g: &Graph) -> Result<Vec<usize>, ColorError> {
    strong_stable_set_seeded(g, 0)
}

pub fn strong_stable_set_seeded(g: &Graph, seed: u64) -> Result<Vec<usize>, ColorError> {
    let n = g.n();
    if n == 0 {
        return Ok(Vec::new());
    }
    let cliques = g.maximal_cliques();
    let strong = |s: &[usize]| g.is_stable_unchecked(s) && meets_all(n, s, &cliques);

    let mut by_degree: Vec<usize> = (0..n).collect();
    by_degree.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    let index: Vec<usize> = (0..n).collect();
    let reverse: Vec<usize> = (0..n).rev().collect();
    let ascending: Vec<usize> = by_degree.iter().rev().copied().collect();
    for order in [&by_degree, &index, &reverse, &ascending] {
        let s = greedy_stable(g, order);
        if strong(&s) {
            return Ok(s);
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut order = index.clone();
    for _ in 0..RANDOM_RESTARTS {
        order.shuffle(&mut rng);
        let s = greedy_stable(g, &order);
        if strong(&s) {
            return Ok(s);
        }
    }
    // A strong stable set can be enlarged to a maximal one and stays strong.
    g.complement()
        .maximal_cliques()
        .into_iter()
        .find(|s| strong(s))
        .ok_or(ColorError::NoStrongStableSet)
}

/// Minimum weighted coloring of a (P5, co-P5, C5)-free graph: while some
/// vertex has positive residual weight, take a strong stable set `S` of the
/// positive-weight part, emit it with multiplicity `min` residual over `S`
/// and subtract. Each round zeroes a vertex.
pub fn color_via_strong_stable_sets(wg: &WeightedGraph) -> Result<WeightedColoring, ColorError> {
    color_via_strong_stable_sets_seeded(wg.graph(), wg.weights(), 0)
}

pub(crate) fn color_via_strong_stable_sets_seeded(
    g: &Graph,
    weights: &[u64],
    seed: u64,
) -> Result<WeightedColoring, ColorError> {
    let mut residual = weights.to_vec();
    let mut classes = Vec::new();
    loop {
        let live: Vec<usize> = (0..g.n()).filter(|&v| residual[v] > 0).collect();
        if live.is_empty() {
            break;
        }
        let sub = g.induced_sorted(&live);
        let local = strong_stable_set_seeded(&sub, seed)?;
        let set: Vec<usize> = local.iter().map(|&i| live[i]).collect();
        let take = set
            .iter()
            .map(|&v| residual[v])
            .min()
            .expect("strong stable set is nonempty");
        for &v in &set {
            residual[v] -= take;
        }
        classes.push(ColorClass {
            vertices: set,
            weight: take,
        });
    }
    Ok(WeightedColoring::new(classes))
}

/// Heaviest clique, by branch and bound with a greedy-coloring bound.
pub fn max_weighted_clique(wg: &WeightedGraph) -> (Vec<usize>, u64) {
    let g = wg.graph();
    let w = wg.weights();
    let mut best = (Vec::new(), 0);
    let mut current = Vec::new();
    let mut cand: Vec<usize> = (0..g.n()).filter(|&v| w[v] > 0).collect();
    cand.sort_by_key(|&v| (std::cmp::Reverse(w[v]), v));
    clique_search(g, w, &mut current, 0, cand, &mut best);
    best.0.sort_unstable();
    best
}

fn clique_search(
    g: &Graph,
    w: &[u64],
    current: &mut Vec<usize>,
    weight: u64,
    mut cand: Vec<usize>,
    best: &mut (Vec<usize>, u64),
) {
    if weight > best.1 || (best.0.is_empty() && current.len() > best.0.len()) {
        *best = (current.clone(), weight);
    }
    while !cand.is_empty() {
        if weight + coloring_bound(g, w, &cand) <= best.1 {
            return;
        }
        let v = cand.remove(0);
        let next: Vec<usize> = cand.iter().copied().filter(|&u| g.has_edge(u, v)).collect();
        current.push(v);
        clique_search(g, w, current, weight + w[v], next, best);
        current.pop();
    }
}

/// Sum over greedy color classes of their heaviest member; bounds the weight
/// of any clique inside `cand`.
fn coloring_bound(g: &Graph, w: &[u64], cand: &[usize]) -> u64 {
    let mut classes: Vec<(Vec<usize>, u64)> = Vec::new();
    for &v in cand {
        match classes
            .iter_mut()
            .find(|(c, _)| c.iter().all(|&u| !g.has_edge(u, v)))
        {
            Some((c, heaviest)) => {
                c.push(v);
                *heaviest = (*heaviest).max(w[v]);
            }
            None => classes.push((vec![v], w[v])),
        }
    }
    classes.iter().map(|(_, h)| h).sum()
}
