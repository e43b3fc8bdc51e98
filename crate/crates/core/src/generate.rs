//! Random members of the class, built by recursive substitution into small
//! verified prime graphs. The class is closed under substitution because P5
//! and its complement are prime, so every output is in the class by
//! construction; it is still re-checked before being returned.

use std::collections::HashSet;
use std::sync::OnceLock;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::graph::{Graph, WeightedGraph};
use crate::recognition::{is_in_class, is_in_class_exhaustive, is_prime};

const BANK_SEED: u64 = 0x005e_ed0f_ba4c;
const BANK_SAMPLES: usize = 3000;
const BANK_PER_SIZE: usize = 12;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GenerateError {
    #[error("cannot generate a graph on zero vertices")]
    Empty,
    #[error("generated graph on {0} vertices failed class verification")]
    Verification(usize),
}

/// Prime seeds for substitution: K2, its complement, P4, C5, the bull and
/// sampled members of the class on six and seven vertices. Every entry is
/// prime (or has two vertices) and passes the exhaustive pattern search.
pub fn prime_bank() -> &'static [Graph] {
    static BANK: OnceLock<Vec<Graph>> = OnceLock::new();
    BANK.get_or_init(build_bank)
}

fn build_bank() -> Vec<Graph> {
    let bull = Graph::from_edges(5, &[(0, 1), (1, 2), (0, 2), (0, 3), (1, 4)]).expect("bull");
    let mut bank = vec![
        Graph::complete(2),
        Graph::empty(2),
        Graph::path(4),
        Graph::cycle(5),
        bull,
    ];
    let mut seen: HashSet<Vec<(usize, Vec<usize>)>> = bank.iter().map(invariant).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(BANK_SEED);
    for n in 5..=7 {
        let mut kept = 0;
        for _ in 0..BANK_SAMPLES {
            if kept == BANK_PER_SIZE {
                break;
            }
            let g = random_graph(n, &mut rng);
            if g.is_connected()
                && is_prime(&g)
                && is_in_class_exhaustive(&g)
                && seen.insert(invariant(&g))
            {
                bank.push(g);
                kept += 1;
            }
        }
    }
    bank
}

fn random_graph(n: usize, rng: &mut ChaCha8Rng) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(0.5) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, &edges).expect("in range")
}

/// Degree of each vertex with the sorted degrees of its neighbours. Equal
/// for isomorphic graphs; used only to avoid filling the bank with copies.
fn invariant(g: &Graph) -> Vec<(usize, Vec<usize>)> {
    let mut inv: Vec<_> = (0..g.n())
        .map(|v| {
            let mut around: Vec<usize> = g.neighbors(v).iter().map(|&u| g.degree(u)).collect();
            around.sort_unstable();
            (g.degree(v), around)
        })
        .collect();
    inv.sort();
    inv
}

/// A random class member on exactly `n` vertices with weights drawn
/// uniformly from `0..=max_weight`.
pub fn generate(n: usize, max_weight: u64, seed: u64) -> Result<WeightedGraph, GenerateError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let g = generate_graph(n, &mut rng)?;
    let weights = (0..n).map(|_| rng.gen_range(0..=max_weight)).collect();
    Ok(WeightedGraph::new(g, weights).expect("one weight per vertex"))
}

pub fn generate_graph(n: usize, rng: &mut ChaCha8Rng) -> Result<Graph, GenerateError> {
    if n == 0 {
        return Err(GenerateError::Empty);
    }
    let mut edges = Vec::new();
    grow(n, 0, rng, &mut edges);
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    let edges: Vec<_> = edges
        .into_iter()
        .map(|(u, v)| (order[u], order[v]))
        .collect();
    let g = Graph::from_edges(n, &edges).expect("generated edges are in range");
    if !is_in_class(&g) {
        return Err(GenerateError::Verification(n));
    }
    Ok(g)
}

/// Emits the edges of a class member on vertices `offset..offset + n`.
fn grow(n: usize, offset: usize, rng: &mut ChaCha8Rng, edges: &mut Vec<(usize, usize)>) {
    if n == 1 {
        return;
    }
    let fits: Vec<&Graph> = prime_bank().iter().filter(|p| p.n() <= n).collect();
    let prime = *fits.choose(rng).expect("K2 always fits");
    let k = prime.n();
    let sizes = composition(n, k, rng);
    let mut starts = Vec::with_capacity(k);
    let mut at = offset;
    for &size in &sizes {
        starts.push(at);
        grow(size, at, rng, edges);
        at += size;
    }
    for (a, b) in prime.edges() {
        for u in starts[a]..starts[a] + sizes[a] {
            for v in starts[b]..starts[b] + sizes[b] {
                edges.push((u, v));
            }
        }
    }
}

/// `n` split into `k` positive parts. Half of the time one part takes
/// nearly everything, which gives deep trees.
fn composition(n: usize, k: usize, rng: &mut ChaCha8Rng) -> Vec<usize> {
    if rng.gen_bool(0.5) {
        let mut sizes = vec![1; k];
        let big = rng.gen_range(0..k);
        sizes[big] += n - k;
        return sizes;
    }
    let mut cuts: Vec<usize> = (1..n).collect();
    cuts.shuffle(rng);
    let mut cuts = cuts[..k - 1].to_vec();
    cuts.sort_unstable();
    let mut sizes = Vec::with_capacity(k);
    let mut prev = 0;
    for c in cuts.into_iter().chain([n]) {
        sizes.push(c - prev);
        prev = c;
    }
    sizes
}
