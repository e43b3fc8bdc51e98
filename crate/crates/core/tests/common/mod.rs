#![allow(dead_code)]

use p5mwc::{parse_instance, ColorClass, Graph, WeightedColoring, WeightedGraph};
use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

/// The 11-vertex example graph, as an instance file with unit weights.
pub const EXAMPLE_GRAPH: &str = "\
c example graph on 11 vertices
p edge 11 29
e 1 2
e 1 3
e 1 4
e 2 4
e 2 5
e 2 6
e 2 7
e 3 4
e 3 5
e 3 6
e 3 7
e 4 5
e 4 6
e 4 7
e 5 6
e 5 7
e 6 8
e 6 9
e 6 10
e 6 11
e 7 8
e 7 9
e 7 10
e 7 11
e 8 9
e 8 10
e 8 11
e 9 10
e 9 11
";

pub fn example_graph() -> WeightedGraph {
    parse_instance(EXAMPLE_GRAPH).expect("example_graph parses")
}

/// 1-based labels of a vertex set, sorted numerically.
pub fn one_based(set: &[usize]) -> Vec<usize> {
    let mut out: Vec<usize> = set.iter().map(|&v| v + 1).collect();
    out.sort_unstable();
    out
}

/// A random valid (not necessarily optimal) weighted coloring of the
/// vertices `verts` of `g`, covering each `v` at least `weights[v]` times.
pub fn random_cover(
    g: &Graph,
    verts: &[usize],
    weights: &[u64],
    rng: &mut ChaCha8Rng,
) -> WeightedColoring {
    let mut residual = weights.to_vec();
    let mut classes = Vec::new();
    loop {
        let live: Vec<usize> = verts.iter().copied().filter(|&v| residual[v] > 0).collect();
        let Some(&start) = live.choose(rng) else {
            break;
        };
        let mut set = vec![start];
        let mut pool: Vec<usize> = verts.to_vec();
        pool.shuffle(rng);
        for v in pool {
            if !set.contains(&v) && set.iter().all(|&u| !g.has_edge(u, v)) && rng.gen_bool(0.7) {
                set.push(v);
            }
        }
        let weight = rng.gen_range(1..=residual[start]);
        for &v in &set {
            residual[v] = residual[v].saturating_sub(weight);
        }
        classes.push(ColorClass {
            vertices: set,
            weight,
        });
    }
    WeightedColoring::new(classes)
}
