//! Exact weighted chromatic number by clique expansion.
//!
//! Each vertex `v` becomes `w(v)` mutually adjacent twins; the chromatic
//! number of that expansion is `chi_w`. The expansion is colored exactly by
//! DSATUR branch and bound, and the color classes are folded back into
//! stable sets with multiplicities. Apart from the clique lower bound it
//! shares no code with the decomposition pipeline it is used to certify.

use std::collections::BTreeMap;

use thiserror::Error;

use crate::coloring::{ColorClass, WeightedColoring};
use crate::graph::{Graph, WeightedGraph};
use crate::prime::max_weighted_clique;

/// Default cap on the total weight (the size of the expansion).
pub const DEFAULT_BUDGET: u64 = 60;
/// Colors are tracked in a 128-bit mask.
pub const MAX_BUDGET: u64 = 128;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OracleError {
    #[error("total weight {total} exceeds the oracle budget of {budget}")]
    TooLarge { total: u64, budget: u64 },
}

/// `chi_w` and a witness, for total weight at most `DEFAULT_BUDGET`.
pub fn brute_force_chi_w(wg: &WeightedGraph) -> Result<(u64, WeightedColoring), OracleError> {
    brute_force_chi_w_budget(wg, DEFAULT_BUDGET)
}

pub fn brute_force_chi_w_budget(
    wg: &WeightedGraph,
    budget: u64,
) -> Result<(u64, WeightedColoring), OracleError> {
    let total = wg.total_weight();
    let budget = budget.min(MAX_BUDGET);
    if total > budget {
        return Err(OracleError::TooLarge { total, budget });
    }
    let (_, lower) = max_weighted_clique(wg);
    let mut search = Search::new(wg.graph(), wg.weights(), lower);
    search.run();
    let colors = search.best_colors;
    let value = search.best;
    let mut grouped: BTreeMap<Vec<usize>, u64> = BTreeMap::new();
    for c in 0..value as usize {
        let class: Vec<usize> = (0..wg.graph().n())
            .filter(|&v| colors[v] >> c & 1 == 1)
            .collect();
        *grouped.entry(class).or_default() += 1;
    }
    let coloring = WeightedColoring::new(
        grouped
            .into_iter()
            .map(|(vertices, weight)| ColorClass { vertices, weight }),
    );
    Ok((value, coloring))
}

struct Search<'a> {
    g: &'a Graph,
    lower: u64,
    /// colors held by each vertex's twins
    colors: Vec<u128>,
    /// highest color given to a twin of each vertex so far
    last: Vec<Option<u32>>,
    remaining: Vec<u64>,
    used: u32,
    best: u64,
    best_colors: Vec<u128>,
}

impl<'a> Search<'a> {
    fn new(g: &'a Graph, weights: &'a [u64], lower: u64) -> Self {
        let n = g.n();
        let total: u64 = weights.iter().sum();
        // trivial coloring: every twin gets its own color
        let mut best_colors = vec![0u128; n];
        let mut next = 0;
        for v in 0..n {
            for _ in 0..weights[v] {
                best_colors[v] |= 1 << next;
                next += 1;
            }
        }
        Self {
            g,
            lower,
            colors: vec![0; n],
            last: vec![None; n],
            remaining: weights.to_vec(),
            used: 0,
            best: total,
            best_colors,
        }
    }

    fn run(&mut self) {
        if self.best > self.lower {
            self.descend();
        }
    }

    fn forbidden(&self, v: usize) -> u128 {
        self.g
            .neighbors(v)
            .iter()
            .fold(self.colors[v], |acc, &u| acc | self.colors[u])
    }

    /// Returns true once the lower bound has been reached.
    fn descend(&mut self) -> bool {
        let pick = (0..self.g.n())
            .filter(|&v| self.remaining[v] > 0)
            .max_by_key(|&v| {
                let sat = self.forbidden(v).count_ones();
                (
                    sat,
                    self.remaining[v],
                    self.g.degree(v),
                    std::cmp::Reverse(v),
                )
            });
        let Some(v) = pick else {
            self.best = u64::from(self.used);
            self.best_colors = self.colors.clone();
            return self.best <= self.lower;
        };
        let blocked = self.forbidden(v);
        let floor = self.last[v].map_or(0, |c| c + 1);
        let prev_last = self.last[v];
        for c in floor..=self.used {
            let fresh = c == self.used;
            if fresh && u64::from(self.used) + 1 >= self.best {
                break;
            }
            if !fresh && blocked >> c & 1 == 1 {
                continue;
            }
            self.colors[v] |= 1 << c;
            self.last[v] = Some(c);
            self.remaining[v] -= 1;
            if fresh {
                self.used += 1;
            }
            let done = self.descend();
            if fresh {
                self.used -= 1;
            }
            self.remaining[v] += 1;
            self.last[v] = prev_last;
            self.colors[v] &= !(1 << c);
            if done {
                return true;
            }
            if u64::from(self.used) >= self.best {
                break;
            }
        }
        false
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coloring::validate_coloring;

    fn wg(g: Graph, w: &[u64]) -> WeightedGraph {
        WeightedGraph::new(g, w.to_vec()).unwrap()
    }

    #[test]
    fn oracle_examples() {
        let k3 = wg(Graph::complete(3), &[1, 2, 3]);
        assert_eq!(brute_force_chi_w(&k3).unwrap().0, 6);
        let e3 = wg(Graph::empty(3), &[4, 1, 2]);
        let (value, c) = brute_force_chi_w(&e3).unwrap();
        assert_eq!(value, 4);
        assert!(validate_coloring(&e3, &c).unwrap());
        let c5 = WeightedGraph::unit(Graph::cycle(5));
        let (value, c) = brute_force_chi_w(&c5).unwrap();
        assert_eq!(value, 3);
        assert!(validate_coloring(&c5, &c).unwrap());
    }

    #[test]
    fn budget_is_enforced() {
        let big = WeightedGraph::unit(Graph::empty(30));
        assert_eq!(
            brute_force_chi_w_budget(&big, 20),
            Err(OracleError::TooLarge {
                total: 30,
                budget: 20
            })
        );
    }

    #[test]
    fn zero_weights() {
        let z = wg(Graph::cycle(5), &[0; 5]);
        let (value, c) = brute_force_chi_w(&z).unwrap();
        assert_eq!(value, 0);
        assert!(c.is_empty());
    }

    #[test]
    fn odd_cycle_with_weights() {
        // chi_w of C5 by hand: max(adjacent pair, ceil(total / 2))
        let c5 = wg(Graph::cycle(5), &[3, 1, 2, 1, 1]);
        assert_eq!(brute_force_chi_w(&c5).unwrap().0, 4);
        let c5 = wg(Graph::cycle(5), &[3, 3, 3, 3, 3]);
        assert_eq!(brute_force_chi_w(&c5).unwrap().0, 8);
    }
}
