//! Timing harness for the solve path, and batch entry points shared with
//! the criterion benches.

use std::time::{Duration, Instant};

use crate::coloring::{solve_seeded, ColorError, WeightedColoring};
use crate::generate::{generate, GenerateError};
use crate::graph::WeightedGraph;
use crate::oracle::{brute_force_chi_w, OracleError};
use crate::par::Parallelism;

/// Weights used for benchmark instances.
pub const BENCH_MAX_WEIGHT: u64 = 10;

#[derive(Clone, Debug)]
pub struct BenchRow {
    pub n: usize,
    pub timings: Vec<Duration>,
    pub median: Duration,
    /// `median(n) / median(n / 2)` when `n / 2` was also measured.
    pub ratio: Option<f64>,
}

/// Times [`solve_seeded`] (generation excluded) on `trials` fresh instances
/// per size.
pub fn run_bench(sizes: &[usize], trials: usize, seed: u64) -> Result<Vec<BenchRow>, BenchError> {
    let mut rows: Vec<BenchRow> = Vec::with_capacity(sizes.len());
    for (i, &n) in sizes.iter().enumerate() {
        let mut timings = Vec::with_capacity(trials);
        for t in 0..trials {
            let instance_seed = seed ^ ((i as u64) << 32) ^ t as u64;
            let wg = generate(n, BENCH_MAX_WEIGHT, instance_seed)?;
            let start = Instant::now();
            solve_seeded(&wg, seed)?;
            timings.push(start.elapsed());
        }
        let median = median(&timings);
        rows.push(BenchRow {
            n,
            timings,
            median,
            ratio: None,
        });
    }
    for i in 0..rows.len() {
        let n = rows[i].n;
        if n.is_multiple_of(2) {
            if let Some(half) = rows.iter().find(|r| r.n == n / 2 && !r.timings.is_empty()) {
                let base = half.median.as_secs_f64().max(1e-9);
                rows[i].ratio = Some(rows[i].median.as_secs_f64() / base);
            }
        }
    }
    Ok(rows)
}

/// Middle element, or the mean of the middle two; zero for no samples.
pub fn median(samples: &[Duration]) -> Duration {
    let mut s = samples.to_vec();
    s.sort_unstable();
    match s.len() {
        0 => Duration::ZERO,
        len if len % 2 == 1 => s[len / 2],
        len => (s[len / 2 - 1] + s[len / 2]) / 2,
    }
}

#[derive(Debug, thiserror::Error)]
pub enum BenchError {
    #[error(transparent)]
    Generate(#[from] GenerateError),
    #[error(transparent)]
    Color(#[from] ColorError),
}

pub fn solve_batch(
    instances: &[WeightedGraph],
    seed: u64,
    mode: Parallelism,
) -> Vec<Result<WeightedColoring, ColorError>> {
    mode.map(instances, |wg| solve_seeded(wg, seed))
}

pub fn oracle_batch(
    instances: &[WeightedGraph],
    mode: Parallelism,
) -> Vec<Result<u64, OracleError>> {
    mode.map(instances, |wg| {
        brute_force_chi_w(wg).map(|(value, _)| value)
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn median_of_samples() {
        let ms = Duration::from_millis;
        assert_eq!(median(&[]), Duration::ZERO);
        assert_eq!(median(&[ms(5), ms(1), ms(3)]), ms(3));
        assert_eq!(median(&[ms(4), ms(2)]), ms(3));
    }

    #[test]
    fn rows_and_ratios() {
        assert!(run_bench(&[], 3, 0).unwrap().is_empty());
        let rows = run_bench(&[10, 20, 7], 3, 1).unwrap();
        assert_eq!(rows.len(), 3);
        assert!(rows.iter().all(|r| r.timings.len() == 3));
        assert!(rows[0].ratio.is_none());
        assert!(rows[1].ratio.is_some());
        assert!(rows[2].ratio.is_none());
    }

    #[test]
    fn batch_modes_agree() {
        let instances: Vec<_> = (0..8).map(|s| generate(9, 3, s).unwrap()).collect();
        let seq = solve_batch(&instances, 0, Parallelism::Sequential);
        let par = solve_batch(&instances, 0, Parallelism::default());
        let totals = |v: Vec<Result<WeightedColoring, ColorError>>| -> Vec<u64> {
            v.into_iter().map(|c| c.unwrap().total()).collect()
        };
        let seq = totals(seq);
        assert_eq!(seq, totals(par));
        let oracle: Vec<u64> = oracle_batch(&instances, Parallelism::Sequential)
            .into_iter()
            .map(|r| r.unwrap())
            .collect();
        assert_eq!(seq, oracle);
    }
}
