//! Line-oriented instance files: DIMACS edge format plus weight records.
//!
//! ```text
//! c any comment
//! p edge <n> <m>
//! e <u> <v>
//! n <v> <weight>
//! ```
//!
//! Vertices are 1-based in files. Vertices without an `n` record weigh 1.

use std::fmt::Write as _;

use thiserror::Error;

use crate::graph::{Graph, GraphError, WeightedGraph};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("line {line}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub message: String,
}

fn err(line: usize, message: impl Into<String>) -> ParseError {
    ParseError {
        line,
        message: message.into(),
    }
}

pub fn parse_instance(text: &str) -> Result<WeightedGraph, ParseError> {
    let mut header: Option<usize> = None;
    let mut edges = Vec::new();
    let mut weights: Vec<Option<u64>> = Vec::new();
    let mut last_line = 0;
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        last_line = line;
        let raw = raw.strip_suffix('\r').unwrap_or(raw);
        let mut fields = raw.split_whitespace();
        let Some(tag) = fields.next() else { continue };
        if tag == "c" {
            continue;
        }
        let args: Vec<&str> = fields.collect();
        let number = |s: &str| -> Result<u64, ParseError> {
            s.parse::<u64>()
                .map_err(|_| err(line, format!("expected a nonnegative integer, got {s:?}")))
        };
        let vertex = |s: &str, n: usize| -> Result<usize, ParseError> {
            let v = number(s)?;
            if v == 0 || v > n as u64 {
                return Err(err(line, format!("vertex {v} out of range 1..={n}")));
            }
            Ok(v as usize - 1)
        };
        match (tag, header) {
            ("p", None) => {
                if args.len() != 3 || args[0] != "edge" {
                    return Err(err(line, "expected `p edge <n> <m>`"));
                }
                let n = usize::try_from(number(args[1])?)
                    .map_err(|_| err(line, "vertex count too large"))?;
                number(args[2])?;
                header = Some(n);
                weights = vec![None; n];
            }
            ("p", Some(_)) => return Err(err(line, "duplicate `p` line")),
            (_, None) => return Err(err(line, "`p edge <n> <m>` must come first")),
            ("e", Some(n)) => {
                if args.len() != 2 {
                    return Err(err(line, "expected `e <u> <v>`"));
                }
                let (u, v) = (vertex(args[0], n)?, vertex(args[1], n)?);
                if u == v {
                    return Err(err(line, format!("self-loop on vertex {}", u + 1)));
                }
                edges.push((u, v));
            }
            ("n", Some(n)) => {
                if args.len() != 2 {
                    return Err(err(line, "expected `n <v> <weight>`"));
                }
                let v = vertex(args[0], n)?;
                let w = number(args[1])?;
                if weights[v].replace(w).is_some() {
                    return Err(err(line, format!("duplicate weight for vertex {}", v + 1)));
                }
            }
            (other, Some(_)) => return Err(err(line, format!("unknown record tag {other:?}"))),
        }
    }
    let n = header.ok_or_else(|| err(last_line.max(1), "missing `p edge <n> <m>` line"))?;
    let graph = Graph::from_edges(n, &edges).map_err(|e: GraphError| err(0, e.to_string()))?;
    let weights = weights.into_iter().map(|w| w.unwrap_or(1)).collect();
    Ok(WeightedGraph::new(graph, weights).expect("one weight per vertex"))
}

/// Writes `wg` so that [`parse_instance`] reads it back unchanged. Only
/// weights other than 1 get an `n` record.
pub fn write_instance(wg: &WeightedGraph) -> String {
    let g = wg.graph();
    let mut out = String::new();
    let _ = writeln!(out, "p edge {} {}", g.n(), g.m());
    for (u, v) in g.edges() {
        let _ = writeln!(out, "e {} {}", u + 1, v + 1);
    }
    for (v, &w) in wg.weights().iter().enumerate() {
        if w != 1 {
            let _ = writeln!(out, "n {} {}", v + 1, w);
        }
    }
    out
}
