use std::fmt::Write as _;

use p5mwc::bench::BenchRow;
use p5mwc::tree::NodeKind;
use p5mwc::{DecompTree, Graph, Pattern, WeightedColoring};
use serde::Serialize;

pub fn to_one_based(vs: &[usize]) -> Vec<usize> {
    vs.iter().map(|&v| v + 1).collect()
}

pub fn one_based(vs: &[usize]) -> String {
    to_one_based(vs)
        .iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

pub fn pattern_name(p: Pattern) -> &'static str {
    match p {
        Pattern::P5 => "P5",
        Pattern::CoP5 => "co-P5",
        Pattern::C5 => "C5",
    }
}

#[derive(Serialize)]
pub struct ClassOut {
    pub vertices: Vec<usize>,
    pub weight: u64,
}

/// Field order is the output key order.
#[derive(Serialize)]
pub struct ColorReport {
    pub chi_w: u64,
    pub classes: Vec<ClassOut>,
    pub class_count: usize,
    pub valid: Option<bool>,
    pub lower_bound: Option<u64>,
}

impl ColorReport {
    pub fn new(c: &WeightedColoring) -> Self {
        let classes: Vec<ClassOut> = c
            .classes()
            .iter()
            .map(|cl| ClassOut {
                vertices: to_one_based(&cl.vertices),
                weight: cl.weight,
            })
            .collect();
        ColorReport {
            chi_w: c.total(),
            class_count: classes.len(),
            classes,
            valid: None,
            lower_bound: None,
        }
    }

    pub fn text(&self) -> String {
        let mut out = format!("chi_w: {}\nclasses: {}\n", self.chi_w, self.class_count);
        for c in &self.classes {
            let vs: Vec<String> = c.vertices.iter().map(|v| v.to_string()).collect();
            let _ = writeln!(out, "  {} x {{{}}}", c.weight, vs.join(", "));
        }
        if let Some(valid) = self.valid {
            let _ = writeln!(out, "valid: {valid}");
        }
        if let Some(bound) = self.lower_bound {
            let _ = writeln!(out, "lower bound: {bound}");
        }
        out
    }
}

#[derive(Serialize)]
pub struct NodeOut {
    pub id: usize,
    pub kind: &'static str,
    pub vertices: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub marker: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub left: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub right: Option<usize>,
}

#[derive(Serialize)]
pub struct DecomposeReport {
    pub internal_nodes: usize,
    pub internal_bound: usize,
    pub leaf_edges: usize,
    pub leaf_edge_bound: usize,
    pub nodes: Vec<NodeOut>,
}

impl DecomposeReport {
    pub fn new(tree: &DecompTree, g: &Graph) -> Self {
        let nodes = (0..tree.len())
            .map(|id| {
                let node = tree.node(id);
                let vertices = node.graph.labels().to_vec();
                match &node.kind {
                    NodeKind::Leaf => NodeOut {
                        id,
                        kind: "leaf",
                        vertices,
                        marker: None,
                        left: None,
                        right: None,
                    },
                    NodeKind::Internal {
                        left,
                        right,
                        marker,
                        ..
                    } => NodeOut {
                        id,
                        kind: "internal",
                        vertices,
                        marker: Some(tree.representative(*right).label(*marker).to_string()),
                        left: Some(*left),
                        right: Some(*right),
                    },
                }
            })
            .collect();
        DecomposeReport {
            internal_nodes: tree.internal_count(),
            internal_bound: 2 * g.n(),
            leaf_edges: tree.leaf_edge_sum(),
            leaf_edge_bound: g.m(),
            nodes,
        }
    }

    pub fn text(&self, tree: &DecompTree) -> String {
        format!(
            "{}internal nodes: {} (bound {})\nleaf edges: {} (bound {})\n",
            tree.render_text(),
            self.internal_nodes,
            self.internal_bound,
            self.leaf_edges,
            self.leaf_edge_bound
        )
    }
}

#[derive(Serialize)]
pub struct RecognizeReport {
    pub in_class: bool,
    pub p5: Option<Vec<usize>>,
    pub co_p5: Option<Vec<usize>>,
    pub c5: Option<Vec<usize>>,
    pub prime: bool,
}

impl RecognizeReport {
    pub fn text(&self) -> String {
        let show = |e: &Option<Vec<usize>>| match e {
            Some(vs) => vs
                .iter()
                .map(|v| v.to_string())
                .collect::<Vec<_>>()
                .join(" "),
            None => "none".into(),
        };
        format!(
            "in class: {}\nP5: {}\nco-P5: {}\nC5: {}\nprime: {}\n",
            self.in_class,
            show(&self.p5),
            show(&self.co_p5),
            show(&self.c5),
            self.prime
        )
    }
}

#[derive(Serialize)]
pub struct BenchRowOut {
    pub n: usize,
    pub timings_ms: Vec<f64>,
    pub median_ms: f64,
    pub ratio: Option<f64>,
}

#[derive(Serialize)]
pub struct BenchReport {
    pub rows: Vec<BenchRowOut>,
}

impl BenchReport {
    pub fn new(rows: &[BenchRow]) -> Self {
        let ms = |d: std::time::Duration| d.as_secs_f64() * 1e3;
        BenchReport {
            rows: rows
                .iter()
                .map(|r| BenchRowOut {
                    n: r.n,
                    timings_ms: r.timings.iter().map(|&d| ms(d)).collect(),
                    median_ms: ms(r.median),
                    ratio: r.ratio,
                })
                .collect(),
        }
    }

    pub fn text(&self) -> String {
        let mut out = format!(
            "{:>6} {:>7} {:>12} {:>8}\n",
            "n", "trials", "median_ms", "ratio"
        );
        for r in &self.rows {
            let ratio = r.ratio.map_or("-".to_string(), |x| format!("{x:.2}"));
            let _ = writeln!(
                out,
                "{:>6} {:>7} {:>12.3} {:>8}",
                r.n,
                r.timings_ms.len(),
                r.median_ms,
                ratio
            );
        }
        out
    }
}
