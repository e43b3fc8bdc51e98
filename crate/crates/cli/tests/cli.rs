use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;
use tempfile::TempDir;

const EXAMPLE_EDGES: &[(usize, usize)] = &[
    (1, 2),
    (1, 3),
    (1, 4),
    (2, 4),
    (2, 5),
    (2, 6),
    (2, 7),
    (3, 4),
    (3, 5),
    (3, 6),
    (3, 7),
    (4, 5),
    (4, 6),
    (4, 7),
    (5, 6),
    (5, 7),
    (6, 8),
    (6, 9),
    (6, 10),
    (6, 11),
    (7, 8),
    (7, 9),
    (7, 10),
    (7, 11),
    (8, 9),
    (8, 10),
    (8, 11),
    (9, 10),
    (9, 11),
];

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_p5mwc"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn instance(n: usize, edges: &[(usize, usize)], weights: &[(usize, u64)]) -> String {
    let mut s = format!("p edge {n} {}\n", edges.len());
    for (u, v) in edges {
        s += &format!("e {u} {v}\n");
    }
    for (v, w) in weights {
        s += &format!("n {v} {w}\n");
    }
    s
}

fn write(dir: &TempDir, name: &str, text: &str) -> PathBuf {
    let path = dir.path().join(name);
    std::fs::write(&path, text).unwrap();
    path
}

fn p(path: &Path) -> &str {
    path.to_str().unwrap()
}

const C5: &[(usize, usize)] = &[(1, 2), (2, 3), (3, 4), (4, 5), (5, 1)];

#[test]
fn color_example_graph_structured() {
    let dir = TempDir::new().unwrap();
    let f = write(&dir, "example.txt", &instance(11, EXAMPLE_EDGES, &[]));
    let o = run(&[
        "color",
        "--input",
        p(&f),
        "--verify",
        "--format",
        "structured",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let keys = [
        "\"chi_w\"",
        "\"classes\"",
        "\"class_count\"",
        "\"valid\"",
        "\"lower_bound\"",
    ];
    let at: Vec<usize> = keys.iter().map(|k| text.find(k).unwrap()).collect();
    assert!(at.windows(2).all(|w| w[0] < w[1]), "{text}");
    let v: Value = serde_json::from_str(&text).unwrap();
    assert_eq!(v["chi_w"], 4);
    assert_eq!(v["valid"], true);
    assert_eq!(v["lower_bound"], 4);
    assert!(v["class_count"].as_u64().unwrap() <= 21);
    assert_eq!(
        v["classes"].as_array().unwrap().len() as u64,
        v["class_count"].as_u64().unwrap()
    );
}

#[test]
fn color_weighted_c5_text() {
    let dir = TempDir::new().unwrap();
    let f = write(&dir, "c5.txt", &instance(5, C5, &[(1, 3), (3, 2)]));
    let o = run(&["color", "--input", p(&f), "--verify"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("chi_w: 4\n"));
    assert!(stdout(&o).contains("valid: true"));
    let o = run(&["color", "--input", p(&f), "--prime-only"]);
    assert!(stdout(&o).starts_with("chi_w: 4\n"));
}

#[test]
fn class_violation_exits_2() {
    let dir = TempDir::new().unwrap();
    let f = write(
        &dir,
        "p5.txt",
        &instance(5, &[(1, 2), (2, 3), (3, 4), (4, 5)], &[]),
    );
    let o = run(&["color", "--input", p(&f), "--check-class"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("P5"));
    let o = run(&["recognize", "--input", p(&f), "--format", "structured"]);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["in_class"], false);
    assert_eq!(v["p5"].as_array().unwrap().len(), 5);
}

#[test]
fn usage_and_parse_errors_exit_1() {
    let dir = TempDir::new().unwrap();
    let bad = write(&dir, "bad.txt", "p edge 3 1\ne 1 9\n");
    let o = run(&["color", "--input", p(&bad)]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 2"));
    let dup = write(&dir, "dup.txt", "p edge 2 0\nn 1 1\nn 1 2\n");
    assert_eq!(run(&["oracle", "--input", p(&dup)]).status.code(), Some(1));
    assert_eq!(run(&["color"]).status.code(), Some(1));
    assert_eq!(
        run(&["color", "--input", "/nonexistent/file"])
            .status
            .code(),
        Some(1)
    );
    assert_eq!(run(&["frobnicate"]).status.code(), Some(1));
    assert_eq!(run(&["color", "--format", "xml"]).status.code(), Some(1));
    let twin = write(&dir, "twin.txt", &instance(3, &[(1, 2)], &[]));
    assert_eq!(
        run(&["color", "--input", p(&twin), "--prime-only"])
            .status
            .code(),
        Some(1)
    );
    assert_eq!(run(&["--help"]).status.code(), Some(0));
}

#[test]
fn oracle_values_and_budget() {
    let dir = TempDir::new().unwrap();
    let c5 = write(&dir, "c5.txt", &instance(5, C5, &[]));
    let o = run(&["oracle", "--input", p(&c5)]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("chi_w: 3\n"));
    let k3 = write(
        &dir,
        "k3.txt",
        &instance(3, &[(1, 2), (2, 3), (1, 3)], &[(2, 2), (3, 3)]),
    );
    assert!(stdout(&run(&["oracle", "--input", p(&k3)])).starts_with("chi_w: 6\n"));
    let big = write(&dir, "big.txt", &instance(30, &[], &[]));
    assert_eq!(
        run(&["oracle", "--input", p(&big), "--budget", "20"])
            .status
            .code(),
        Some(4)
    );
}

#[test]
fn decompose_listings() {
    let dir = TempDir::new().unwrap();
    let f = write(&dir, "example.txt", &instance(11, EXAMPLE_EDGES, &[]));
    let o = run(&["decompose", "--input", p(&f)]);
    let text = stdout(&o);
    assert!(text.contains("internal nodes: 5 (bound 22)"), "{text}");
    for module in ["[2 3 4]", "[2 3]", "[6 7]", "[8 9 10 11]", "[10 11]"] {
        assert!(text.contains(&format!("module {module} ->")), "{module}");
    }
    let p4 = write(&dir, "p4.txt", &instance(4, &[(1, 2), (2, 3), (3, 4)], &[]));
    assert!(stdout(&run(&["decompose", "--input", p(&p4)])).starts_with("leaf: prime, 4 vertices"));
    let two = write(&dir, "2k2.txt", &instance(4, &[(1, 2), (3, 4)], &[]));
    assert!(stdout(&run(&["decompose", "--input", p(&two)])).contains("module [1 2] -> #1"));
    assert!(stdout(&run(&["decompose", "--input", p(&f), "--dot"])).starts_with("digraph"));
    let o = run(&["decompose", "--input", p(&f), "--format", "structured"]);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["internal_nodes"], 5);
}

#[test]
fn generate_then_color_matches_oracle() {
    let dir = TempDir::new().unwrap();
    let out = dir.path().join("g40.txt");
    let o = run(&[
        "generate",
        "--n",
        "40",
        "--max-weight",
        "3",
        "--seed",
        "11",
        "--out",
        p(&out),
    ]);
    assert_eq!(o.status.code(), Some(0));
    let o = run(&["recognize", "--input", p(&out), "--format", "structured"]);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["in_class"], true);
    assert!(v["p5"].is_null() && v["co_p5"].is_null());

    for seed in 0..6 {
        let out = dir.path().join(format!("s{seed}.txt"));
        let seed = seed.to_string();
        run(&[
            "generate",
            "--n",
            "9",
            "--max-weight",
            "4",
            "--seed",
            &seed,
            "--out",
            p(&out),
        ]);
        let c: Value = serde_json::from_str(&stdout(&run(&[
            "color",
            "--input",
            p(&out),
            "--verify",
            "--check-class",
            "--format",
            "structured",
        ])))
        .unwrap();
        let o: Value = serde_json::from_str(&stdout(&run(&[
            "oracle",
            "--input",
            p(&out),
            "--format",
            "structured",
        ])))
        .unwrap();
        assert_eq!(c["chi_w"], o["chi_w"]);
        assert_eq!(c["valid"], true);
    }

    let one = stdout(&run(&["generate", "--n", "1"]));
    assert!(one.contains("p edge 1 0"));
    assert_eq!(run(&["generate", "--n", "0"]).status.code(), Some(1));
    let a = stdout(&run(&["generate", "--n", "25", "--seed", "4"]));
    assert_eq!(a, stdout(&run(&["generate", "--n", "25", "--seed", "4"])));
}

#[test]
fn crlf_input() {
    let dir = TempDir::new().unwrap();
    let f = write(
        &dir,
        "crlf.txt",
        &instance(5, C5, &[]).replace('\n', "\r\n"),
    );
    assert!(stdout(&run(&["color", "--input", p(&f)])).starts_with("chi_w: 3\n"));
}

#[test]
fn bench_tables() {
    let o = run(&["bench", "--sizes", ""]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).lines().count(), 1);
    let o = run(&[
        "bench",
        "--sizes",
        "20,40",
        "--trials",
        "3",
        "--format",
        "structured",
    ]);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    let rows = v["rows"].as_array().unwrap();
    assert_eq!(rows[0]["timings_ms"].as_array().unwrap().len(), 3);
    assert!(rows[0]["ratio"].is_null());
    assert!(rows[1]["ratio"].as_f64().is_some());
    assert_eq!(run(&["bench", "--sizes", "x"]).status.code(), Some(1));
}
