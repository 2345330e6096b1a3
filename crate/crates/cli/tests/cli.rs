use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use regfactor_cli::parse_edge_list;
use tempfile::TempDir;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_regfactor")).args(args).output().unwrap()
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

fn write(dir: &TempDir, name: &str, text: &str) -> PathBuf {
    let path = dir.path().join(name);
    std::fs::write(&path, text).unwrap();
    path
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

fn json(text: &str) -> serde_json::Value {
    serde_json::from_str(text.trim()).unwrap()
}

#[test]
fn gen_round_trips_through_the_parser() {
    for args in [["gen", "extremal", "16", "10"], ["gen", "random", "6", "3"], ["gen", "circulant", "4", "2"]] {
        let text = stdout(&args);
        let g = parse_edge_list(&text).unwrap();
        assert_eq!(regfactor_cli::to_edge_list(&g), text);
    }
}

#[test]
fn gen_counts() {
    let g = parse_edge_list(&stdout(&["gen", "extremal", "16", "10"])).unwrap();
    assert_eq!((g.edge_count(), g.min_degree()), (168, 10));
    let g = parse_edge_list(&stdout(&["gen", "circulant", "4", "2"])).unwrap();
    assert_eq!(g.edge_count(), 8);
    assert!(g.is_regular(2));
}

#[test]
fn random_generation_is_seeded() {
    let a = stdout(&["gen", "random", "6", "3", "--seed", "1"]);
    assert_eq!(a, stdout(&["gen", "random", "6", "3", "--seed", "1"]));
    assert!(parse_edge_list(&a).unwrap().min_degree() >= 3);
}

#[test]
fn gen_writes_to_file() {
    let dir = TempDir::new().unwrap();
    let path = dir.path().join("g.txt");
    assert!(stdout(&["gen", "circulant", "5", "3", "--out", s(&path)]).is_empty());
    assert_eq!(parse_edge_list(&std::fs::read_to_string(&path).unwrap()).unwrap().edge_count(), 15);
}

#[test]
fn infeasible_extremal_is_a_usage_error() {
    let out = run(&["gen", "extremal", "8", "4"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(out.stdout.is_empty());
}

#[test]
fn maxreg_examples() {
    let dir = TempDir::new().unwrap();
    let k33 = write(&dir, "k33.txt", "3\n0 0\n0 1\n0 2\n1 0\n1 1\n1 2\n2 0\n2 1\n2 2\n");
    let edgeless = write(&dir, "empty.txt", "2\n");
    let extremal = write(&dir, "ext.txt", &stdout(&["gen", "extremal", "16", "10"]));
    for (path, expected) in [(&k33, 3), (&edgeless, 0), (&extremal, 9)] {
        let record = json(&stdout(&["maxreg", s(path)]));
        assert_eq!(record["r_max"], expected, "{}", path.display());
    }
}

#[test]
fn maxreg_emits_a_regular_subgraph() {
    let dir = TempDir::new().unwrap();
    let g = write(&dir, "ext.txt", &stdout(&["gen", "extremal", "16", "10"]));
    let sub = dir.path().join("sub.txt");
    stdout(&["maxreg", s(&g), "--emit-subgraph", s(&sub), "--format", "csv"]);
    let h = parse_edge_list(&std::fs::read_to_string(&sub).unwrap()).unwrap();
    let g = parse_edge_list(&std::fs::read_to_string(&g).unwrap()).unwrap();
    assert!(h.is_regular(9));
    assert!(h.is_subgraph_of(&g));
}

#[test]
fn maxreg_rejects_malformed_input() {
    let dir = TempDir::new().unwrap();
    for (name, text) in [("dup.txt", "2\n0 0\n0 0\n"), ("range.txt", "2\n0 2\n"), ("junk.txt", "two\n")] {
        let path = write(&dir, name, text);
        assert_eq!(run(&["maxreg", s(&path)]).status.code(), Some(2), "{name}");
    }
    assert_eq!(run(&["maxreg", "/nonexistent/graph.txt"]).status.code(), Some(2));
}

#[test]
fn gale_ryser_check_reports_witness() {
    let dir = TempDir::new().unwrap();
    let path = write(&dir, "path.txt", "2\n0 0\n1 0\n1 1\n");
    let out = run(&["check", "gale-ryser", s(&path), "2"]);
    assert_eq!(out.status.code(), Some(1));
    let record = json(&String::from_utf8(out.stdout).unwrap());
    assert_eq!(record["satisfied"], false);
    assert!(record["witness_x"].is_string());

    let out = run(&["check", "gale-ryser", s(&path), "1"]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn gale_ryser_check_refuses_large_graphs() {
    let dir = TempDir::new().unwrap();
    let path = write(&dir, "big.txt", &stdout(&["gen", "circulant", "21", "3"]));
    assert_eq!(run(&["check", "gale-ryser", s(&path), "2"]).status.code(), Some(2));
}

#[test]
fn certificate_and_grid_checks() {
    let out = run(&["check", "cert", "16", "10"]);
    assert_eq!(out.status.code(), Some(0));
    let record = json(&String::from_utf8(out.stdout).unwrap());
    assert_eq!((record["r"].clone(), record["discriminant"].clone()), (9.into(), 0.into()));

    let out = run(&["check", "grid", "4", "2", "2"]);
    assert_eq!(out.status.code(), Some(1));
    let record = json(&String::from_utf8(out.stdout).unwrap());
    assert_eq!((record["failing_i"].clone(), record["failing_j"].clone()), (3.into(), 3.into()));
    assert_eq!(record["margin"], -1);

    assert_eq!(run(&["check", "grid", "4", "2", "1"]).status.code(), Some(0));
    assert_eq!(run(&["check", "cert", "10", "2"]).status.code(), Some(2));
}

fn sweep_rows(args: &[&str]) -> Vec<Vec<String>> {
    let text = stdout(args);
    let mut lines = text.lines();
    assert_eq!(lines.next().unwrap(), "n,d,source,seed,rho_floor,rho_ceil,upper_bound,r_max,cert,elapsed_ms");
    lines.map(|l| l.split(',').map(str::to_owned).collect()).collect()
}

#[test]
fn sweep_extremal_pairs() {
    let rows = sweep_rows(&["sweep", "--pair", "16:10,32:20"]);
    assert_eq!(rows.len(), 2);
    for (row, v) in rows.iter().zip(["9", "18"]) {
        assert_eq!(row[2], "extremal");
        assert_eq!((&row[4], &row[5], &row[7]), (&v.to_owned(), &v.to_owned(), &v.to_owned()));
        assert_eq!(row[8], "pass");
    }
}

#[test]
fn sweep_random_graphs_meet_the_floor() {
    for (pair, floor) in [("8:4", 2), ("6:3", 1)] {
        let rows = sweep_rows(&["sweep", "--pair", pair, "--source", "random", "--seed", "1", "--seeds", "100"]);
        assert_eq!(rows.len(), 100);
        for row in rows {
            assert!(row[7].parse::<usize>().unwrap() >= floor, "{pair}: {row:?}");
        }
    }
}

#[test]
fn sweep_is_deterministic() {
    let args = ["sweep", "--n", "4-9", "--source", "extremal,random,circulant", "--seeds", "4"];
    assert_eq!(stdout(&args), stdout(&args));
    let args = ["sweep", "--n", "12", "--ratio", "5/8,3/4", "--format", "jsonlike"];
    assert_eq!(stdout(&args), stdout(&args));
}

#[test]
fn sweep_includes_files() {
    let dir = TempDir::new().unwrap();
    let path = write(&dir, "k33.txt", "3\n0 0\n0 1\n0 2\n1 0\n1 1\n1 2\n2 0\n2 1\n2 2\n");
    let rows = sweep_rows(&["sweep", "--file", s(&path)]);
    assert_eq!(rows.len(), 1);
    assert_eq!((rows[0][2].as_str(), rows[0][7].as_str()), ("file", "3"));
}

#[test]
fn sweep_rejects_bad_arguments() {
    assert_eq!(run(&["sweep"]).status.code(), Some(2));
    assert_eq!(run(&["sweep", "--pair", "10:2"]).status.code(), Some(2));
    assert_eq!(run(&["sweep", "--n", "8", "--ratio", "1/4"]).status.code(), Some(2));
}
