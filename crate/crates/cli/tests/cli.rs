use std::path::Path;
use std::process::{Command, Output};

fn dipaths(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_dipaths"))
        .args(args)
        .env_remove("DIPATHS_WORKERS")
        .output()
        .expect("binary runs")
}

fn path_str(p: &Path) -> &str {
    p.to_str().unwrap()
}

fn error_kind(out: &Output) -> String {
    let line = String::from_utf8_lossy(&out.stderr);
    let v: serde_json::Value = serde_json::from_str(line.trim()).expect("JSON error record");
    v["error"].as_str().unwrap().to_owned()
}

#[test]
fn colour_then_verify_three_cycle() {
    let dir = tempfile::tempdir().unwrap();
    let g = dir.path().join("c3.txt");
    let col = dir.path().join("c3.col");
    let cert = dir.path().join("c3.json");
    std::fs::write(&g, "3 3\n0 1\n1 2\n2 0\n").unwrap();

    let out = dipaths(&["colour", "-i", path_str(&g), "--n", "2", "-o", path_str(&col), "--certificate", path_str(&cert)]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(std::fs::read_to_string(&col).unwrap().lines().count(), 3);
    let c: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&cert).unwrap()).unwrap();
    assert_eq!(c["within_169n"], true);

    let out = dipaths(&["verify", "--graph", path_str(&g), "--colouring", path_str(&col), "--certificate", path_str(&cert)]);
    assert_eq!(out.status.code(), Some(0));
    let report: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(report.as_array().unwrap().len(), 2);
}

#[test]
fn tampered_colouring_is_rejected() {
    let dir = tempfile::tempdir().unwrap();
    let g = dir.path().join("c3.txt");
    let col = dir.path().join("bad.col");
    std::fs::write(&g, "3 3\n0 1\n1 2\n2 0\n").unwrap();
    std::fs::write(&col, "0 1 0\n1 2 0\n2 0 1\n0 2 1\n").unwrap();
    let out = dipaths(&["verify", "--graph", path_str(&g), "--colouring", path_str(&col)]);
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(error_kind(&out), "UnknownEdge");
}

#[test]
fn exceeded_certificate_exits_one() {
    let dir = tempfile::tempdir().unwrap();
    let g = dir.path().join("p.txt");
    let col = dir.path().join("p.col");
    let cert = dir.path().join("p.json");
    let out = dipaths(&["generate", "--kind", "dipath", "--vertices", "40", "-o", path_str(&g)]);
    assert!(out.status.success());
    let out = dipaths(&["colour", "-i", path_str(&g), "--n", "16", "-o", path_str(&col), "--certificate", path_str(&cert)]);
    assert!(out.status.success());
    let all_red: String = (0..39).map(|i| format!("{} {} 0\n", i, i + 1)).collect();
    std::fs::write(&col, all_red).unwrap();
    let out = dipaths(&["verify", "--graph", path_str(&g), "--colouring", path_str(&col), "--certificate", path_str(&cert)]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn bidirected_pair_reports_line() {
    let dir = tempfile::tempdir().unwrap();
    let g = dir.path().join("bad.txt");
    std::fs::write(&g, "2 2\n0 1\n1 0\n").unwrap();
    let out = dipaths(&["colour", "-i", path_str(&g), "--n", "2"]);
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(error_kind(&out), "BidirectedPair");
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 3"));
}

#[test]
fn too_many_edges_is_invalid_input() {
    let dir = tempfile::tempdir().unwrap();
    let g = dir.path().join("t.txt");
    dipaths(&["generate", "--kind", "tournament", "--vertices", "30", "--seed", "1", "-o", path_str(&g)]);
    let out = dipaths(&["colour", "-i", path_str(&g), "--n", "8"]);
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(error_kind(&out), "TooManyEdges");
}

#[test]
fn generate_requires_seed_for_random_kinds() {
    let out = dipaths(&["generate", "--kind", "oriented-gnm", "--vertices", "10", "--edges", "20"]);
    assert_eq!(out.status.code(), Some(2));
    let out = dipaths(&["generate", "--kind", "oriented-gnm", "--vertices", "10", "--edges", "20", "--seed", "1"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("# kind=oriented-gnm vertices=10 edges=20 seed=1\n10 20\n"));
    assert_eq!(text.lines().count(), 22);
}

#[test]
fn generate_dipath() {
    let out = dipaths(&["generate", "--kind", "dipath", "--vertices", "4"]);
    assert_eq!(String::from_utf8(out.stdout).unwrap(), "# kind=dipath vertices=4\n4 3\n0 1\n1 2\n2 3\n");
}

#[test]
fn bounds_schedule() {
    let vertices = (32.0 * 1048576.0 * 20f64.sqrt()) as u64;
    let out = dipaths(&["bounds", "--n", "1048576", "--vertices", &vertices.to_string()]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let alphas: Vec<f64> = v["schedule"]["alphas"]
        .as_array()
        .unwrap()
        .iter()
        .map(|a| a.as_f64().unwrap())
        .collect();
    assert_eq!(alphas.len(), 3);
    for (a, want) in alphas.iter().zip([32.0, 16.0, 8.0]) {
        assert!((a - want).abs() < 1e-6, "{a} vs {want}");
    }
}

#[test]
fn extract_emits_special_set() {
    let dir = tempfile::tempdir().unwrap();
    let g = dir.path().join("g.txt");
    std::fs::write(&g, "6 6\n0 1\n1 2\n2 0\n3 4\n4 5\n5 3\n").unwrap();
    let out = dipaths(&["extract", "-i", path_str(&g), "--k", "2", "--eps", "0/1", "--trace"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["size"], 4);
    assert!(v["trace"]["rounds"].is_array());
    let out = dipaths(&["extract", "-i", path_str(&g), "--k", "2", "--eps", "0.5"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn stats_is_worker_independent() {
    let base = ["stats", "--kind", "oriented-gnm", "--vertices", "60", "--edges", "150", "--n", "8", "--seeds", "0..6"];
    let one = dipaths(&[&base[..], &["--workers", "1"]].concat());
    let four = Command::new(env!("CARGO_BIN_EXE_dipaths"))
        .args(base)
        .env("DIPATHS_WORKERS", "4")
        .output()
        .unwrap();
    assert!(one.status.success() && four.status.success());
    assert_eq!(one.stdout, four.stdout);
    let text = String::from_utf8(one.stdout).unwrap();
    assert_eq!(text.lines().next(), Some("seed,N,M,l,remainder,cert_edges,red_longest,blue_longest,ratio"));
    assert_eq!(text.lines().count(), 7);
}
