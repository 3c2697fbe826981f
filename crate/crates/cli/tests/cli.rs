use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;
use tempfile::TempDir;

fn fibercone(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_fibercone")).args(args).output().expect("binary runs")
}

fn json(out: &Output) -> Value {
    assert!(out.status.success(), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("valid JSON")
}

fn write(dir: &TempDir, name: &str, text: &str) -> String {
    let p = dir.path().join(name);
    fs::write(&p, text).unwrap();
    p.to_str().unwrap().to_string()
}

fn generated(dir: &TempDir, spec: &str) -> String {
    let p = dir.path().join(format!("{}.graph", spec.replace([':', ','], "_")));
    let out = fibercone(&["gen", spec, "-o", p.to_str().unwrap()]);
    assert!(out.status.success());
    p.to_str().unwrap().to_string()
}

#[test]
fn hexagon_analysis() {
    let dir = TempDir::new().unwrap();
    let hex = generated(&dir, "cycle:6");
    let v = json(&fibercone(&["analyze", &hex, "--kmax", "10"]));
    assert_eq!(v["wsc"], false);
    assert_eq!(v["dim_estimate"], 3);
    assert_eq!(v["multiplicity_estimate"], 3);
    assert_eq!(v["gdim"], 3);
    assert_eq!(v["lattice"], Value::Null);
}

#[test]
fn ten_cycle_gdim() {
    let dir = TempDir::new().unwrap();
    let c10 = generated(&dir, "cycle:10");
    assert_eq!(json(&fibercone(&["gdim", &c10]))["gdim"], 5);
    let text = fibercone(&["gdim", &c10, "--format", "text"]);
    assert_eq!(String::from_utf8(text.stdout).unwrap(), "5\n");
}

#[test]
fn edge_covers() {
    let dir = TempDir::new().unwrap();
    let edge = write(&dir, "edge.graph", "# one edge\nn 2\ne 1 2\n");
    let v = json(&fibercone(&["covers", &edge, "-k", "1"]));
    assert_eq!(v["count"], 2);
    assert_eq!(v["covers"], serde_json::json!([[0, 1], [1, 0]]));
}

#[test]
fn output_is_independent_of_workers() {
    let dir = TempDir::new().unwrap();
    let g = generated(&dir, "caterpillar:3,4,5");
    for cmd in [&["analyze", g.as_str(), "--kmax", "10"][..], &["gdim", g.as_str()], &["covers", g.as_str(), "-k", "3"]] {
        let one = fibercone(&[cmd, &["--workers", "1"]].concat());
        let many = fibercone(&[cmd, &["--workers", "4"]].concat());
        let default = fibercone(cmd);
        assert!(one.status.success());
        assert_eq!(one.stdout, many.stdout);
        assert_eq!(one.stdout, default.stdout);
    }
}

#[test]
fn unmixed_lattice() {
    let v = json(&fibercone(&["lattice", "--gen", "whisker-path:3"]));
    assert_eq!(v["rank"], 4);
    let v = json(&fibercone(&["analyze", "--gen", "whisker-path:3"]));
    assert_eq!(v["lattice"]["rank"], 4);
}

#[test]
fn hilbert_profile() {
    let v = json(&fibercone(&["hilbert", "--gen", "path:6"]));
    assert_eq!((v["dim"].as_u64(), v["multiplicity"].as_u64()), (Some(4), Some(1)));
}

#[test]
fn hypergraph_report() {
    let dir = TempDir::new().unwrap();
    let h = write(&dir, "tri.hyper", "n 3\nf 1 1 2 3\n");
    let v = json(&fibercone(&["hypergraph", &h]));
    assert_eq!((v["degree"].as_u64(), v["lower"].as_u64(), v["upper"].as_u64()), (Some(2), Some(2), Some(2)));
    assert_eq!(v["within_bounds"], true);
    let h = write(&dir, "edge.hyper", "n 2\nf 3 1 2\n");
    let v = json(&fibercone(&["hypergraph", &h, "-k", "1"]));
    assert_eq!(v["covers"], serde_json::json!([[0, 3], [1, 2], [2, 1], [3, 0]]));
}

#[test]
fn generator_round_trip_and_seeds() {
    let a = fibercone(&["gen", "random:4,4,0.5", "--seed", "9"]);
    let b = fibercone(&["gen", "random:4,4,0.5", "--seed", "9"]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    assert!(String::from_utf8(a.stdout).unwrap().starts_with("n 8\n"));
}

#[test]
fn exit_codes() {
    let dir = TempDir::new().unwrap();
    let code = |out: Output| out.status.code().unwrap();
    let triangle = write(&dir, "tri.graph", "n 3\ne 1 2\ne 2 3\ne 3 1\n");
    let out = fibercone(&["analyze", &triangle]);
    assert!(String::from_utf8_lossy(&out.stderr).contains("not bipartite"));
    assert_eq!(code(out), 1);
    let empty = write(&dir, "empty.graph", "n 3\n");
    assert_eq!(code(fibercone(&["analyze", &empty])), 1);
    assert_eq!(code(fibercone(&["lattice", "--gen", "cycle:6"])), 1);
    let simplex = write(&dir, "s.hyper", "n 4\nf 1 1 2 3 4\n");
    let out = fibercone(&["hypergraph", &simplex, "--budget", "10"]);
    assert!(String::from_utf8_lossy(&out.stderr).contains("budget"));
    assert_eq!(code(out), 1);
    assert_eq!(code(fibercone(&["analyze", Path::new("/nonexistent/g").to_str().unwrap()])), 2);
    assert_eq!(code(fibercone(&["analyze"])), 2);
    assert_eq!(code(fibercone(&["analyze", "--gen", "cycle:7"])), 2);
    assert_eq!(code(fibercone(&["covers", "--gen", "cycle:6"])), 2);
    assert_eq!(code(fibercone(&["frobnicate"])), 2);
}

#[test]
fn verify_single_criteria() {
    let out = fibercone(&["verify", "--criterion", "1", "--format", "text"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8(out.stdout).unwrap().starts_with("PASS [ 1]"));
    let out = fibercone(&["verify", "--criterion", "14"]);
    assert_eq!(out.status.code(), Some(3));
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v[0]["passed"], false);
}
