use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn bierlab(args: &[&str], cache: Option<&Path>) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_bierlab"));
    cmd.args(args).env_remove("BIERLAB_CACHE");
    if let Some(dir) = cache {
        cmd.env("BIERLAB_CACHE", dir).env("RUST_LOG", "debug");
    }
    cmd.output().expect("binary runs")
}

fn json(args: &[&str]) -> Value {
    let out = bierlab(args, None);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("JSON output")
}

#[test]
fn bier_of_three_points_is_a_hexagon() {
    let v = json(&["bier", "--std", "points:3:3"]);
    assert_eq!(v["m"], 6);
    assert_eq!(v["facets"].as_array().unwrap().len(), 6);
}

#[test]
fn dual_round_trip_through_files() {
    let dir = tempfile::tempdir().unwrap();
    let k = dir.path().join("k.json");
    let d = dir.path().join("d.json");
    fs::write(&k, r#"{"m": 3, "facets": [[1, 2], [2, 3]]}"#).unwrap();
    let out = bierlab(&["dual", "--in", k.to_str().unwrap(), "--out", d.to_str().unwrap()], None);
    assert!(out.status.success());
    let dual: Value = serde_json::from_str(&fs::read_to_string(&d).unwrap()).unwrap();
    assert_eq!(dual["facets"], serde_json::json!([[2]]));
    let back = json(&["dual", "--in", d.to_str().unwrap()]);
    assert_eq!(back["facets"], serde_json::json!([[1, 2], [2, 3]]));
}

#[test]
fn murai_commands() {
    let dir = tempfile::tempdir().unwrap();
    let m = dir.path().join("m.json");
    fs::write(&m, r#"{"c": [2, 1], "max_monomials": [[1, 0]]}"#).unwrap();
    let ideal = json(&["murai-ideal", "--in", m.to_str().unwrap()]);
    assert_eq!(ideal["ideal"], "(x20, x12x21, x10x11)");
    let sphere = json(&["murai", "--in", m.to_str().unwrap(), "--classify"]);
    assert_eq!(sphere["m"], 5);
}

#[test]
fn betti_oracle_agrees_and_cache_hits() {
    let cache = tempfile::tempdir().unwrap();
    let a = bierlab(&["betti", "--std", "cycle:5"], Some(cache.path()));
    let b = bierlab(&["betti", "--std", "cycle:5"], Some(cache.path()));
    assert!(a.status.success() && b.status.success());
    assert_eq!(a.stdout, b.stdout);
    assert!(String::from_utf8_lossy(&b.stderr).contains("cache hit"));
    assert!(!String::from_utf8_lossy(&a.stderr).contains("cache hit"));
    let oracle = json(&["betti", "--std", "cycle:5", "--oracle"]);
    let plain: Value = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(oracle["betti"], plain["betti"]);
    assert_eq!(plain["betti"], serde_json::json!([[0, 0, 1], [1, 4, 5], [2, 6, 5], [3, 10, 1]]));
}

#[test]
fn golod_of_square() {
    let v = json(&["--field", "2", "golod", "--std", "cycle:4"]);
    assert_eq!(v["field"], 2);
    assert_eq!(v["product_golod"], false);
    assert_eq!(v["min_non_golod"], true);
    assert!(!v["witnesses"].as_array().unwrap().is_empty());
}

#[test]
fn faces_and_classify() {
    let f = json(&["faces", "--std", "cycle:6"]);
    assert_eq!(f["h"], serde_json::json!([1, 4, 1]));
    assert_eq!(f["dehn_sommerville"], true);
    let c = json(&["classify", "--std", "points:3:3"]);
    assert_eq!(c["classification"], "FlagFamily(CubeTimesP6(0)) + GolodFamily(3)");
}

#[test]
fn cubical_dump_and_homology() {
    let out = bierlab(&["cubical", "--std", "points:3:3", "--boundary"], None);
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text.lines().count(), 24);
    assert!(text.lines().all(|l| l.split(' ').count() == 3));
    let h = json(&["cubical", "--std", "points:3:3", "--boundary", "--homology"]);
    assert_eq!(h["reduced_homology"], serde_json::json!([[-1, 0], [0, 0], [1, 1]]));
    let gw = json(&["cubical", "--std", "points:3:3", "--gw"]);
    assert_eq!(gw["in_both"], 0);
    assert_eq!(gw["in_neither"], 0);
}

#[test]
fn census_and_verify() {
    let out = bierlab(&["census", "--m", "2"], None);
    assert_eq!(String::from_utf8(out.stdout).unwrap().lines().count(), 3);
    let reports = json(&["verify", "bier-1dim"]);
    assert_eq!(reports[0]["suite"], "bier-1dim");
    assert_eq!(reports[0]["counterexamples"], serde_json::json!([]));
    let again = json(&["verify", "bier-1dim"]);
    assert_eq!(reports, again);
}

#[test]
fn errors_exit_nonzero() {
    assert!(!bierlab(&["--field", "4", "faces", "--std", "cycle:4"], None).status.success());
    assert!(!bierlab(&["dual", "--std", "simplex:3"], None).status.success());
    assert!(!bierlab(&["verify", "nope"], None).status.success());
    assert!(!bierlab(&["census", "--m", "6"], None).status.success());
}
