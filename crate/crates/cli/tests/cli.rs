//! End-to-end tests driving the compiled binary: output text, JSON
//! shapes, exit codes, file output, and seed handling.

use serde_json::Value;
use std::process::{Command, Output};

fn sniplab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_sniplab"))
        .args(args)
        .env_remove("SNIPLAB_SEED")
        .output()
        .expect("binary runs")
}

fn stdout_of(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

fn stderr_of(out: &Output) -> String {
    String::from_utf8_lossy(&out.stderr).into_owned()
}

fn json_of(out: &Output) -> Value {
    let text = stdout_of(out);
    serde_json::from_str(&text).unwrap_or_else(|e| panic!("bad JSON ({e}): {text}"))
}

#[test]
fn pair_reads_a_catalog_matrix() {
    let out = sniplab(&["pair", "A0"]);
    assert_eq!(out.status.code(), Some(0), "stderr: {}", stderr_of(&out));
    let text = stdout_of(&out);
    assert!(text.contains("(3, 2)"), "stdout: {text}");
    assert!(text.contains("downer"), "stdout: {text}");

    let json = json_of(&sniplab(&["pair", "A0", "--json"]));
    assert_eq!(json["pair"], serde_json::json!([3, 2]));
    assert_eq!(json["index"], "downer");
}

#[test]
fn snip_checks_all_methods_and_agrees() {
    let json = json_of(&sniplab(&["snip", "B0", "--json"]));
    assert_eq!(json["snip"], Value::Bool(true));
    assert_eq!(json["pair"], serde_json::json!([3, 2]));
    assert_eq!(json["method"], "all");

    for method in ["direct", "cases", "recipe"] {
        let json = json_of(&sniplab(&["snip", "B0", "--method", method, "--json"]));
        assert_eq!(json["snip"], Value::Bool(true), "method {method}");
    }

    // cut-vertex rooting of the same matrix: pair (3,4) without transfer
    let json = json_of(&sniplab(&["snip", "B1", "--index", "6", "--json"]));
    assert_eq!(json["snip"], Value::Bool(false));
    assert_eq!(json["pair"], serde_json::json!([3, 4]));
}

#[test]
fn minor_respects_roots() {
    let out = sniplab(&["minor", "Bw", "A_"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout_of(&out).contains("contains: true"));

    // a path rooted at an end does not contain the mid-rooted path
    let rooted = sniplab(&["minor", "Bg", "Bg", "--host-root", "1", "--pattern-root", "0"]);
    assert!(stdout_of(&rooted).contains("contains: false"));
    let unrooted = sniplab(&[
        "minor", "Bg", "Bg", "--host-root", "1", "--pattern-root", "0", "--unrooted",
    ]);
    assert!(stdout_of(&unrooted).contains("contains: true"));
}

#[test]
fn xixi_reports_certified_and_minor_levels() {
    let json = json_of(&sniplab(&["xixi", "Bw", "--json"]));
    assert_eq!(json["certified_lower"], 2);
    assert_eq!(json["minor_value"], 2);
    assert_eq!(json["saturated"], Value::Bool(false));
    assert_eq!(json["edge_bound_ok"], Value::Bool(true));
    assert!(json["certificates"].as_array().is_some_and(|c| !c.is_empty()));

    // feeding the reported graph back reproduces the same lower bound
    let graph = json["graph"].to_string();
    let again = json_of(&sniplab(&["xixi", &graph, "--json"]));
    assert_eq!(again["certified_lower"], 2);

    let human = sniplab(&["xixi", "Bw", "--minor-only"]);
    assert!(stdout_of(&human).contains("minor catalog level:   2"));
}

#[test]
fn enumerate_lists_every_reachable_pair() {
    let out = sniplab(&["enumerate", "A_"]);
    let text = stdout_of(&out);
    assert_eq!(
        text.lines().collect::<Vec<_>>(),
        vec![
            "(0, 0) transfer=true",
            "(0, 1) transfer=true",
            "(1, 0) transfer=true"
        ]
    );
}

#[test]
fn search_finds_a_certified_witness() {
    let json = json_of(&sniplab(&["search", "Bw", "--target", "2,1", "--require-snip", "--json"]));
    assert_eq!(json["found"], Value::Bool(true));
    assert_eq!(json["certificate"]["pair"], serde_json::json!([2, 1]));
    assert_eq!(json["certificate"]["snip"], Value::Bool(true));

    let json = json_of(&sniplab(&["search", "Bw", "--target", "3,3", "--json"]));
    assert_eq!(json["found"], Value::Bool(false));

    let bad = sniplab(&["search", "Bw", "--target", "3,1"]);
    assert_eq!(bad.status.code(), Some(1), "stderr: {}", stderr_of(&bad));
}

#[test]
fn verify_paper_passes_every_check() {
    let out = sniplab(&["verify-paper"]);
    assert_eq!(out.status.code(), Some(0), "stderr: {}", stderr_of(&out));
    let text = stdout_of(&out);
    assert!(text.contains("6 of 6 checks passed"), "stdout: {text}");
    assert!(!text.contains("FAIL"), "stdout: {text}");
}

#[test]
fn staircase_walks_to_a_terminal_pair() {
    let json = json_of(&sniplab(&["staircase", "A0", "--json"]));
    assert_eq!(json["start"], serde_json::json!([3, 2]));
    assert_eq!(json["terminal"], serde_json::json!([1, 0]));
    assert_eq!(json["steps"].as_array().map(Vec::len), Some(2));

    // a fractional border size exercises the west move
    let neutral = r#"{"rows":2,"cols":2,"entries":[["1","0"],["0","0"]]}"#;
    let json = json_of(&sniplab(&["staircase", neutral, "--eps", "1/3", "--json"]));
    assert_eq!(json["start"], serde_json::json!([1, 1]));
    assert_eq!(json["terminal"], serde_json::json!([0, 0]));
    assert_eq!(json["steps"].as_array().map(Vec::len), Some(2));
}

#[test]
fn schur_eliminates_a_block_from_a_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("ones.json");
    std::fs::write(
        &path,
        r#"{"rows":3,"cols":3,"entries":[["1","1","1"],["1","1","1"],["1","1","1"]]}"#,
    )
    .unwrap();
    let json = json_of(&sniplab(&["schur", path.to_str().unwrap(), "--alpha", "0", "--json"]));
    assert_eq!(json["rows"], 2);
    assert_eq!(json["entries"], serde_json::json!([["0", "0"], ["0", "0"]]));

    // a singular block is a domain error
    let zero = r#"{"rows":2,"cols":2,"entries":[["0","1"],["1","0"]]}"#;
    let out = sniplab(&["schur", zero, "--alpha", "0"]);
    assert_eq!(out.status.code(), Some(1), "stderr: {}", stderr_of(&out));
}

#[test]
fn output_flag_writes_the_json_report() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    let out = sniplab(&["xixi", "Bw", "-o", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout_of(&out).contains("certified lower bound"));
    let written: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(written["certified_lower"], 2);
}

#[test]
fn exit_codes_distinguish_usage_and_domain_errors() {
    let usage = sniplab(&["pair", "notamatrix"]);
    assert_eq!(usage.status.code(), Some(2));
    assert!(stderr_of(&usage).contains("neither a catalog name nor valid JSON"));

    let domain = sniplab(&["pair", "A0", "--index", "9"]);
    assert_eq!(domain.status.code(), Some(1));
    assert!(stderr_of(&domain).contains("out of range"));

    let unknown_flag = sniplab(&["pair", "A0", "--frobnicate"]);
    assert_eq!(unknown_flag.status.code(), Some(2));

    let help = sniplab(&["--help"]);
    assert_eq!(help.status.code(), Some(0));
}

#[test]
fn sampling_seed_comes_from_flag_or_environment() {
    let by_flag = sniplab(&["enumerate", "C~", "--samples", "40", "--seed", "7"]);
    let by_env = Command::new(env!("CARGO_BIN_EXE_sniplab"))
        .args(["enumerate", "C~", "--samples", "40"])
        .env("SNIPLAB_SEED", "7")
        .output()
        .expect("binary runs");
    assert_eq!(stdout_of(&by_flag), stdout_of(&by_env));

    let other_seed = sniplab(&["enumerate", "C~", "--samples", "40", "--seed", "8"]);
    assert_eq!(other_seed.status.code(), Some(0));
}

#[test]
fn graph_json_inputs_accept_reroots() {
    let claw = r#"{"n":4,"edges":[[0,1],[0,2],[0,3]],"root":0}"#;
    let center = json_of(&sniplab(&["xixi", claw, "--minor-only", "--json"]));
    assert_eq!(center["minor_value"], 1);

    let leaf = json_of(&sniplab(&["xixi", claw, "--root", "1", "--minor-only", "--json"]));
    assert_eq!(leaf["minor_value"], 2);
}

#[test]
fn flag_spellings_mirror_the_positional_forms() {
    // every input slot has a flag form that produces identical output
    let same = [
        (
            vec!["pair", "-m", "A0", "-i", "0"],
            vec!["pair", "A0", "--index", "0"],
        ),
        (
            vec!["snip", "-m", "B1", "-i", "6"],
            vec!["snip", "B1", "--index", "6"],
        ),
        (
            vec!["minor", "--host", "Bw", "--pattern", "A_"],
            vec!["minor", "Bw", "A_"],
        ),
        (vec!["xixi", "-g", "Bw", "--minor-only"], vec!["xixi", "Bw", "--minor-only"]),
        (vec!["enumerate", "-g", "A_"], vec!["enumerate", "A_"]),
        (
            vec!["search", "-g", "Bw", "--pair", "2,1", "--snip"],
            vec!["search", "Bw", "--target", "2,1", "--require-snip"],
        ),
        (
            vec!["staircase", "-m", "A0", "-i", "0"],
            vec!["staircase", "A0"],
        ),
        (
            vec!["schur", "-m", "B2", "--alpha", "0"],
            vec!["schur", "B2", "--alpha", "0"],
        ),
    ];
    for (flagged, positional) in same {
        let a = sniplab(&flagged);
        let b = sniplab(&positional);
        assert_eq!(a.status.code(), Some(0), "{flagged:?}: {}", stderr_of(&a));
        assert_eq!(
            stdout_of(&a),
            stdout_of(&b),
            "outputs differ between {flagged:?} and {positional:?}"
        );
    }

    // giving the same slot twice is rejected as a usage error
    let twice = sniplab(&["pair", "A0", "-m", "A0"]);
    assert_eq!(twice.status.code(), Some(2));
    // omitting the slot entirely is too
    let missing = sniplab(&["pair"]);
    assert_eq!(missing.status.code(), Some(2));
}
