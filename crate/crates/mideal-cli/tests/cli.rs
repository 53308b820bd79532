use std::io::Write;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

fn run(args: &[&str]) -> (i32, Value) {
    let out = Command::new(env!("CARGO_BIN_EXE_mideal")).args(args).output().unwrap();
    (out.status.code().unwrap(), parse(&out))
}

fn parse(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap_or(Value::Null)
}

fn run_stdin(args: &[&str], stdin: &str) -> (i32, Value) {
    let mut child = Command::new(env!("CARGO_BIN_EXE_mideal"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(stdin.as_bytes()).unwrap();
    let out = child.wait_with_output().unwrap();
    (out.status.code().unwrap(), parse(&out))
}

#[test]
fn lexsegment_classify_example() {
    let (code, v) = run(&["lexsegment", "classify", "--n", "3", "--d", "3", "--u", "x1*x2*x3", "--v", "x2*x3^2"]);
    assert_eq!(code, 0);
    assert_eq!(v["command"], "lexsegment classify");
    let c = &v["result"]["classification"];
    assert_eq!(c["completely"], true);
    assert_eq!(c["linear_resolution"], true);
    assert_eq!(c["linear_tag"]["case"], "greatest_below");
}

#[test]
fn subword_analyze_example() {
    let (code, v) = run(&["subword", "analyze", "--m", "4", "--word", "1,2,1,3,1,2,3,1", "--pi", "(1 2 4)"]);
    assert_eq!(code, 0);
    let r = &v["result"];
    assert_eq!(r["facets"].as_array().unwrap().len(), 4);
    assert_eq!(r["certificate"]["sets"], serde_json::json!([[], [2], [1], [1, 3]]));
    assert_eq!(r["topology"], "ball");
}

#[test]
fn empty_generators_are_an_input_error() {
    let (code, v) = run(&["ideal", "betti", "--n", "3", "--gens", ""]);
    assert_eq!(code, 4);
    assert_eq!(v["status"], "input_error");
}

#[test]
fn malformed_json_names_the_field() {
    let (code, v) = run_stdin(&["ideal", "betti", "--input", "-"], r#"{"n": 3, "gens": ["x1", 5]}"#);
    assert_eq!(code, 4);
    assert!(v["error"].as_str().unwrap().contains("gens[1]"), "{v}");
    let (code, v) = run_stdin(&["ideal", "betti", "--input", "-"], r#"{"n": 3, "gens": ["x1"], "extra": 1}"#);
    assert_eq!(code, 4);
    assert!(v["error"].as_str().unwrap().contains("extra"), "{v}");
    let (code, _) = run(&["ideal", "betti", "--gens", "x1", "--no-such-flag"]);
    assert_eq!(code, 4);
}

#[test]
fn reports_are_deterministic() {
    let args = ["ideal", "quotients", "--gens", "x1*x2*x3,x1*x3^2,x2^3,x2^2*x3,x2*x3^2"];
    let a = Command::new(env!("CARGO_BIN_EXE_mideal")).args(args).output().unwrap();
    let b = Command::new(env!("CARGO_BIN_EXE_mideal")).args(args).output().unwrap();
    assert_eq!(a.stdout, b.stdout);
    let v = parse(&a);
    assert_eq!(v["result"]["verdict"], "linear_quotients");
    assert!(v["input_digest"].as_str().unwrap().starts_with("sha256:"));
    // the same ideal written differently has the same digest
    let c = run(&["ideal", "quotients", "--n", "3", "--gens", "x2*x3^2,x2^2*x3,x2^3,x1*x3^2,x1*x2*x3,x1*x2*x3^2"]).1;
    assert_eq!(c["input_digest"], v["input_digest"]);
    assert_eq!(c["warnings"][0], "1 redundant generators dropped");
}

#[test]
fn classification_negative_and_unknown_codes() {
    // descending lex fails with colon (x1 x3)
    let (code, v) = run(&["ideal", "quotients", "--gens", "x1*x2*x3,x1*x3^2,x2^3,x2^2*x3,x2*x3^2", "--order", "x1*x2*x3,x1*x3^2,x2^3,x2^2*x3,x2*x3^2"]);
    assert_eq!(code, 2);
    assert_eq!(v["result"]["failure"]["colon"], serde_json::json!(["x1*x3"]));
    let (code, _) = run(&["ideal", "quotients", "--gens", "x1^3,x1*x2^2"]);
    assert_eq!(code, 2);
    let (code, _) = run(&["complex", "shelling", "--facets", "1,2;3,4"]);
    assert_eq!(code, 2);
    let (code, v) = run(&["constructible", "search", "--n", "12", "--gens", "x1*x2,x3*x4", "--budget", "0"]);
    assert!(code == 3 || code == 0, "{v}");
    let (code, v) = run(&["ideal", "stable", "--gens", "x1*x2,x2^2"]);
    assert_eq!(code, 2);
    assert_eq!(v["result"]["stable"], false);
}

#[test]
fn dunce_hat_search_is_unknown() {
    let (code, v) = run(&["complex", "dual", "--named", "dunce-hat"]);
    assert_eq!(code, 0);
    let gens: Vec<String> = v["result"]["dual_sr_ideal"].as_array().unwrap().iter().map(|g| g.as_str().unwrap().to_string()).collect();
    assert_eq!(gens.len(), 17);
    let (code, v) = run(&["constructible", "search", "--gens", &gens.join(","), "--n", "8", "--budget", "2000"]);
    assert_eq!(code, 3, "{v}");
    assert_eq!(v["result"]["verdict"], "unknown");
}

#[test]
fn characteristic_flag() {
    let (code, v) = run(&["complex", "cm", "--named", "projective-plane"]);
    assert_eq!(code, 0);
    assert_eq!(v["result"]["eagon_reiner"]["dual_linear"], true);
    let (code, v) = run(&["complex", "cm", "--named", "projective-plane", "--char", "2"]);
    assert_eq!(code, 2);
    assert_eq!(v["result"]["cohen_macaulay"]["field"], serde_json::json!(v["result"]["homology"]["field"]));
    let (code, _) = run(&["complex", "cm", "--named", "projective-plane", "--char", "4"]);
    assert_eq!(code, 4);
}

#[test]
fn resolutions_round_trip_through_verify() {
    let (code, v) = run(&["resolution", "ek", "--gens", "x1^2,x1*x2^2,x1*x2*x3,x2^3"]);
    assert_eq!(code, 0);
    assert_eq!(v["result"]["ranks"], serde_json::json!([1, 4, 4, 1]));
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("r.json");
    std::fs::write(&path, v["result"]["resolution"].to_string()).unwrap();
    let (code, w) = run(&["resolution", "verify", "--input", path.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert_eq!(w["result"]["verification"]["dd_zero"], true);

    // flip one sign: no longer a complex
    let mut broken = v["result"]["resolution"].clone();
    let e = &mut broken["diffs"][1]["entries"][0]["coeff"];
    *e = serde_json::json!(-e.as_i64().unwrap());
    std::fs::write(&path, broken.to_string()).unwrap();
    let (code, _) = run(&["resolution", "verify", "--input", path.to_str().unwrap()]);
    assert_eq!(code, 2);

    let (code, _) = run(&["resolution", "ek", "--gens", "x1*x2,x2^2"]);
    assert_eq!(code, 2);
    let (code, v) = run(&["resolution", "koszul", "--seq", "x1^2,x1*x2*x3,x3^3"]);
    assert_eq!(code, 0);
    assert_eq!(v["result"]["ranks"], serde_json::json!([1, 3, 3, 1]));
    let (code, v) = run(&["resolution", "cone", "--gens", "x1*x2,x2*x3*x4,x2*x3^2", "--order", "x1*x2,x2*x3*x4,x2*x3^2"]);
    assert_eq!(code, 0);
    assert_eq!(v["result"]["verification"]["minimal"], true);
}

#[test]
fn constructible_certificates_from_files() {
    let dir = tempfile::tempdir().unwrap();
    let (code, v) = run(&["constructible", "search", "--gens", "x1*x2,x1*x3,x2*x3"]);
    assert_eq!(code, 0);
    let path = dir.path().join("c.json");
    std::fs::write(&path, v["result"]["certificate"].to_string()).unwrap();
    let (code, w) = run(&["constructible", "verify", "--cert", path.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert_eq!(w["result"]["verification"]["valid"], true);
    // against a different ideal the root fails
    let (code, w) = run(&["constructible", "verify", "--cert", path.to_str().unwrap(), "--gens", "x1*x2,x1*x3"]);
    assert_eq!(code, 2);
    assert_eq!(w["result"]["verification"]["failure"]["path"], "root");

    let (code, v) = run(&["constructible", "polarize", "--gens", "x1^2*x2"]);
    assert_eq!(code, 0);
    assert_eq!(v["result"]["ideal"]["gens"], serde_json::json!(["x1*x2*x3"]));
}

#[test]
fn ideal_operations() {
    let (_, v) = run(&["ideal", "intersect", "--n", "3", "--gens", "x1*x2", "--with", "x2*x3"]);
    assert_eq!(v["result"]["intersection"]["gens"], serde_json::json!(["x1*x2*x3"]));
    let (_, v) = run(&["ideal", "colon", "--gens", "x1*x4,x2*x4,x3^2", "--by", "x4"]);
    assert_eq!(v["result"]["colon"], serde_json::json!(["x1", "x2", "x3^2"]));
    let (_, v) = run(&["ideal", "dim-depth", "--gens", "x1*x3,x1*x4,x2*x3,x2*x4"]);
    assert_eq!((v["result"]["krull_dim"].as_u64(), v["result"]["depth"].as_u64()), (Some(2), Some(1)));
    let (_, v) = run(&["ideal", "betti", "--gens", "x1^2,x1*x2^2,x1*x2*x3,x2^3", "--strategy", "taylor"]);
    assert_eq!(v["result"]["totals"], serde_json::json!([4, 4, 1]));
}

#[test]
fn subword_commands() {
    let w = ["--m", "4", "--word", "2,3,2,3,1,3,2,3,2", "--pi", "(1 4)(2 3)"];
    let (code, v) = run(&[&["subword", "sphere"][..], &w].concat());
    assert_eq!(code, 0);
    assert_eq!(v["result"]["topology"], "sphere");
    let (_, v) = run(&[&["subword", "kpoly"][..], &w].concat());
    assert_eq!(v["result"]["formatted"], "4*t^6 - 6*t^7 + 4*t^8 - t^9");
    let (code, _) = run(&["subword", "sphere", "--m", "4", "--word", "1,2", "--pi", "(1 2 4)"]);
    assert_eq!(code, 2);
    let (code, _) = run(&["subword", "analyze", "--m", "9", "--word", "1", "--pi", "id"]);
    assert_eq!(code, 4);
}

#[test]
fn sweeps_pass() {
    let (code, v) = run(&["sweep", "hierarchy", "--count", "40", "--seed", "3"]);
    assert_eq!(code, 0, "{v}");
    assert_eq!(v["result"]["checked"], 40);
    let (code, v) = run(&["sweep", "lexsegment", "--max-n", "4", "--max-d", "3", "--threads", "2"]);
    assert_eq!(code, 0, "{v}");
    let (code, v) = run(&["sweep", "eagon-reiner", "--count", "60", "--char", "2"]);
    assert_eq!(code, 0, "{v}");
    assert_eq!(v["result"]["failures"], serde_json::json!([]));
}

#[test]
fn pretty_format() {
    let out = Command::new(env!("CARGO_BIN_EXE_mideal"))
        .args(["--format", "pretty", "ideal", "betti", "--gens", "x1*x3,x1*x4,x2*x3,x2*x4"])
        .output()
        .unwrap();
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("ideal betti: ok (exit 0)"), "{text}");
    assert!(text.contains("total:     4     4     1"), "{text}");
}
