use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use oriented_ideals::{MonomialIdeal, WeightedOrientedGraph};
use serde_json::Value;

fn fixture(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("../../fixtures")
        .join(format!("{name}.json"))
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_oriented-ideals"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn run_on(name: &str, args: &[&str]) -> Output {
    let path = fixture(name);
    let mut full = vec!["--input", path.to_str().unwrap()];
    full.extend_from_slice(args);
    run(&full)
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).expect("valid JSON")
}

/// A scratch directory removed on drop.
struct Scratch(PathBuf);

impl Scratch {
    fn new(tag: &str) -> Self {
        let dir = std::env::temp_dir().join(format!("oriented-ideals-{tag}-{}", std::process::id()));
        let _ = std::fs::remove_dir_all(&dir);
        std::fs::create_dir_all(&dir).unwrap();
        Scratch(dir)
    }
}

impl Drop for Scratch {
    fn drop(&mut self) {
        let _ = std::fs::remove_dir_all(&self.0);
    }
}

#[test]
fn decompose_golden() {
    let o = run_on("d2", &["decompose"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(
        stdout(&o),
        "I(D) = (x1*x5, x1*x2^2, x2^2*x3, x3*x4^2, x4^2*x5)\n\
         5 irreducible components\n\
         {x1,x2,x4}: (x1, x2^2, x4^2)\n\
         {x1,x3,x4}: (x1, x3, x4^2)\n\
         {x1,x3,x5}: (x1, x3, x5)\n\
         {x2,x3,x5}: (x3, x5, x2^2)\n\
         {x2,x4,x5}: (x5, x2^2, x4^2)\n\
         PASS the intersection of the components equals the edge ideal\n\
         PASS no component can be dropped\n"
    );
}

#[test]
fn equality_check_golden() {
    let o = run_on("d2", &["equality-check", "--max-m", "3"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "m equal\n1 true\n2 true\n3 false\n");
    let j = json(&run_on("d2", &["--format", "json", "equality-check", "--max-m", "3"]));
    assert_eq!(j["command"], "equality-check");
    assert!(j["assertions"].is_array());
}

#[test]
fn output_is_deterministic_across_thread_counts() {
    let args = ["--format", "json", "symbolic-power", "--m", "3"];
    let path = fixture("d2");
    let mut outputs = Vec::new();
    for threads in ["1", "2", "8", "1"] {
        let o = Command::new(env!("CARGO_BIN_EXE_oriented-ideals"))
            .arg("--input")
            .arg(&path)
            .args(args)
            .env("RAYON_NUM_THREADS", threads)
            .output()
            .unwrap();
        assert_eq!(o.status.code(), Some(0));
        outputs.push(o.stdout);
    }
    assert!(outputs.windows(2).all(|w| w[0] == w[1]));
}

#[test]
fn json_ideals_round_trip() {
    let j = json(&run_on("d2", &["--format", "json", "symbolic-power", "--m", "3"]));
    let g = WeightedOrientedGraph::from_json(&j["graph"].to_string()).unwrap();
    let text = j["result"]["ideal"].as_str().unwrap();
    let parsed = MonomialIdeal::parse(text, g.names()).unwrap();
    assert_eq!(parsed.display(g.names()).to_string(), text);
    let want = oriented_ideals::symbolic::symbolic_power(&g, 3).unwrap();
    assert_eq!(parsed, want);
}

#[test]
fn exit_codes() {
    assert_eq!(run_on("d2", &["power", "--s", "2"]).status.code(), Some(0));
    assert_eq!(run_on("d2", &["symbolic-power", "--m", "0"]).status.code(), Some(2));
    assert_eq!(run(&["decompose"]).status.code(), Some(2));
    assert_eq!(run(&["--input", "/nonexistent/graph.json", "covers"]).status.code(), Some(2));
    assert_eq!(run(&["no-such-command"]).status.code(), Some(2));

    let scratch = Scratch::new("bad");
    let bad = scratch.0.join("bad.json");
    std::fs::write(&bad, "{not json").unwrap();
    assert_eq!(run(&["--input", bad.to_str().unwrap(), "covers"]).status.code(), Some(2));
    let source_weighted = scratch.0.join("weighted_source.json");
    std::fs::write(
        &source_weighted,
        r#"{"vertices":[{"name":"a","weight":3},{"name":"b"}],"edges":[["a","b"]]}"#,
    )
    .unwrap();
    assert_eq!(run(&["--input", source_weighted.to_str().unwrap(), "covers"]).status.code(), Some(2));
}

#[test]
fn regularity_reports_the_coefficient_field() {
    let o = run_on("d2", &["--format", "json", "regularity", "--power", "3", "--kind", "quotient"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(json(&o)["result"]["reg_quotient"], 9);
    let o = run_on("d2", &["--format", "json", "regularity", "--power", "2", "--kind", "symbolic"]);
    assert_eq!(o.status.code(), Some(0));
    let j = json(&o);
    assert_eq!(j["result"]["field"]["characteristic"], 0);
    assert_eq!(j["result"]["field"]["coefficients"], "QQ");
}

#[test]
fn bundled_suite_passes() {
    let o = run(&["verify-paper"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let text = stdout(&o);
    let first = text.lines().next().unwrap();
    let (passed, total) = first.split_once(' ').unwrap().0.split_once('/').unwrap();
    assert_eq!(passed, total);
    assert!(!text.contains("FAIL"));
}

#[test]
fn failing_suite_exits_one_and_fail_fast_stops() {
    let scratch = Scratch::new("suite");
    std::fs::copy(fixture("d2"), scratch.0.join("d2.json")).unwrap();
    let suite = r#"{"checks": [
        {"claim": "wrong count", "graph": "d2.json", "check": "strong_covers", "count": 4},
        {"claim": "right count", "graph": "d2.json", "check": "strong_covers", "count": 5}
    ]}"#;
    std::fs::write(scratch.0.join("suite.json"), suite).unwrap();
    let dir = scratch.0.to_str().unwrap();

    let all = run(&["--format", "json", "verify-paper", "--fixtures", dir]);
    assert_eq!(all.status.code(), Some(1));
    let j = json(&all);
    assert_eq!(j["result"]["run"], 2);
    assert_eq!(j["result"]["passed"], 1);
    assert_eq!(j["assertions"][0]["status"], "fail");

    let fast = run(&["--fail-fast", "--format", "json", "verify-paper", "--fixtures", dir]);
    assert_eq!(fast.status.code(), Some(1));
    assert_eq!(json(&fast)["result"]["run"], 1);
}
