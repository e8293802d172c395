use std::path::{Path, PathBuf};
use std::process::{Command, Output};
use std::time::Instant;

use ghzsep::states::XState;
use ghzsep::witness::is_witness;
use ghzsep_cli::report::{classify, ClassifyReport};
use ghzsep_cli::statefile::{StateFile, WitnessFile};
use ghzsep_cli::svg::{cell_class, parse_cells};
use ghzsep_cli::sweep::read_csv;
use serde_json::Value;

fn ghzsep(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ghzsep"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

fn write_state(dir: &Path, name: &str, json: &str) -> PathBuf {
    let p = dir.join(name);
    std::fs::write(&p, json).unwrap();
    p
}

fn kay_json(alpha: f64) -> String {
    format!(
        r#"{{"ghz_diagonal": {{"a": [{}, {alpha}, {alpha}, {alpha}], "c": [2, 2, -2, 2]}}}}"#,
        4.0 + alpha
    )
}

fn classify_json(path: &Path) -> Value {
    let o = ghzsep(&["classify", "--state", path.to_str().unwrap(), "--json"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    serde_json::from_str(&stdout(&o)).unwrap()
}

#[test]
fn classify_examples() {
    let dir = tempfile::tempdir().unwrap();

    let v = classify_json(&write_state(dir.path(), "kay.json", &kay_json(2.5)));
    assert_eq!(v["label"], "ppt-entangled");
    assert_eq!(v["verdict"]["case"], "III");
    assert_eq!(v["verdict"]["ppt"], true);
    assert_eq!(v["verdict"]["separable"], false);
    assert!(v["verdict"]["witness"]["pairing_value"].as_f64().unwrap() < 0.0);

    let v = classify_json(&write_state(
        dir.path(),
        "uniform.json",
        r#"{"ghz_weights": [1,1,1,1,1,1,1,1]}"#,
    ));
    assert_eq!(v["verdict"]["separable"], true);
    assert!(v["verdict"]["witness"].is_null());

    let v = classify_json(&write_state(
        dir.path(),
        "ghz.json",
        r#"{"ghz_weights": [1,0,0,0,0,0,0,0]}"#,
    ));
    assert_eq!(v["label"], "npt-entangled");
    assert_eq!(v["verdict"]["npt_direction"], "A");

    // Non-positive input is flagged but still analyzed.
    let v = classify_json(&write_state(dir.path(), "bad.json", &kay_json(1.0)));
    assert_eq!(v["label"], "invalid-state");
    assert_eq!(v["verdict"]["positive"], false);
    assert_eq!(v["verdict"]["ppt"], false);
    assert_eq!(v["verdict"]["case"], "III");

    let text = stdout(&ghzsep(&[
        "classify",
        "--state",
        dir.path().join("kay.json").to_str().unwrap(),
    ]));
    assert!(
        text.contains("ppt-entangled") && text.contains("case         III") && text.contains("W.a"),
        "{text}"
    );
}

#[test]
fn classify_json_reingests_identically() {
    let dir = tempfile::tempdir().unwrap();
    let path = write_state(
        dir.path(),
        "s.json",
        r#"{"ghz_diagonal": {"a": [0.1, 0.3, 0.05, 0.2], "c": [0.07, -0.02, 0.04, 0.011]}}"#,
    );
    let o = ghzsep(&["classify", "--state", path.to_str().unwrap(), "--json"]);
    let from_cli: ClassifyReport = serde_json::from_str(&stdout(&o)).unwrap();
    let direct = classify(&StateFile::read(&path).unwrap().to_input().unwrap(), 0).unwrap();
    assert_eq!(from_cli, direct);
}

#[test]
fn general_x_state_is_analyzed() {
    let dir = tempfile::tempdir().unwrap();
    let path = write_state(
        dir.path(),
        "x.json",
        r#"{"x_state": {"a": [6.5, 2.5, 2.5, 2.5], "b": [6.5, 2.5, 2.5, 2.5], "c_re": [1.99, 2, -2, 1.99], "c_im": [0.2, 0, 0, 0.2]}}"#,
    );
    let v = classify_json(&path);
    assert_eq!(v["kind"], "general");
    assert_eq!(v["ppt"], true);
    assert_eq!(v["label"], "ppt-entangled");
    assert_eq!(v["necessary"]["verdict"], "EntangledCertified");
}

#[test]
fn parse_and_usage_errors() {
    let dir = tempfile::tempdir().unwrap();
    let bad = write_state(dir.path(), "bad.json", "{\n  \"ghz_weights\": [1, 2, 3]\n}");
    let o = ghzsep(&["classify", "--state", bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("line 2"), "{}", stderr(&o));

    let o = ghzsep(&["classify", "--state", dir.path().join("missing.json").to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));

    assert_eq!(ghzsep(&["classify"]).status.code(), Some(1));
    assert_eq!(ghzsep(&["frobnicate"]).status.code(), Some(1));
    assert_eq!(
        ghzsep(&["sweep-pq", "--grid", "1", "--out", "x.csv"]).status.code(),
        Some(1)
    );
    assert_eq!(ghzsep(&["--help"]).status.code(), Some(0));
}

#[test]
fn cvalue_examples() {
    let o = ghzsep(&["cvalue", "--z", "1,1,1,1", "--json"]);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["region"], "Ω+");
    assert_eq!(v["c_value"], 4.0);
    assert!(v["difference"].as_f64().unwrap() < 1e-6);

    let v: Value = serde_json::from_str(&stdout(&ghzsep(&["cvalue", "--z", "-1,2,2,2", "--json"]))).unwrap();
    assert_eq!(v["region"], "Ω-0");
    assert!((v["c_value"].as_f64().unwrap() - 27f64.sqrt()).abs() < 1e-12);
    assert!(v["difference"].as_f64().unwrap() < 1e-6);

    let v: Value = serde_json::from_str(&stdout(&ghzsep(&["cvalue", "--z", "-1,3,3,3", "--json"]))).unwrap();
    assert_eq!(v["region"], "Ω-1");
    assert!((v["c_value"].as_f64().unwrap() - 8.0).abs() < 1e-12);

    let o = ghzsep(&["cvalue", "--z", "0,0,0,0"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("zero"), "{}", stderr(&o));
}

#[test]
fn sweep_writes_consistent_csv_and_svg() {
    let dir = tempfile::tempdir().unwrap();
    let csv = dir.path().join("pq.csv");
    let svg = dir.path().join("pq.svg");
    let o = ghzsep(&[
        "sweep-pq",
        "--grid",
        "201",
        "--out",
        csv.to_str().unwrap(),
        "--svg",
        svg.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));

    let text = std::fs::read_to_string(&csv).unwrap();
    assert!(text.starts_with("p,q,case,positive,ppt,separable,f_max\n"));
    let records = read_csv(text.as_bytes()).unwrap();
    assert_eq!(records.len(), 201 * 201);
    let at = |p: f64, q: f64| records.iter().find(|r| r.p == p && r.q == q).unwrap();
    assert!(at(1.0, -1.0).ppt && !at(1.0, -1.0).separable);
    assert!(at(0.8, 0.8).separable);

    // Re-serializing the parsed records reproduces the file byte for byte.
    let mut again = Vec::new();
    ghzsep_cli::sweep::write_csv(&records, &mut again).unwrap();
    assert_eq!(again, text.as_bytes());

    let cells = parse_cells(&std::fs::read_to_string(&svg).unwrap());
    assert_eq!(cells.len(), records.len());
    for (r, (p, q, class)) in records.iter().zip(&cells) {
        assert_eq!((r.p, r.q, cell_class(r)), (*p, *q, class.as_str()));
    }

    let o = ghzsep(&[
        "sweep-pq",
        "--grid",
        "5",
        "--out",
        dir.path().join("no/such/dir.csv").to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(2));
}

fn witness_file(state_json: &str) -> (Output, Option<WitnessFile>) {
    let dir = tempfile::tempdir().unwrap();
    let state = write_state(dir.path(), "s.json", state_json);
    let out = dir.path().join("w.json");
    let o = ghzsep(&[
        "witness",
        "--state",
        state.to_str().unwrap(),
        "--out",
        out.to_str().unwrap(),
    ]);
    let w = std::fs::read_to_string(&out)
        .ok()
        .map(|t| serde_json::from_str(&t).unwrap());
    (o, w)
}

#[test]
fn witness_examples() {
    let (o, w) =
        witness_file(r#"{"ghz_diagonal": {"a": [0.125, 0.125, 0.125, 0.125], "c": [0.125, 0.125, -0.125, 0.125]}}"#);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let w = w.unwrap();
    let expected = 2.0 * (0.125 - 1.0 / (4.0 * 2f64.sqrt()));
    assert!((w.pairing_value - expected).abs() < 1e-12);
    assert!(is_witness(&w.witness()));
    assert!((w.a_value - 1.0).abs() < 1e-10 && (w.b_value - 1.0).abs() < 1e-10);
    // The embedded x_state is itself a valid state file.
    let reparsed = StateFile::parse(&w.as_state_file().to_json()).unwrap();
    assert_eq!(
        XState::from(&w.x_state),
        match reparsed {
            StateFile::XState(f) => XState::from(&f),
            _ => unreachable!(),
        }
    );

    let (o, w) = witness_file(&kay_json(2.0));
    assert_eq!(o.status.code(), Some(0));
    assert!((w.unwrap().pairing_value - 2.0 * (2.0 - 2.0 * 2f64.sqrt())).abs() < 1e-10);

    let (o, w) = witness_file(r#"{"ghz_weights": [1,1,1,1,1,1,1,1]}"#);
    assert_eq!(o.status.code(), Some(1));
    assert!(w.is_none());
    assert!(stderr(&o).contains("separable: no witness exists"), "{}", stderr(&o));
}

#[test]
fn selftest_quick_and_fault_injection() {
    let start = Instant::now();
    let o = ghzsep(&["selftest", "--level", "quick"]);
    let elapsed = start.elapsed().as_secs_f64();
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert_eq!(stdout(&o).matches("[PASS]").count(), 11);
    assert!(elapsed < 10.0, "quick selftest took {elapsed:.1} s");

    let o = ghzsep(&["selftest", "--level", "quick", "--tolerance-scale", "0"]);
    assert_eq!(o.status.code(), Some(3));
    assert!(stdout(&o).contains("[FAIL]"));
}
