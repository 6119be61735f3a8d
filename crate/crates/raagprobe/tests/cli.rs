//! End-to-end runs of the binary: outputs, round trips and exit codes.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use raagprobe::format::parse_graph;

fn bin() -> Command {
    let mut c = Command::new(env!("CARGO_BIN_EXE_raagprobe"));
    c.env_remove("RAAGPROBE_WORKERS");
    c
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exited normally")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn write(dir: &Path, name: &str, text: &str) -> PathBuf {
    let p = dir.join(name);
    fs::write(&p, text).unwrap();
    p
}

fn bundled_config() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("configs/window_sweep.json")
}

#[test]
fn analyze_fixtures() {
    let dir = tempfile::tempdir().unwrap();
    let c5 = write(dir.path(), "c5.g", "# C5\nn 5\ne 0 1\ne 1 2\ne 2 3\ne 3 4\ne 4 0\n");
    let o = run(&["analyze", c5.to_str().unwrap()]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("verdict Finite"));

    let p5 = write(dir.path(), "p5.g", "n 5\ne 0 1\ne 1 2\ne 2 3\ne 3 4\n");
    let o = run(&["analyze", p5.to_str().unwrap(), "--format", "json"]);
    assert_eq!(code(&o), 0);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["verdict"]["label"], "InfiniteByBoth");
    assert_eq!(v["counts"]["star_cut_vertices"], 1);
    assert_eq!(v["config"]["max_witnesses"], 100);
}

#[test]
fn analyze_caps_witnesses() {
    let dir = tempfile::tempdir().unwrap();
    let mut text = String::from("n 6\n");
    for u in 0..6 {
        for v in u + 1..6 {
            text += &format!("e {u} {v}\n");
        }
    }
    let k6 = write(dir.path(), "k6.g", &text);
    let o = run(&["analyze", k6.to_str().unwrap(), "--format", "json", "--max-witnesses", "2"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["counts"]["adjacent_domination_pairs"], 30);
    assert_eq!(v["witnesses"]["adjacent_pairs"].as_array().unwrap().len(), 2);
    assert_eq!(v["witnesses"]["truncated"], true);
}

#[test]
fn parse_errors_exit_2_with_line() {
    let dir = tempfile::tempdir().unwrap();
    let bad = write(dir.path(), "bad.g", "n 3\ne 0 1\ne 0\n");
    let o = run(&["analyze", bad.to_str().unwrap()]);
    assert_eq!(code(&o), 2);
    let err = String::from_utf8(o.stderr).unwrap();
    assert!(err.contains("line 3"), "{err}");

    let missing = dir.path().join("nope.g");
    assert_eq!(code(&run(&["analyze", missing.to_str().unwrap()])), 2);
    let binary = dir.path().join("bin.g");
    fs::write(&binary, [0xff, 0xfe, 0x00]).unwrap();
    assert_eq!(code(&run(&["analyze", binary.to_str().unwrap()])), 2);
    let p4 = write(dir.path(), "p4.g", "n 4\ne 0 1\ne 1 2\ne 2 3\n");
    assert_eq!(code(&run(&["analyze", p4.to_str().unwrap(), "--format", "csv"])), 2);
}

#[test]
fn bad_flags_exit_2() {
    assert_eq!(code(&run(&[])), 2);
    assert_eq!(code(&run(&["frobnicate"])), 2);
    assert_eq!(code(&run(&["expect", "--n", "4"])), 2);
    assert_eq!(code(&run(&["expect", "--n", "four", "--p", "0.5"])), 2);
    assert_eq!(code(&run(&["fuzz", "--n", "5"])), 2);
    assert_eq!(code(&run(&["--version"])), 0);
    assert_eq!(code(&run(&["fuzz", "--n", "9", "--exhaustive"])), 2);
    assert_eq!(code(&run(&["fuzz", "--n", "9", "--p", "1.5"])), 2);
    assert_eq!(code(&run(&["fuzz", "--n", "9", "--p", "0.5", "--workers", "0"])), 2);
}

#[test]
fn sample_then_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("graphs");
    let o = run(&["sample", "--n", "12", "--p", "0.3", "--seed", "7", "--count", "3", "--out-dir", out.to_str().unwrap()]);
    assert_eq!(code(&o), 0);
    for i in 0..3 {
        let path = out.join(format!("trial_{i}.g"));
        let text = fs::read_to_string(&path).unwrap();
        let g = parse_graph(&text).unwrap();
        assert_eq!(g.n(), 12);
        // parse ∘ write ∘ parse = parse
        let again = parse_graph(&raagprobe::format::write_graph(&g)).unwrap();
        assert_eq!(g, again);
    }
    // same seed, same files
    let out2 = dir.path().join("again");
    run(&["sample", "--n", "12", "--p", "0.3", "--seed", "7", "--count", "3", "--out-dir", out2.to_str().unwrap()]);
    assert_eq!(fs::read(out.join("trial_2.g")).unwrap(), fs::read(out2.join("trial_2.g")).unwrap());
    assert_eq!(code(&run(&["sample", "--n", "5", "--p", "2", "--out-dir", out.to_str().unwrap()])), 2);
}

#[test]
fn expect_table() {
    let o = run(&["expect", "--n", "4", "--p", "0.5", "--format", "csv"]);
    assert_eq!(code(&o), 0);
    let text = stdout(&o);
    let row = text.lines().nth(2).unwrap();
    let e: f64 = row.split(',').nth(3).unwrap().parse().unwrap();
    assert!((e - 3.375).abs() < 1e-12);

    let o = run(&["expect", "--n", "1000", "--p", "0.5"]);
    assert!(stdout(&o).contains("Window"));
    assert!(stdout(&o).contains("omega=3"));
    assert_eq!(code(&run(&["expect", "--n", "2", "--p", "0.5", "--k", "2"])), 2);
    assert_eq!(code(&run(&["expect", "--n", "4", "--p", "-0.5"])), 2);
    let o = run(&["expect", "--n", "20", "--p", "0.3", "--k", "1-3", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v.as_array().unwrap().len(), 3);
}

#[test]
fn audit_and_fault_injection() {
    let o = run(&["audit"]);
    assert_eq!(code(&o), 0, "{}", stdout(&o));
    assert!(stdout(&o).contains("violations 0"));
    let o = run(&["audit", "--n-max", "20", "--bound-scale", "0.5"]);
    assert_eq!(code(&o), 1);
    assert!(stdout(&o).contains("VIOLATION"));
    assert_eq!(code(&run(&["audit", "--n-max", "20000"])), 2);
}

#[test]
fn fuzz_exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    assert_eq!(code(&run(&["fuzz", "--n", "5", "--exhaustive"])), 0);
    assert_eq!(code(&run(&["fuzz", "--n", "15", "--p", "0.2", "--trials", "200"])), 0);
    let ce = dir.path().join("ce.g");
    let o = run(&["fuzz", "--n", "8", "--p", "0.3", "--trials", "50", "--inject-fault", "--out", ce.to_str().unwrap()]);
    assert_eq!(code(&o), 1);
    let g = parse_graph(&fs::read_to_string(&ce).unwrap()).unwrap();
    assert_eq!(g.n(), 8);
}

#[test]
fn sweep_output_and_errors() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = write(
        dir.path(),
        "s.json",
        r#"{"n_list": [10, 20], "probability": {"explicit": [0.2, 0.5]}, "trials": 50, "seed": 3,
            "statistics": ["Diamonds", "ProperStarKSep(2)", "OutFinite"]}"#,
    );
    let csv1 = dir.path().join("a.csv");
    let csv2 = dir.path().join("b.csv");
    let gp = dir.path().join("plot.gp");
    let o = run(&["sweep", cfg.to_str().unwrap(), "--out", csv1.to_str().unwrap(), "--workers", "1", "--gnuplot-script", gp.to_str().unwrap()]);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    let o = bin()
        .args(["sweep", cfg.to_str().unwrap(), "--out", csv2.to_str().unwrap()])
        .env("RAAGPROBE_WORKERS", "3")
        .output()
        .unwrap();
    assert_eq!(code(&o), 0);
    let a = fs::read_to_string(&csv1).unwrap();
    assert_eq!(a, fs::read_to_string(&csv2).unwrap());
    let data: Vec<&str> = a.lines().filter(|l| !l.starts_with('#')).collect();
    assert_eq!(data.len(), 1 + 2 * 2 * 3);
    assert!(a.starts_with("# raagprobe "));
    assert!(a.contains("# config_sha256 "));
    assert!(fs::read_to_string(&gp).unwrap().contains("plot "));

    let unknown = write(
        dir.path(),
        "u.json",
        r#"{"n_list": [10], "probability": {"explicit": [0.2]}, "trials": 5, "seed": 3,
            "statistics": ["Diamonds"], "colour": "blue"}"#,
    );
    assert_eq!(code(&run(&["sweep", unknown.to_str().unwrap()])), 2);
    let bad_p = write(
        dir.path(),
        "p.json",
        r#"{"n_list": [10], "probability": {"explicit": [1.2]}, "trials": 5, "seed": 3, "statistics": ["Diamonds"]}"#,
    );
    assert_eq!(code(&run(&["sweep", bad_p.to_str().unwrap()])), 2);
    assert_eq!(code(&run(&["sweep", dir.path().join("none.json").to_str().unwrap()])), 2);
}

#[test]
fn bundled_config_has_sixteen_cells() {
    let text = fs::read_to_string(bundled_config()).unwrap();
    let cfg = raagprobe::experiments::SweepConfig::from_json(&text).unwrap();
    assert_eq!(cfg.points().unwrap().len() * cfg.statistics.len(), 16);
    assert_eq!(cfg.seed, 42);
}
