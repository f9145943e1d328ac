//! End-to-end tests of the `workbench` binary: commands, formats, exit
//! codes, and report determinism.

use std::process::{Command, Output};

fn workbench(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_workbench"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(output: &Output) -> String {
    String::from_utf8_lossy(&output.stdout).to_string()
}

fn code(output: &Output) -> i32 {
    output.status.code().expect("exit code")
}

#[test]
fn group_info_and_classes() {
    let out = workbench(&["group", "info"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert!(text.contains("order: 48"));
    assert!(text.contains("generators: i, w, d"));

    let out = workbench(&["group", "classes", "--group", "H"]);
    assert_eq!(code(&out), 0);
    let json: serde_json::Value = serde_json::from_str(&stdout(&out)).expect("valid JSON");
    assert_eq!(json["order"], 16);
    assert_eq!(json["classes"].as_array().unwrap().len(), 7);
}

#[test]
fn chartab_markdown_and_json() {
    let out = workbench(&["chartab", "--group", "G"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert!(text.contains("| 2+ |"));
    assert!(text.contains("i*sqrt2"));
    assert!(text.contains("| jd |") || text.contains(" jd |"));

    let out = workbench(&["chartab", "--group", "H", "--format", "json"]);
    assert_eq!(code(&out), 0);
    let json: serde_json::Value = serde_json::from_str(&stdout(&out)).expect("valid JSON");
    assert_eq!(json["irreps"].as_array().unwrap().len(), 7);

    let out = workbench(&["chartab", "--group", "Sym4"]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("Sym4"));
}

#[test]
fn decompose_examples_and_errors() {
    let out = workbench(&["decompose", "2+ * 2+"]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("1- + 3+"));

    let out = workbench(&["decompose", "Res[H](4_0)"]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("2b + 2c"));
    assert!(stdout(&out).contains("(in H)"));

    // Parse error: exit code 2 with a position.
    let out = workbench(&["decompose", "2+ *"]);
    assert_eq!(code(&out), 2);
    assert!(String::from_utf8_lossy(&out.stderr).contains("parse error"));

    // Unknown name: exit code 2 listing valid names.
    let out = workbench(&["decompose", "9+ * 2+"]);
    assert_eq!(code(&out), 2);
    assert!(String::from_utf8_lossy(&out.stderr).contains("4_0"));
}

#[test]
fn rep_dump() {
    let out = workbench(&["rep", "2_0", "--format", "json"]);
    assert_eq!(code(&out), 0);
    let json: serde_json::Value = serde_json::from_str(&stdout(&out)).expect("valid JSON");
    assert_eq!(json["dimension"], 2);
    assert_eq!(json["images"].as_array().unwrap().len(), 48);

    let out = workbench(&["rep", "9+"]);
    assert_eq!(code(&out), 2);
}

#[test]
fn branch_table() {
    let out = workbench(&["branch", "--sub", "H"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert!(text.contains("4_0  -> 2b + 2c"));
    assert!(text.contains("3+   -> 1c + 2a"));
}

#[test]
fn suite_exit_codes() {
    // A clean suite exits 0.
    let out = workbench(&["suite", "group"]);
    assert_eq!(code(&out), 0, "group suite should pass: {}", stdout(&out));

    // Unknown suite name is a usage error.
    let out = workbench(&["suite", "nonsense"]);
    assert_eq!(code(&out), 2);

    // The idempotents suite carries the one documented discrepancy between
    // the displayed spinor projector and the block idempotent, so the
    // verification exit code is 1.
    let out = workbench(&["suite", "idempotents"]);
    assert_eq!(code(&out), 1);
    let text = stdout(&out);
    let failing: Vec<&str> = text.lines().filter(|l| l.contains("| FAIL |")).collect();
    assert_eq!(failing.len(), 1, "exactly one failing check: {text}");
    assert!(failing[0].contains("idempotents/spinor_projector"));
}

#[test]
fn suite_json_and_out_file() {
    let out = workbench(&["suite", "dirac", "--format", "json"]);
    assert_eq!(code(&out), 0);
    let json: serde_json::Value = serde_json::from_str(&stdout(&out)).expect("valid JSON");
    assert_eq!(json["schema_version"], 1);
    assert!(json["checks"].as_array().unwrap().len() >= 4);

    let path = std::env::temp_dir().join("workbench_suite_dirac.json");
    let path_str = path.to_str().unwrap();
    let out = workbench(&["suite", "dirac", "--format", "json", "--out", path_str]);
    assert_eq!(code(&out), 0);
    let body = std::fs::read_to_string(&path).expect("file written");
    assert!(body.contains("dirac/squares"));
    std::fs::remove_file(&path).ok();
}

#[test]
fn reports_are_deterministic() {
    let first = workbench(&["suite", "branching", "--format", "json"]);
    let second = workbench(&["suite", "branching", "--format", "json"]);
    assert_eq!(first.stdout, second.stdout);
    assert_eq!(code(&first), 0);
}

#[test]
fn prime_option() {
    // 97 ≡ 1 (mod 24) works and yields the same table.
    let default = workbench(&["chartab", "--group", "G"]);
    let alt = workbench(&["--prime", "97", "chartab", "--group", "G"]);
    assert_eq!(code(&alt), 0);
    assert_eq!(default.stdout, alt.stdout);

    // 89 is prime but 89 ≢ 1 (mod 24): configuration error.
    let bad = workbench(&["--prime", "89", "chartab", "--group", "G"]);
    assert_eq!(code(&bad), 2);
    assert!(String::from_utf8_lossy(&bad.stderr).contains("unsuitable"));
}

#[test]
fn closure_cap_option() {
    let out = workbench(&["--closure-cap", "10", "hypercube"]);
    assert_eq!(code(&out), 2);
    assert!(String::from_utf8_lossy(&out.stderr).contains("cap"));
}

#[test]
fn usage_errors() {
    let out = workbench(&[]);
    assert_eq!(code(&out), 2);
    let out = workbench(&["frobnicate"]);
    assert_eq!(code(&out), 2);
    let out = workbench(&["--format", "yaml", "suite", "group"]);
    assert_eq!(code(&out), 2);
}
