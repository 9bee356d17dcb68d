//! End-to-end runs of the compiled binary: exit codes, report determinism,
//! and the documented rejection of unavailable configurations.

use std::process::{Command, Output};

fn scatkit(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_scatkit"))
        .args(args)
        .output()
        .expect("binary runs")
}

#[test]
fn every_case_passes_in_both_available_modes() {
    for args in [
        &["case", "a2"][..],
        &["case", "b2"],
        &["case", "g2"],
        &["case", "a2", "--coeffs", "ghk"],
        &["case", "b2", "--coeffs", "ghk"],
    ] {
        let out = scatkit(args);
        assert_eq!(
            out.status.code(),
            Some(0),
            "{args:?}: {}",
            String::from_utf8_lossy(&out.stderr)
        );
        let text = String::from_utf8(out.stdout).unwrap();
        assert!(text.starts_with("{\n  \"schema\": \"scatkit/1\""));
        assert!(text.contains("\"all_pass\": true"));
    }
}

#[test]
fn reports_are_byte_identical_across_runs() {
    let first = scatkit(&["case", "b2", "--coeffs", "ghk"]);
    let second = scatkit(&["case", "b2", "--coeffs", "ghk"]);
    assert_eq!(first.stdout, second.stdout);
    let svg1 = scatkit(&["svg", "g2"]);
    let svg2 = scatkit(&["svg", "g2"]);
    assert_eq!(svg1.stdout, svg2.stdout);
}

#[test]
fn unavailable_coefficients_are_rejected_with_an_explanation() {
    let out = scatkit(&["case", "g2", "--coeffs", "ghk"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(out.stdout.is_empty());
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("not tabulated"), "stderr: {err}");
}

#[test]
fn malformed_flags_exit_nonzero() {
    assert_ne!(scatkit(&["case", "e8"]).status.code(), Some(0));
    assert_ne!(
        scatkit(&["case", "a2", "--coeffs", "fancy"]).status.code(),
        Some(0)
    );
    assert_ne!(scatkit(&["check", "nonsense"]).status.code(), Some(0));
}

#[test]
fn focused_checks_cover_all_suites() {
    for which in [
        "pentagon",
        "focus-focus",
        "consistency",
        "theta",
        "angles",
        "affine",
        "trop",
    ] {
        let out = scatkit(&["check", which]);
        assert_eq!(out.status.code(), Some(0), "check {which}");
        let text = String::from_utf8(out.stdout).unwrap();
        assert!(text.contains("\"all_pass\": true"), "check {which}");
    }
}

#[test]
fn bghk_reports_relations_for_custom_self_intersections() {
    let out = scatkit(&["bghk", "--selfints=-1,-1,-1,-1,-1"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("X5 X2 = z^[D1] (X1 + z^[E1])"));
    let out = scatkit(&["bghk", "--selfints=-1,-3,-1,-3"]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn svg_draws_rays_and_cuts() {
    let out = scatkit(&["svg", "a2"]);
    assert_eq!(out.status.code(), Some(0));
    let svg = String::from_utf8(out.stdout).unwrap();
    assert!(svg.starts_with("<svg"));
    assert_eq!(svg.matches("<line").count(), 6); // five rays and the cut
    let out = scatkit(&["svg", "b2", "--cluster-cuts"]);
    let svg = String::from_utf8(out.stdout).unwrap();
    assert_eq!(svg.matches("cut,").count(), 2);
}

#[test]
fn out_flag_writes_the_document_to_a_file() {
    let dir = std::env::temp_dir().join("scatkit-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("a2.json");
    let out = scatkit(&["case", "a2", "--out", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let summary = String::from_utf8(out.stdout).unwrap();
    assert!(summary.contains("all checks passed"));
    let doc = std::fs::read_to_string(&path).unwrap();
    assert!(doc.contains("\"schema\": \"scatkit/1\""));
    std::fs::remove_dir_all(&dir).ok();
}
