//! End-to-end runs of the `derham` binary against the fixture files.

use std::path::{Path, PathBuf};
use std::process::Command;

use derham::cohomology::coboundary;
use derham::complex::CanonicalComplex;
use derham::forms::{whitney, PolyForm};
use derham::sample;
use serde_json::{json, Value};

fn fixture(name: &str) -> String {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("fixtures")
        .join(name)
        .to_string_lossy()
        .into_owned()
}

fn run(args: &[&str]) -> (i32, Value) {
    let out = Command::new(env!("CARGO_BIN_EXE_derham"))
        .args(args)
        .output()
        .expect("binary runs");
    let report = serde_json::from_slice(&out.stdout).expect("stdout is a JSON report");
    (out.status.code().unwrap_or(-1), report)
}

fn path_str(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn torus_text_fixture_reports_betti_and_euler() {
    let (code, r) = run(&["--input", &fixture("torus.txt"), "betti"]);
    assert_eq!(code, 0);
    assert_eq!(r["exit_status"], "ok");
    assert_eq!(r["payload"]["betti"], json!([1, 2, 1]));
    assert_eq!(r["complex_summary"]["euler_characteristic"], 0);
    assert_eq!(r["complex_summary"]["is_oriented"], true);
}

#[test]
fn sphere_json_fixture_reports_betti_and_euler() {
    let (code, r) = run(&["--input", &fixture("sphere2.json"), "betti"]);
    assert_eq!(code, 0);
    assert_eq!(r["payload"]["betti"], json!([1, 0, 1]));
    assert_eq!(r["payload"]["euler_characteristic"], 2);
}

#[test]
fn larger_circle_fixture_matches_builtin() {
    let (_, from_file) = run(&["--input", &fixture("circle7.txt"), "betti"]);
    let (_, builtin) = run(&["--builtin", "circle:3", "betti"]);
    assert_eq!(from_file["payload"]["betti"], builtin["payload"]["betti"]);
}

#[test]
fn malformed_file_names_the_offending_line() {
    let (code, r) = run(&["--input", &fixture("malformed.txt"), "betti"]);
    assert_eq!(code, 2);
    assert_eq!(r["exit_status"], "error");
    let message = r["payload"]["error"].as_str().unwrap();
    assert!(message.contains("line 4"), "{message}");
}

#[test]
fn duplicate_simplex_is_rejected() {
    let (code, r) = run(&["--input", &fixture("duplicate.txt"), "betti"]);
    assert_eq!(code, 2);
    assert!(r["payload"]["error"]
        .as_str()
        .unwrap()
        .contains("duplicate"));
}

#[test]
fn missing_input_is_an_error_report() {
    let (code, r) = run(&["--input", "/nonexistent/complex.txt", "betti"]);
    assert_eq!(code, 2);
    assert_eq!(r["exit_status"], "error");
}

#[test]
fn stokes_check_passes_on_builtin() {
    let (code, r) = run(&[
        "--builtin",
        "sphere2",
        "stokes-check",
        "--trials",
        "10",
        "--seed",
        "3",
    ]);
    assert_eq!(code, 0, "{r}");
    assert_eq!(r["exit_status"], "ok");
}

#[test]
fn realized_form_reads_back_with_requested_periods() {
    let dir = tempfile::tempdir().unwrap();
    let form = dir.path().join("form.json");
    let (code, _) = run(&[
        "--builtin",
        "torus",
        "realize",
        "--dim",
        "1",
        "--periods",
        "-2,3/4",
        "--out-form",
        path_str(&form),
    ]);
    assert_eq!(code, 0);
    let (code, r) = run(&["--builtin", "torus", "periods", "--form", path_str(&form)]);
    assert_eq!(code, 0);
    assert_eq!(r["payload"]["periods"], json!(["-2/1", "3/4"]));
}

fn write_form(dir: &Path, name: &str, omega: &PolyForm) -> PathBuf {
    let path = dir.join(name);
    std::fs::write(
        &path,
        serde_json::to_string_pretty(&omega.to_file()).unwrap(),
    )
    .unwrap();
    path
}

#[test]
fn exact_form_gets_a_verified_primitive() {
    let k = CanonicalComplex::Torus.build().unwrap();
    let mut rng = sample::seeded(17);
    let omega = whitney(
        &k,
        &coboundary(&k, &sample::random_cochain(&k, 0, &mut rng)),
    );
    let dir = tempfile::tempdir().unwrap();
    let form = write_form(dir.path(), "exact.json", &omega);
    let out = dir.path().join("primitive.json");
    let (code, r) = run(&[
        "--builtin",
        "torus",
        "primitive",
        "--form",
        path_str(&form),
        "--out-form",
        path_str(&out),
    ]);
    assert_eq!(code, 0);
    assert_eq!(r["payload"]["exact"], true);
    assert_eq!(r["payload"]["derivative_matches_input"], true);

    let file = serde_json::from_str(&std::fs::read_to_string(&out).unwrap()).unwrap();
    let beta = PolyForm::from_file(&k, &file).unwrap();
    assert_eq!(beta.d(), omega);
}

#[test]
fn non_closed_form_is_a_violation() {
    let k = CanonicalComplex::Torus.build().unwrap();
    let omega = PolyForm::global_term(&k, derham::linalg::int(1), &[(0, 1)], &[1]);
    assert!(!omega.d().is_zero());
    let dir = tempfile::tempdir().unwrap();
    let form = write_form(dir.path(), "open.json", &omega);
    let (code, r) = run(&["--builtin", "torus", "periods", "--form", path_str(&form)]);
    assert_eq!(code, 1, "{r}");
    assert_eq!(r["exit_status"], "violation");
}

#[test]
fn torus_generators_pair_to_a_unit() {
    let dir = tempfile::tempdir().unwrap();
    let alpha = dir.path().join("alpha.json");
    let beta = dir.path().join("beta.json");
    for (periods, path) in [("1,0", &alpha), ("0,1", &beta)] {
        let (code, _) = run(&[
            "--builtin",
            "torus",
            "realize",
            "--dim",
            "1",
            "--periods",
            periods,
            "--out-form",
            path_str(path),
        ]);
        assert_eq!(code, 0);
    }
    let (code, r) = run(&[
        "--builtin",
        "torus",
        "ring-check",
        "--form",
        path_str(&alpha),
        "--form",
        path_str(&beta),
    ]);
    assert_eq!(code, 0);
    let payload = &r["payload"];
    assert_eq!(payload["cohomologous"], true);
    let pairing = &payload["top_pairing"];
    assert_eq!(pairing["agree"], true);
    let wedge = pairing["wedge"].as_str().unwrap();
    assert!(wedge == "1/1" || wedge == "-1/1", "{wedge}");
}

#[test]
fn text_rendering_shows_betti_table() {
    let out = Command::new(env!("CARGO_BIN_EXE_derham"))
        .args(["--builtin", "torus", "betti", "--text"])
        .output()
        .unwrap();
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("betti"));
    assert!(text.contains("  1  2"));
}
