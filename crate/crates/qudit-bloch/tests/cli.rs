//! End-to-end checks of the command-line surface and its exit-code contract.

use std::path::Path;
use std::process::{Command, Output};

use qudit_bloch::io::{BasisFile, BlochFile, MatrixFile};
use qudit_bloch::states::bell_state;
use qudit_bloch::{Complex64, ComplexMatrix};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qudit-bloch"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

fn stderr(out: &Output) -> String {
    String::from_utf8_lossy(&out.stderr).into_owned()
}

fn write_matrix(path: &Path, m: &ComplexMatrix) {
    MatrixFile::from_matrix(m).write(path).unwrap();
}

#[test]
fn basis_reports_count_and_norm_constant() {
    let out = run(&["basis", "--family", "ggm", "--dim", "3"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("8 elements"), "{text}");
    assert!(text.contains("N = 2"), "{text}");

    let out = run(&["basis", "--family", "wob", "--dim", "3"]);
    let text = stdout(&out);
    assert!(text.contains("9 elements"), "{text}");
    assert!(text.contains("N = 3"), "{text}");
}

#[test]
fn basis_writes_archive() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("pob3.json");
    let out = run(&[
        "basis",
        "--family",
        "pob",
        "--dim",
        "3",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let archive = BasisFile::read(&path).unwrap();
    assert_eq!(archive.family, "pob");
    assert_eq!(archive.elements.len(), 9);
    assert_eq!(archive.norm_constant, 1.0);
    // First element is T_00 = 1/√3.
    let t00 = archive.elements[0].matrix.to_matrix().unwrap();
    let want = ComplexMatrix::identity(3).scale_re(1.0 / 3f64.sqrt());
    assert!(t00.max_abs_diff(&want).unwrap() < 1e-12);
}

#[test]
fn basis_rejects_bad_dimension_with_usage_exit() {
    let out = run(&["basis", "--family", "pob", "--dim", "0"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("dimension"));
    let out = run(&["basis", "--family", "pob", "--dim", "64"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn unknown_flags_are_usage_errors() {
    let out = run(&["basis", "--familly", "ggm", "--dim", "3"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn decompose_maximally_mixed_has_zero_radius() {
    let dir = tempfile::tempdir().unwrap();
    let input = dir.path().join("mixed.json");
    let output = dir.path().join("bloch.json");
    write_matrix(&input, &ComplexMatrix::identity(3).scale_re(1.0 / 3.0));
    let out = run(&[
        "decompose",
        "--in",
        input.to_str().unwrap(),
        "--family",
        "ggm",
        "--out",
        output.to_str().unwrap(),
    ]);
    assert!(out.status.success(), "{}", stderr(&out));
    assert!(stdout(&out).contains("radius 0.000000000"));

    let bloch = BlochFile::read(&output).unwrap();
    assert_eq!(bloch.components.len(), 8);
    assert!(bloch
        .components
        .iter()
        .all(|c| c.re.abs() < 1e-14 && c.im.abs() < 1e-14));
}

#[test]
fn decompose_bipartite_bell_in_wob_shows_quarter_coefficients() {
    let dir = tempfile::tempdir().unwrap();
    let input = dir.path().join("bell.json");
    write_matrix(&input, bell_state(2).unwrap().matrix());
    let out = run(&[
        "decompose",
        "--in",
        input.to_str().unwrap(),
        "--family",
        "wob",
        "--bipartite",
        "--format",
        "json-lines",
    ]);
    assert!(out.status.success(), "{}", stderr(&out));
    let record: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(record["dim"], 2);
    let c: Vec<[f64; 2]> = serde_json::from_value(record["c_matrix"].clone()).unwrap();
    // d=2: the pairs (l,m) ↔ (−l mod 2, m) are the diagonal; all carry 1/4.
    let labels: Vec<String> = serde_json::from_value(record["labels"].clone()).unwrap();
    assert_eq!(labels, vec!["0,1", "1,0", "1,1"]);
    for i in 0..3 {
        for j in 0..3 {
            let [re, im] = c[i * 3 + j];
            let want = if i == j { 0.25 } else { 0.0 };
            assert!((re - want).abs() < 1e-12 && im.abs() < 1e-12, "c[{i}][{j}]");
        }
    }
}

#[test]
fn decompose_rejects_non_hermitian_input_naming_the_invariant() {
    let dir = tempfile::tempdir().unwrap();
    let input = dir.path().join("bad.json");
    write_matrix(
        &input,
        &ComplexMatrix::from_vec(
            2,
            2,
            vec![
                Complex64::new(0.5, 0.0),
                Complex64::new(0.3, 0.0),
                Complex64::ZERO,
                Complex64::new(0.5, 0.0),
            ],
        )
        .unwrap(),
    );
    let out = run(&[
        "decompose",
        "--in",
        input.to_str().unwrap(),
        "--family",
        "ggm",
    ]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("Hermitian"), "{}", stderr(&out));
}

#[test]
fn decompose_then_reconstruct_round_trips_through_files() {
    let dir = tempfile::tempdir().unwrap();
    let input = dir.path().join("rho.json");
    let bloch_path = dir.path().join("bloch.json");
    let back_path = dir.path().join("back.json");
    let rho = qudit_bloch::states::random_density_matrix(3, 77).unwrap();
    write_matrix(&input, rho.matrix());

    for family in ["ggm", "pob", "wob"] {
        let out = run(&[
            "decompose",
            "--in",
            input.to_str().unwrap(),
            "--family",
            family,
            "--out",
            bloch_path.to_str().unwrap(),
        ]);
        assert!(out.status.success(), "{}", stderr(&out));
        let out = run(&[
            "reconstruct",
            "--in",
            bloch_path.to_str().unwrap(),
            "--out",
            back_path.to_str().unwrap(),
        ]);
        assert!(out.status.success(), "{}", stderr(&out));
        assert!(stdout(&out).contains("valid state"));
        let back = MatrixFile::read(&back_path).unwrap().to_matrix().unwrap();
        assert!(back.max_abs_diff(rho.matrix()).unwrap() < 1e-9, "{family}");
    }
}

#[test]
fn witness_iso_prints_measure_and_spin1_rows() {
    let out = run(&[
        "witness", "iso", "--dim", "3", "--alpha", "1.0", "--samples", "500", "--seed", "5",
    ]);
    assert!(out.status.success(), "{}", stderr(&out));
    let text = stdout(&out);
    assert!(text.contains("0.7071068"), "{text}");
    assert!(text.contains("detected           true"), "{text}");
    // d=3 adds the spin-1 measurement rows.
    assert!(text.contains("Sx (x) Sx"), "{text}");
    assert!(text.contains("assembled ⟨Λ⟩"), "{text}");
}

#[test]
fn witness_iso_rejects_separable_alpha_with_interval_message() {
    let out = run(&["witness", "iso", "--dim", "3", "--alpha", "0.2"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("0.25"), "{}", stderr(&out));
}

#[test]
fn witness_guess_rejects_the_maximally_mixed_guess() {
    let dir = tempfile::tempdir().unwrap();
    let guess = dir.path().join("mixed.json");
    let target = dir.path().join("bell2.json");
    write_matrix(&guess, &ComplexMatrix::identity(4).scale_re(0.25));
    write_matrix(&target, bell_state(2).unwrap().matrix());
    let out = run(&[
        "witness",
        "guess",
        "--guess",
        guess.to_str().unwrap(),
        "--target",
        target.to_str().unwrap(),
        "--samples",
        "10000",
        "--seed",
        "7",
    ]);
    assert!(out.status.success(), "{}", stderr(&out));
    assert!(stdout(&out).contains("guess rejected"), "{}", stdout(&out));
}

#[test]
fn witness_guess_accepts_the_true_nearest_state() {
    let dir = tempfile::tempdir().unwrap();
    let guess = dir.path().join("rho0.json");
    let target = dir.path().join("bell3.json");
    write_matrix(
        &guess,
        qudit_bloch::witness::nearest_separable_iso(3).unwrap().matrix(),
    );
    write_matrix(&target, bell_state(3).unwrap().matrix());
    let out = run(&[
        "witness",
        "guess",
        "--guess",
        guess.to_str().unwrap(),
        "--target",
        target.to_str().unwrap(),
        "--samples",
        "2000",
        "--seed",
        "11",
    ]);
    assert!(out.status.success(), "{}", stderr(&out));
    assert!(stdout(&out).contains("guess accepted"), "{}", stdout(&out));
}

#[test]
fn spin1_report_runs_on_two_qutrit_state() {
    let dir = tempfile::tempdir().unwrap();
    let input = dir.path().join("bell3.json");
    write_matrix(&input, bell_state(3).unwrap().matrix());
    let out = run(&[
        "spin1-report",
        "--in",
        input.to_str().unwrap(),
        "--format",
        "json-lines",
    ]);
    assert!(out.status.success(), "{}", stderr(&out));
    let text = stdout(&out);
    let last = text.lines().last().unwrap();
    let summary: serde_json::Value = serde_json::from_str(last).unwrap();
    assert_eq!(summary["record"], "spin1-summary");
    let lambda = summary["lambda_expectation"].as_f64().unwrap();
    assert!((lambda - 16.0 / 3.0).abs() < 1e-9);

    // Wrong dimension is a validation failure.
    let bad = dir.path().join("mixed4.json");
    write_matrix(&bad, &ComplexMatrix::identity(4).scale_re(0.25));
    let out = run(&["spin1-report", "--in", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn missing_input_file_is_a_validation_failure() {
    let out = run(&["decompose", "--in", "/nonexistent.json", "--family", "ggm"]);
    assert_eq!(out.status.code(), Some(2));
}
