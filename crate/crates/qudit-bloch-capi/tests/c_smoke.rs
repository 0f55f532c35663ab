//! Compiles and runs the C example against the generated header and the
//! freshly built static library, proving the ABI end to end.

use std::path::PathBuf;
use std::process::Command;

fn workspace_target_dir() -> PathBuf {
    // tests run from the crate root; the workspace target dir sits two up.
    let manifest = PathBuf::from(env!("CARGO_MANIFEST_DIR"));
    manifest.join("../../target").canonicalize().unwrap()
}

#[test]
fn c_example_compiles_links_and_runs() {
    let manifest = PathBuf::from(env!("CARGO_MANIFEST_DIR"));
    let include_dir = manifest.join("include");
    let source = manifest.join("examples/witness_demo.c");

    // `cargo test` only links the rlib; the staticlib artifact needs an
    // explicit library build. The outer cargo has released its build lock
    // by the time tests execute.
    let cargo = std::env::var("CARGO").unwrap_or_else(|_| "cargo".into());
    let mut build = Command::new(cargo);
    build.args(["build", "-p", "qudit-bloch-capi", "--lib"]);
    if !cfg!(debug_assertions) {
        build.arg("--release");
    }
    let build = build.output().expect("cargo build runs");
    assert!(
        build.status.success(),
        "library build failed:\n{}",
        String::from_utf8_lossy(&build.stderr)
    );

    let profile_dir = workspace_target_dir().join(if cfg!(debug_assertions) {
        "debug"
    } else {
        "release"
    });
    let staticlib = profile_dir.join("libqudit_bloch_capi.a");
    assert!(
        staticlib.exists(),
        "static library not found at {staticlib:?}"
    );

    let out_dir = tempfile::tempdir().unwrap();
    let binary = out_dir.path().join("witness_demo");
    let compile = Command::new("cc")
        .arg(&source)
        .arg("-I")
        .arg(&include_dir)
        .arg(&staticlib)
        .args(["-lpthread", "-ldl", "-lm"])
        .arg("-o")
        .arg(&binary)
        .output()
        .expect("cc is available");
    assert!(
        compile.status.success(),
        "compilation failed:\n{}",
        String::from_utf8_lossy(&compile.stderr)
    );

    let run = Command::new(&binary).output().expect("demo runs");
    assert!(run.status.success());
    let stdout = String::from_utf8_lossy(&run.stdout);
    assert!(stdout.contains("-0.707106781"), "{stdout}");
    assert!(stdout.contains("detected = true"), "{stdout}");
}
