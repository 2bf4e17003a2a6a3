//! The driver binary: exit codes, summary lines, resumable and
//! thread-count-independent builds.

use std::path::Path;
use std::process::{Command, Output};

fn critatlas(root: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_critatlas"))
        .arg("--root")
        .arg(root)
        .args(args)
        .env("RUST_LOG", "warn")
        .output()
        .expect("driver runs")
}

fn summary(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).lines().last().unwrap_or("").to_string()
}

#[test]
fn usage_errors_exit_2() {
    let dir = tempfile::tempdir().unwrap();
    assert_eq!(critatlas(dir.path(), &["frobnicate"]).status.code(), Some(2));
    assert_eq!(critatlas(dir.path(), &["disk", "build", "--max", "x"]).status.code(), Some(2));
}

#[test]
fn selftest_passes() {
    let dir = tempfile::tempdir().unwrap();
    let o = critatlas(dir.path(), &["selftest"]);
    assert_eq!(o.status.code(), Some(0), "{}", summary(&o));
}

#[test]
fn build_to_13_reports_108() {
    let dir = tempfile::tempdir().unwrap();
    let o = critatlas(dir.path(), &["disk", "build", "--max", "13"]);
    let s = summary(&o);
    assert_eq!(o.status.code(), Some(0), "{s}");
    assert!(s.contains("K13=108") && s.ends_with("status=ok"), "{s}");
    let e = critatlas(dir.path(), &["export", "--family", "disk/K13", "--format", "json"]);
    assert_eq!(e.status.code(), Some(0));
    assert!(dir.path().join("export/disk/K13.json").is_file());
}

#[test]
fn cylinder_commands_need_k16() {
    let dir = tempfile::tempdir().unwrap();
    critatlas(dir.path(), &["disk", "build", "--max", "9"]);
    assert_eq!(critatlas(dir.path(), &["cyl", "base"]).status.code(), Some(2));
}

#[test]
fn output_is_independent_of_threads_and_resumption() {
    let manifest = |p: &Path| std::fs::read_to_string(p.join("MANIFEST")).unwrap();
    let one = tempfile::tempdir().unwrap();
    let two = tempfile::tempdir().unwrap();
    let resumed = tempfile::tempdir().unwrap();
    critatlas(one.path(), &["--threads", "1", "disk", "build", "--max", "12"]);
    critatlas(two.path(), &["--threads", "2", "disk", "build", "--max", "12"]);
    critatlas(resumed.path(), &["disk", "build", "--max", "10"]);
    critatlas(resumed.path(), &["disk", "build", "--max", "12"]);
    assert_eq!(manifest(one.path()), manifest(two.path()));
    assert_eq!(manifest(one.path()), manifest(resumed.path()));
}
