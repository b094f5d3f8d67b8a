use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use tempfile::TempDir;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_sz8-verify"))
}

fn run_in(dir: &Path, args: &[&str]) -> Output {
    bin().current_dir(dir).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn constant(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../core/src/constants").join(name)
}

#[test]
fn verify_7a_writes_certificate_and_exits_zero() {
    let tmp = TempDir::new().unwrap();
    let o = run_in(tmp.path(), &["verify", "7A"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let out = stdout(&o);
    assert!(out.starts_with("7A\tverified\tsha256:"), "{out}");
    assert!(out.contains("summary\tverified=1 failed=0 skipped-missing-data=0"));
    let cert = fs::read_to_string(tmp.path().join("certificates/7A.cert")).unwrap();
    assert!(cert.contains("  - PASS every faithful 24-dim representation has a nonzero x-fixed vector"));
    assert!(cert.lines().last().unwrap().starts_with("digest: sha256:"));
}

#[test]
fn verify_in_co1_records_orbit_sizes() {
    let tmp = TempDir::new().unwrap();
    let o = run_in(tmp.path(), &["verify", "inCo1", "--out-dir", "certs"]);
    let cert = fs::read_to_string(tmp.path().join("certs/inCo1.cert")).unwrap();
    assert!(cert.contains("  - PASS orbit sizes are 7, 24, 42"));
    let failed = cert.contains("verdict: failed");
    assert_eq!(o.status.code(), Some(if failed { 1 } else { 0 }));
}

#[test]
fn not22a_without_dataset_is_skipped() {
    let tmp = TempDir::new().unwrap();
    let o = run_in(tmp.path(), &["verify", "not22a", "--data-dir", "."]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("not22a\tskipped-missing-data\t"));
    assert!(stderr(&o).contains("not22a.perm not found"));
}

#[test]
fn not22a_with_wrong_dataset_fails_and_records_its_hash() {
    let tmp = TempDir::new().unwrap();
    fs::write(tmp.path().join("not22a.perm"), "3 1\n2 3 1\n").unwrap();
    let o = run_in(tmp.path(), &["verify", "not22a", "--data-dir", "."]);
    assert_eq!(o.status.code(), Some(1));
    let cert = fs::read_to_string(tmp.path().join("certificates/not22a.cert")).unwrap();
    assert!(cert.contains("  not22a.perm: sha256:"));
    assert!(cert.contains("  - FAIL dataset degree is 266560"));
}

#[test]
fn unknown_step_and_zero_jobs_are_usage_errors() {
    let tmp = TempDir::new().unwrap();
    let o = run_in(tmp.path(), &["verify", "nosuchstep"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stdout(&o).is_empty());
    assert!(stderr(&o).contains("unknown step id"));
    assert_eq!(run_in(tmp.path(), &["verify", "7A", "--jobs", "0"]).status.code(), Some(2));
    assert_eq!(run_in(tmp.path(), &["frobnicate"]).status.code(), Some(2));
}

#[test]
fn data_check_bundled_constants_match_lockfile() {
    let tmp = TempDir::new().unwrap();
    for (file, name) in [("golay.txt", "golay"), ("m24.perm", "m24"), ("a7xl3.perm", "a7xl3")] {
        let p = constant(file);
        let o = run_in(tmp.path(), &["data", "check", p.to_str().unwrap()]);
        assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
        assert!(stdout(&o).contains(&format!("lock: {name}\n")), "{}", stdout(&o));
        assert!(stderr(&o).is_empty());
    }
}

#[test]
fn data_check_foreign_and_truncated_files() {
    let tmp = TempDir::new().unwrap();
    fs::write(tmp.path().join("s3.perm"), "3 2\n2 3 1\n2 1 3\n").unwrap();
    let o = run_in(tmp.path(), &["data", "check", "s3.perm"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("format: perm degree=3 generators=2\n"));
    assert!(stdout(&o).contains("lock: unrecognized\n"));
    assert!(stderr(&o).contains("unrecognized hash"));

    fs::write(tmp.path().join("cut.perm"), "3 2\n2 3 1\n").unwrap();
    let o = run_in(tmp.path(), &["data", "check", "cut.perm"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stdout(&o).is_empty());

    let o = run_in(tmp.path(), &["data", "check", "missing.perm"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn data_hash_is_sha256() {
    let tmp = TempDir::new().unwrap();
    fs::write(tmp.path().join("x"), "abc").unwrap();
    let o = run_in(tmp.path(), &["data", "hash", "x"]);
    assert_eq!(stdout(&o), "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad\n");
}

#[test]
fn report_and_certificates_are_stable_across_job_counts() {
    let tmp = TempDir::new().unwrap();
    let ids = ["7A", "case2", "notinN23", "not22a"];
    let mut a = vec!["verify"];
    a.extend(ids);
    a.extend(["--out-dir", "one", "--emit-report", "report.txt"]);
    let o1 = run_in(tmp.path(), &a);
    let mut b = vec!["verify"];
    b.extend(ids);
    b.extend(["--out-dir", "four", "--jobs", "4"]);
    let o2 = run_in(tmp.path(), &b);
    assert_eq!(stdout(&o1), stdout(&o2));
    for id in ids {
        let x = fs::read(tmp.path().join(format!("one/{id}.cert"))).unwrap();
        let y = fs::read(tmp.path().join(format!("four/{id}.cert"))).unwrap();
        assert_eq!(x, y, "{id}");
    }
    let report = fs::read_to_string(tmp.path().join("report.txt")).unwrap();
    assert!(report.starts_with("report: sz8-verify\nsummary: "));
    assert!(report.contains("  - co1-7sq-maximals: "));
    assert!(report.contains("wall_ms: "));
}
