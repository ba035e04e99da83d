use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_meanchaos"))
}

fn configs() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("configs")
}

fn run(config: &Path, out: &Path, extra: &[&str]) -> Output {
    bin()
        .arg("run")
        .arg(config)
        .arg("--out")
        .arg(out)
        .args(extra)
        .output()
        .unwrap()
}

fn write_config(dir: &Path, body: &str) -> PathBuf {
    let p = dir.join("config.json");
    fs::write(&p, body).unwrap();
    p
}

#[test]
fn list_is_stable() {
    let a = bin().arg("list").output().unwrap();
    let b = bin().arg("list").output().unwrap();
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    let text = String::from_utf8(a.stdout).unwrap();
    assert_eq!(text.lines().count(), 8);
}

#[test]
fn every_listed_kind_runs_with_its_config() {
    let list = String::from_utf8(bin().arg("list").output().unwrap().stdout).unwrap();
    let tmp = tempfile::tempdir().unwrap();
    for line in list.lines() {
        let kind = line.split_whitespace().next().unwrap();
        let config = configs().join(format!("{kind}.json"));
        assert!(config.exists(), "missing config for {kind}");
        let out = tmp.path().join(kind);
        let o = run(&config, &out, &[]);
        assert_eq!(
            o.status.code(),
            Some(0),
            "{kind}: {}",
            String::from_utf8_lossy(&o.stderr)
        );
        assert!(out.join("manifest.json").exists());
        assert!(out.join("summary.json").exists());
    }
}

#[test]
fn scrambled_run_writes_certificate_and_trace() {
    let tmp = tempfile::tempdir().unwrap();
    let o = run(
        &configs().join("scrambled_build_verify.json"),
        tmp.path(),
        &[],
    );
    assert_eq!(o.status.code(), Some(0));
    let cert: serde_json::Value =
        serde_json::from_str(&fs::read_to_string(tmp.path().join("certificate.json")).unwrap())
            .unwrap();
    assert_eq!(cert["phases"].as_array().unwrap().len(), 4);
    let trace = fs::read_to_string(tmp.path().join("trace.csv")).unwrap();
    assert_eq!(
        trace.lines().next().unwrap(),
        "n,max_average,min_average,err_bound"
    );
    // floats carry 17 significant digits
    let cell = trace.lines().nth(2).unwrap().split(',').nth(1).unwrap();
    assert_eq!(
        cell.split('e')
            .next()
            .unwrap()
            .replace('.', "")
            .trim_start_matches('-')
            .len(),
        17
    );
}

#[test]
fn reruns_are_byte_identical_across_worker_counts() {
    let tmp = tempfile::tempdir().unwrap();
    for name in ["tuple_scan", "fiber_constancy", "scrambled_build_verify"] {
        let config = configs().join(format!("{name}.json"));
        let a = tmp.path().join(format!("{name}-a"));
        let b = tmp.path().join(format!("{name}-b"));
        assert_eq!(run(&config, &a, &["--workers", "1"]).status.code(), Some(0));
        assert_eq!(run(&config, &b, &["--workers", "4"]).status.code(), Some(0));
        for entry in fs::read_dir(&a).unwrap() {
            let file = entry.unwrap().file_name();
            assert_eq!(
                fs::read(a.join(&file)).unwrap(),
                fs::read(b.join(&file)).unwrap(),
                "{name}/{file:?}"
            );
        }
    }
}

#[test]
fn negative_n_is_status_2() {
    let tmp = tempfile::tempdir().unwrap();
    let cfg = write_config(
        tmp.path(),
        r#"{"experiment": {"kind": "tuple_scan", "sequence": {"family": "naturals"}, "n": -10}}"#,
    );
    let o = run(&cfg, &tmp.path().join("out"), &[]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line"));
}

#[test]
fn unknown_field_is_status_2() {
    let tmp = tempfile::tempdir().unwrap();
    let cfg = write_config(
        tmp.path(),
        r#"{"experiment": {"kind": "tuple_scan", "sequence": {"family": "naturals"}, "n": 10, "nn": 3}}"#,
    );
    let o = run(&cfg, &tmp.path().join("out"), &[]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("nn"));
}

#[test]
fn failed_assertion_is_status_1() {
    let tmp = tempfile::tempdir().unwrap();
    let o = run(
        &configs().join("tuple_scan.json"),
        &tmp.path().join("out"),
        &[
            "--set",
            "experiment.min_average_floor=0.75",
            "--set",
            "experiment.n=500",
        ],
    );
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stdout).contains("FAIL min_average_floor"));
}

#[test]
fn overflow_is_status_3() {
    let tmp = tempfile::tempdir().unwrap();
    let o = run(
        &configs().join("lacunary_contrast.json"),
        &tmp.path().join("out"),
        &["--set", "experiment.terms=70"],
    );
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn seed_flag_overrides_config() {
    let tmp = tempfile::tempdir().unwrap();
    let out = tmp.path().join("out");
    let o = run(
        &configs().join("tuple_scan.json"),
        &out,
        &["--seed", "77", "--set", "experiment.n=2000"],
    );
    assert_eq!(o.status.code(), Some(0));
    let manifest: serde_json::Value =
        serde_json::from_str(&fs::read_to_string(out.join("manifest.json")).unwrap()).unwrap();
    assert_eq!(manifest["config"]["seed"], 77);
    assert_eq!(manifest["config"]["experiment"]["tuples"], 100);
    assert_eq!(manifest["version"], env!("CARGO_PKG_VERSION"));
}
