use std::process::{Command, Output};

fn skabelund(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_skabelund"))
        .args(args)
        .env_remove("SKABELUND_MAX_S_SUZUKI")
        .env_remove("SKABELUND_MAX_S_REE")
        .env_remove("SKABELUND_MAX_ELEMENTS")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn genus_single_descriptor() {
    let o = skabelund(&[
        "genus",
        "--family",
        "suzuki",
        "--s",
        "1",
        "--descriptor",
        "sigma-cm:1,5,1",
    ]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert!(text.contains("genus      38"), "{text}");
    assert!(text.contains("delta      20"));

    let o = skabelund(&[
        "genus",
        "--family",
        "ree",
        "--s",
        "1",
        "--descriptor",
        "n2-nonskew:56,1",
    ]);
    assert!(stdout(&o).contains("genus      4393"));
}

#[test]
fn genus_rejects_bad_input() {
    let o = skabelund(&[
        "genus",
        "--family",
        "ree",
        "--s",
        "1",
        "--descriptor",
        "n2-skew-full:1,1",
    ]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("7 does not divide"));
    let o = skabelund(&[
        "genus",
        "--family",
        "suzuki",
        "--s",
        "1",
        "--descriptor",
        "sigma-cm:1,5",
    ]);
    assert_eq!(o.status.code(), Some(2));
    let o = skabelund(&[
        "genus",
        "--family",
        "suzuki",
        "--s",
        "9",
        "--descriptor",
        "sigma-cm:1,1,0",
    ]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn spectrum_csv_to_file_is_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.csv");
    let b = dir.path().join("b.csv");
    for path in [&a, &b] {
        let o = skabelund(&[
            "spectrum",
            "--family",
            "ree",
            "--s",
            "2",
            "--format",
            "csv",
            "--out",
            path.to_str().unwrap(),
        ]);
        assert!(o.status.success());
    }
    let (ta, tb) = (std::fs::read(&a).unwrap(), std::fs::read(&b).unwrap());
    assert_eq!(ta, tb);
    let rows = skabelund::spectrum::export::read_csv(&ta[..]).unwrap();
    assert!(rows
        .iter()
        .any(|r| r.record.descriptor.to_string() == "n2-skew-full:3,31"));
}

#[test]
fn spectrum_filter_and_formats() {
    let o = skabelund(&[
        "spectrum",
        "--family",
        "suzuki",
        "--s",
        "1",
        "--subgroup-family",
        "sigma-cm",
        "--format",
        "csv",
    ]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).lines().count(), 1 + 8);

    let o = skabelund(&["spectrum", "--family", "ree", "--s", "1", "--format", "json"]);
    let report = skabelund::spectrum::export::read_json(&o.stdout[..]).unwrap();
    assert!(report.contains(12942) && report.contains(445));

    let o = skabelund(&[
        "spectrum",
        "--family",
        "suzuki",
        "--s",
        "1",
        "--subgroup-family",
        "psl28",
    ]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn verify_tables_exit_code() {
    let o = skabelund(&["verify-tables"]);
    assert!(o.status.success(), "{}", stdout(&o));
    assert_eq!(stdout(&o).lines().filter(|l| l.starts_with("PASS")).count(), 6);
}

#[test]
fn oracle_suite_exit_code() {
    for (family, s) in [("suzuki", "1"), ("ree", "1"), ("ree", "2")] {
        let o = skabelund(&["oracle", "--family", family, "--s", s]);
        assert!(o.status.success(), "{}", stdout(&o));
        assert!(stdout(&o).contains(&format!("PASS oracle suite {family} s={s}")));
    }
    let o = skabelund(&["oracle", "--family", "ree", "--s", "2", "--max-elements", "50"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("skip"));
}

#[test]
fn env_caps_apply() {
    let o = Command::new(env!("CARGO_BIN_EXE_skabelund"))
        .args(["spectrum", "--family", "suzuki", "--s", "3"])
        .env("SKABELUND_MAX_S_SUZUKI", "2")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("exceeds the configured cap"));
}
