use std::path::Path;
use std::process::{Command, Output};

fn verlinde(args: &[&str], cache_dir: Option<&Path>) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_verlinde"));
    cmd.args(args).env_remove("VERLINDE_CACHE_DIR");
    if let Some(dir) = cache_dir {
        cmd.env("VERLINDE_CACHE_DIR", dir);
    }
    cmd.output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn g2_adjoint_image() {
    let out = verlinde(&["image", "--type", "G2", "--weight", "adjoint", "--p", "13"], None);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("weyl  = [Δ_2, Δ_10]"), "{text}");
    assert!(text.contains("image = L_2 ⊕ L_10"), "{text}");
}

#[test]
fn e7_paper_label_json() {
    let out = verlinde(&["image", "--type", "E7", "--weight", "paper:w1", "--p", "23", "--json"], None);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["image"], serde_json::json!({ "9": 1 }));
    assert_eq!(v["weyl"], serde_json::json!([9, 17, 27]));
    let flag = verlinde(&["image", "--type", "E7", "--weight", "w1", "--labels", "paper", "--p", "23", "--json"], None);
    assert_eq!(flag.stdout, out.stdout);
}

#[test]
fn natural_representation_of_a3() {
    let out = verlinde(&["image", "--type", "A", "--rank", "3", "--weight", "w1", "--p", "7"], None);
    assert!(stdout(&out).contains("image = L_3"));
}

#[test]
fn usage_errors_exit_2() {
    for args in [
        &["image", "--type", "G2", "--weight", "5w1", "--p", "13"][..],
        &["image", "--type", "G2", "--weight", "w1", "--p", "12"],
        &["image", "--type", "A", "--rank", "2", "--weight", "w7", "--p", "7"],
        &["image", "--type", "X", "--weight", "0", "--p", "7"],
        &["subalgebras", "--sweep", "--p-min", "50", "--p-max", "40"],
        &["verify", "no-such-suite"],
        &["frobnicate"],
    ] {
        assert_eq!(verlinde(args, None).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn subalgebra_queries() {
    let out = verlinde(&["subalgebras", "--n", "7", "--p", "17"], None);
    let lines: Vec<String> = stdout(&out).lines().map(String::from).collect();
    assert_eq!(lines.len(), 4);
    assert!(lines.contains(&"{1,5}:d".to_string()));
    let out = verlinde(&["subalgebras", "--n", "2", "--p", "11"], None);
    assert_eq!(stdout(&out).trim(), "{1}:abc");
}

#[test]
fn sweep_conforms() {
    let out = verlinde(&["subalgebras", "--sweep", "--p-max", "101"], None);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).trim_end().ends_with("all 542 cells conform"));
}

#[test]
fn reports_are_deterministic_and_cache_round_trips() {
    let dir = tempfile::tempdir().unwrap();
    let (a, b) = (dir.path().join("a.json"), dir.path().join("b.json"));
    let first = verlinde(&["verify", "tables", "--json", a.to_str().unwrap()], Some(dir.path()));
    assert_eq!(first.status.code(), Some(0));
    let cache = std::fs::read(dir.path().join("characters.bin")).unwrap();
    assert!(!cache.is_empty());
    let second = verlinde(&["verify", "tables", "--json", b.to_str().unwrap()], Some(dir.path()));
    assert_eq!(first.stdout, second.stdout);
    assert_eq!(std::fs::read(dir.path().join("characters.bin")).unwrap(), cache);

    let strip = |p: &Path| {
        let mut v: serde_json::Value = serde_json::from_slice(&std::fs::read(p).unwrap()).unwrap();
        v.as_object_mut().unwrap().remove("elapsed_ms");
        v
    };
    let report = strip(&a);
    assert_eq!(report, strip(&b));
    assert_eq!(report["schema_version"], 1);
    assert_eq!(report["suite"], "tables");
    assert_eq!(report["summary"]["fail"], 0);
    let check = &report["checks"][0];
    for key in ["id", "anchor", "status", "witness"] {
        assert!(check.get(key).is_some(), "{key}");
    }
}

#[test]
fn markdown_report() {
    let out = verlinde(&["verify", "dims", "--format", "markdown"], None);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("| "));
}

#[test]
fn datum_dump() {
    let out = verlinde(&["datum", "--type", "B", "--rank", "3"], None);
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["rank"], 3);
    assert_eq!(v["positive_roots"].as_array().unwrap().len(), 9);
}
