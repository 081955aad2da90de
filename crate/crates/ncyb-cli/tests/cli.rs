use std::path::PathBuf;
use std::process::{Command, Output};

fn ncyb(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ncyb"))
        .args(args)
        .env("NCYB_THREADS", "2")
        .output()
        .expect("binary runs")
}

fn tmp(name: &str) -> PathBuf {
    std::env::temp_dir().join(format!("ncyb-cli-{}-{name}", std::process::id()))
}

#[test]
fn usage_errors_exit_2() {
    for args in [
        &["verify", "nosuch"][..],
        &["verify", "classical", "--n", "1"],
        &["verify", "uqrep", "--mode", "numeric"],
        &["verify", "quasidet", "--samples", "0"],
        &["verify"],
        &[],
        &["demo", "map", "--n", "2"],
    ] {
        assert_eq!(ncyb(args).status.code(), Some(2), "args {args:?}");
    }
    assert_eq!(ncyb(&["--help"]).status.code(), Some(0));
}

#[test]
fn bad_thread_count_exits_2() {
    let out = Command::new(env!("CARGO_BIN_EXE_ncyb"))
        .args(["verify", "appendixA"])
        .env("NCYB_THREADS", "zero")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn unwritable_json_path_exits_2() {
    let out = ncyb(&["verify", "appendixA", "--json", "/nonexistent-dir/x.json"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn json_report_is_stable() {
    let (a, b) = (tmp("a.json"), tmp("b.json"));
    for p in [&a, &b] {
        let out = ncyb(&["verify", "ybmap", "--n", "2", "--seed", "3", "--samples", "2", "--json", p.to_str().unwrap()]);
        assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stdout));
    }
    let read = |p: &PathBuf| std::fs::read_to_string(p).unwrap();
    let (ja, jb) = (read(&a), read(&b));
    assert!(ja.ends_with('\n'));
    let strip = |s: &str| {
        let mut v: serde_json::Value = serde_json::from_str(s).unwrap();
        v["elapsed_ms"] = serde_json::Value::Null;
        v
    };
    assert_eq!(strip(&ja), strip(&jb));
    let v = strip(&ja);
    let keys: Vec<&str> = ["\"suite\"", "\"config\"", "\"checks\"", "\"elapsed_ms\"", "\"status\""].to_vec();
    let pos: Vec<usize> = keys.iter().map(|k| ja.rfind(k).unwrap()).collect();
    assert!(pos.windows(2).all(|w| w[0] < w[1]));
    assert_eq!(v["suite"], "ybmap");
    assert_eq!(v["status"], "pass");
    assert_eq!(v["config"]["n"], 2);
    assert_eq!(v["config"]["seed"], 3);
    let check = &v["checks"][0];
    for k in ["name", "anchor", "status", "detail"] {
        assert!(check.get(k).is_some(), "missing {k}");
    }
    let _ = std::fs::remove_file(a);
    let _ = std::fs::remove_file(b);
}

#[test]
fn failing_suite_exits_1() {
    let out = ncyb(&["verify", "appendixB", "--mode", "numeric"]);
    assert_eq!(out.status.code(), Some(1));
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("[fail]"));
    assert!(text.contains("[pass]"));
}

#[test]
fn passing_suite_exits_0() {
    let out = ncyb(&["verify", "appendixA"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&out.stdout).contains("appendixA: pass"));
}

#[test]
fn demo_prints_the_rank_three_map() {
    let out = ncyb(&["demo", "map", "--n", "3"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.starts_with("rank three classical map"));
    assert!(text.contains("u1[1]"));
}
