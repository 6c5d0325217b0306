use std::io::Write;
use std::process::{Command, Output, Stdio};

fn fewlen(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_fewlen")).args(args).env_remove("FEWLEN_SEED").output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(o: &Output) -> serde_json::Value {
    serde_json::from_str(stdout(o).lines().next().unwrap()).unwrap()
}

#[test]
fn draw_then_verify() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("k9.json");
    let svg = dir.path().join("k9.svg");
    let o = fewlen(&["draw", "--family", "complete:9", "--out", path.to_str().unwrap(), "--svg", svg.to_str().unwrap()]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).trim(), "measured=4 bound=4 lemma=complete-ngon");
    assert!(std::fs::read_to_string(&svg).unwrap().contains("<svg"));
    let v = fewlen(&["--seed", "12", "verify", path.to_str().unwrap()]);
    assert!(v.status.success());
    let r = json(&v);
    assert_eq!(r["distinct_length_count"], 4);
    assert_eq!(r["is_degenerate"], false);
    assert_eq!(r["seed"], 12);
}

#[test]
fn draw_to_stdout_is_byte_identical_across_runs() {
    let args = ["--seed", "5", "draw", "--family", "complete_bipartite:2,20", "--strategy", "k2n"];
    let a = fewlen(&args);
    let b = fewlen(&args);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    let text = stdout(&a);
    let mut lines = text.lines();
    let d: serde_json::Value = serde_json::from_str(lines.next().unwrap()).unwrap();
    assert_eq!(d["seed"], 5);
    assert_eq!(lines.next().unwrap(), "measured=4 bound=4 lemma=k2n-circles");
}

#[test]
fn seed_comes_from_the_environment() {
    let o = Command::new(env!("CARGO_BIN_EXE_fewlen"))
        .args(["bounds", "--formula", "matchings", "--n", "6"])
        .env("FEWLEN_SEED", "41")
        .output()
        .unwrap();
    let r = json(&o);
    assert_eq!(r["seed"], 41);
    assert_eq!(r["values"][0]["exact"], "15");
}

#[test]
fn search_reports_and_reproduces() {
    let args = ["--seed", "2", "search", "--family", "complete_bipartite:2,8", "--kmax", "3", "--budget", "100"];
    let a = fewlen(&args);
    assert!(a.status.success());
    assert_eq!(a.stdout, fewlen(&args).stdout);
    let r = json(&a);
    assert_eq!(r["k_achieved"], 2);
    assert_eq!(r["seed"], 2);
    assert_eq!(r["drawing"]["n"], 10);
}

#[test]
fn search_without_success_reports_null() {
    let o = fewlen(&["search", "--family", "complete:4", "--kmax", "1", "--budget", "16", "--unit-exclusion"]);
    assert!(o.status.success());
    assert!(json(&o)["k_achieved"].is_null());
}

#[test]
fn verify_reads_stdin_and_flags_degenerate_drawings() {
    let mut child = Command::new(env!("CARGO_BIN_EXE_fewlen"))
        .args(["verify", "-"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child
        .stdin
        .take()
        .unwrap()
        .write_all(br#"{"n":3,"edges":[[0,1]],"pos":[[0,0],[2,0],[1,0]],"kind":"strict"}"#)
        .unwrap();
    let o = child.wait_with_output().unwrap();
    assert_eq!(o.status.code(), Some(4));
    assert_eq!(json(&o)["vertex_on_edge"][0], serde_json::json!([2, 0, 1]));
}

#[test]
fn bad_input_exits_with_2() {
    for args in [
        &["draw", "--family", "frame:7"][..],
        &["draw", "--graph", "g6:D"],
        &["gen", "nonsense:1"],
        &["verify", "/nonexistent/drawing.json"],
        &["bounds", "--formula", "matchings", "--n", "7"],
    ] {
        let o = fewlen(args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        assert!(String::from_utf8_lossy(&o.stderr).starts_with("error:"), "{args:?}");
    }
}

#[test]
fn gen_and_graph6_input_agree() {
    let o = fewlen(&["gen", "grid:3,4"]);
    let g6 = stdout(&o).trim().to_string();
    let a = fewlen(&["draw", "--graph", &format!("g6:{g6}"), "--strategy", "ordering"]);
    let b = fewlen(&["draw", "--graph", "grid:3,4", "--strategy", "ordering"]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn product_strategy() {
    let o = fewlen(&["draw", "--strategy", "product", "--factor", "cycle:5", "--factor", "cycle:5"]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    assert!(stdout(&o).lines().last().unwrap().starts_with("measured=1 "));
}

#[test]
fn list_families() {
    let o = fewlen(&["gen", "--list-families"]);
    assert!(stdout(&o).contains("series_parallel:N,SEED"));
}
