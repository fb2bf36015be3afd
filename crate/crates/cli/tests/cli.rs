use std::io::Write;
use std::process::{Command, Output, Stdio};

use quasitrivial::fixtures;
use quasitrivial::{OpTable, Projection};
use quasitrivial_cli::emit_table;

fn qsg(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_qsg"))
        .args(args)
        .env_remove("QSG_MAX_N")
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("spawn qsg");
    child.stdin.take().unwrap().write_all(stdin.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn classify_exit_codes() {
    let member = qsg(&["classify"], &emit_table(&fixtures::six_blocks()));
    assert_eq!(member.status.code(), Some(0));
    let text = stdout(&member);
    assert!(text.contains("signature: (2,1,3)"));
    assert!(text.contains("weak ordering: 3 4 | 2 | 1 5 6"));

    let non_member = qsg(&["classify", "-"], &emit_table(&fixtures::realizable_non_associative()));
    assert_eq!(non_member.status.code(), Some(1));
    assert!(stdout(&non_member).contains("realizable preimage sequence: yes"));

    let not_qt = qsg(&["classify"], "2\n2 1\n1 2\n");
    assert_eq!(not_qt.status.code(), Some(2));

    let malformed = qsg(&["classify"], "3\n1 1 1\n2 2\n3 3 3\n");
    assert_eq!(malformed.status.code(), Some(65));
    assert!(String::from_utf8_lossy(&malformed.stderr).contains("line 3"));

    assert_eq!(qsg(&["classify", "--format", "yaml"], "").status.code(), Some(64));
    assert_eq!(qsg(&["classify", "/nonexistent/table.txt"], "").status.code(), Some(66));
}

#[test]
fn classify_json_mirrors_text() {
    let o = qsg(&["classify", "--format", "json"], &emit_table(&fixtures::six_blocks()));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["member"], true);
    assert_eq!(v["member_info"]["signature"], serde_json::json!([2, 1, 3]));
    assert_eq!(v["member_info"]["blocks"], serde_json::json!([[3, 4], [2], [1, 5, 6]]));
    assert_eq!(v["member_info"]["orbit_size"], "60");
    assert_eq!(v["member_info"]["order_preservable"], false);
}

#[test]
fn count_families() {
    let o = qsg(&["count", "5", "--format", "json"], "");
    assert_eq!(o.status.code(), Some(0));
    let rows: Vec<serde_json::Value> = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(rows.len(), 10);
    let get = |f: &str| rows.iter().find(|r| r["family"] == f).unwrap()["enumerated"].clone();
    assert_eq!(get("q"), "1182");
    assert_eq!(get("r"), "41");
    assert!(rows.iter().all(|r| r["agree"] == true));

    let one = stdout(&qsg(&["count", "1"], ""));
    assert_eq!(one.lines().skip(1).filter(|l| l.split_whitespace().nth(1) == Some("1")).count(), 10);

    let six = qsg(&["count", "6", "--families", "q_op"], "");
    assert!(stdout(&six).contains("10214"));
}

#[test]
fn guards_are_reported() {
    let o = qsg(&["count", "9"], "");
    assert_eq!(o.status.code(), Some(64));
    assert!(String::from_utf8_lossy(&o.stderr).contains("members guard"));
    let o = qsg(&["--max-n", "3", "enumerate", "4", "--count-only"], "");
    assert_eq!(o.status.code(), Some(64));
    let o = Command::new(env!("CARGO_BIN_EXE_qsg"))
        .args(["enumerate", "3", "--count-only"])
        .env("QSG_MAX_N", "2")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(64));
}

#[test]
fn enumerate_streams() {
    let all = stdout(&qsg(&["enumerate", "3"], ""));
    assert_eq!(all.split("\n\n").count(), 20);
    assert_eq!(stdout(&qsg(&["enumerate", "3", "--count-only"], "")), "20\n");
    assert_eq!(stdout(&qsg(&["enumerate", "3", "--filter", "canonical", "--count-only"], "")), "7\n");
    assert_eq!(stdout(&qsg(&["enumerate", "4", "--filter", "order-preservable", "--count-only"], "")), "130\n");
    assert_eq!(stdout(&qsg(&["enumerate", "4", "--filter", "commutative", "--count-only"], "")), "24\n");
    assert_eq!(stdout(&qsg(&["enumerate", "4", "--filter", "anticommutative", "--count-only"], "")), "2\n");
    assert_eq!(stdout(&qsg(&["enumerate", "4", "--filter", "bisymmetric", "--count-only"], "")), "58\n");
    assert_eq!(all, stdout(&qsg(&["enumerate", "3"], "")));
}

#[test]
fn render_grids() {
    let p1 = emit_table(&OpTable::projection(2, Projection::First).unwrap());
    assert_eq!(stdout(&qsg(&["render"], &p1)), "1 2\n1 2\n");
    assert_eq!(stdout(&qsg(&["render"], "1\n1\n")), "1\n");
    let doc = emit_table(&fixtures::six_blocks());
    let grid = stdout(&qsg(&["render", "--order", "3,4,2,1,5,6"], &doc));
    assert_eq!(grid.lines().last(), Some("3 3 2 1 5 6"));
    let dot = stdout(&qsg(&["render", "--dot"], &doc));
    assert!(dot.starts_with("graph contour {"));
    assert_eq!(qsg(&["render", "--order", "1,2"], &doc).status.code(), Some(64));
}

#[test]
fn order_construction() {
    let o = qsg(&["order", "1 2 3 | 4 5 | 6 | 7 8"], "");
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).lines().next(), Some("7 < 6 < 4 < 1 < 2 < 3 < 5 < 8"));
    assert_eq!(stdout(&qsg(&["order", "1 2 3"], "")).lines().next(), Some("1 < 2 < 3"));
    let rejected = qsg(&["order", "1 | 2 3 4"], "");
    assert_eq!(rejected.status.code(), Some(1));
    assert_eq!(stdout(&rejected), "not 2-quasilinear: 1 < 2 ~ 3 ~ 4\n");
    assert_eq!(qsg(&["order", "1 2 | 2"], "").status.code(), Some(65));
}

#[test]
fn sequences() {
    assert_eq!(stdout(&qsg(&["seq", "r", "--len", "7"], "")), "r: 1, 1, 3, 7, 17, 41, 99\n");
    assert_eq!(stdout(&qsg(&["seq", "G", "--len", "4"], "")), "G: 0, 1, 1, 3/2\n");
}
