use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

fn data(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../data").join(name)
}

fn pcube(args: &[&str], stdin: &[u8]) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_pcube"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(stdin).unwrap();
    child.wait_with_output().unwrap()
}

fn ok(args: &[&str], stdin: &[u8]) -> Vec<u8> {
    let out = pcube(args, stdin);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    out.stdout
}

fn json(bytes: &[u8]) -> Value {
    serde_json::from_slice(bytes).unwrap()
}

#[test]
fn r8_pipeline_counts() {
    let cs = ok(&["gen", "R:8"], b"");
    let g = ok(&["dual"], &cs);
    let s = json(&ok(&["stats"], &g));
    assert_eq!(s["vertices"], 40);
    assert_eq!(s["classes"], 8);
    assert_eq!(s["triangles"], 20);
}

#[test]
fn near_pencil_3_is_a_cube() {
    let g = ok(&["dual"], &ok(&["gen", "near-pencil:3"], b""));
    let r = json(&ok(&["check"], &g));
    assert_eq!(r["partial_cube"], true);
    assert_eq!(r["cubic"], true);
    assert_eq!(r["vertices"], 8);
}

#[test]
fn weight23_check_is_nonplanar() {
    let g = pcube::families::weight23_graph().to_json();
    let r = json(&ok(&["check"], serde_json::to_string(&g).unwrap().as_bytes()));
    assert_eq!(r["partial_cube"], true);
    assert_eq!(r["planar"], false);
}

#[test]
fn wiring_input_with_infinity() {
    let p = data("pencil4.wir");
    let g = ok(&["dual", "--add-infinity", p.to_str().unwrap()], b"");
    assert_eq!(json(&g)["n"], 16);
}

#[test]
fn parallel_wires() {
    let p = data("parallel4.wir");
    let r = json(&ok(&["check"], &ok(&["dual", "--add-infinity", p.to_str().unwrap()], b"")));
    assert_eq!(r["vertices"], 20);
    assert_eq!(r["partial_cube"], true);
}

#[test]
fn draw_and_zono_formats() {
    let p = data("triangle.lines");
    let p = p.to_str().unwrap();
    let svg = String::from_utf8(ok(&["draw", p], b"")).unwrap();
    assert_eq!(svg.matches("<polygon").count(), 3);
    let t = json(&ok(&["draw", "--format", "json", p], b""));
    assert_eq!(t["vertices"].as_array().unwrap().len(), 7);
    let off = String::from_utf8(ok(&["zono", data("r6.lines").to_str().unwrap()], b"")).unwrap();
    assert!(off.starts_with("OFF\n24 14 36\n"));
    assert_eq!(pcube(&["draw", "--format", "off", p], b"").status.code(), Some(5));
}

#[test]
fn glue_verdicts() {
    let sq = data("square_r8.lines");
    let sq = sq.to_str().unwrap();
    let r = json(&ok(&["glue", sq, sq, "--transform", "rotate90"], b""));
    assert_eq!(r["overlay_zonotopal"], true);
    assert_eq!(r["partial_cube"], true);
    let (a, b) = (data("glue_a.lines"), data("glue_b.lines"));
    let r = json(&ok(&["glue", a.to_str().unwrap(), b.to_str().unwrap()], b""));
    assert_eq!(r["overlay_zonotopal"], false);
    assert_eq!(r["partial_cube"], false);
    let tri = data("triangle.lines");
    let out = pcube(&["glue", tri.to_str().unwrap(), sq], b"");
    assert_eq!(out.status.code(), Some(18));
}

#[test]
fn error_exit_codes() {
    assert_eq!(pcube(&["dual"], b"1 2\n").status.code(), Some(3));
    assert_eq!(pcube(&["gen", "R:7"], b"").status.code(), Some(5));
    assert_eq!(pcube(&["dual"], b"1 0 0\n2 0 0\n").status.code(), Some(6));
    assert_eq!(pcube(&["check", "/nonexistent/graph.json"], b"").status.code(), Some(4));
    assert_eq!(pcube(&["stats", "--limit", "10"], &ok(&["dual"], &ok(&["gen", "R:8"], b""))).status.code(), Some(16));
    assert_eq!(pcube(&["dual"], b"3 / (1 2)\n").status.code(), Some(13));
    assert_eq!(pcube(&["frobnicate"], b"").status.code(), Some(2));
}

#[test]
fn outputs_are_deterministic() {
    let p = data("square_r8.lines");
    let p = p.to_str().unwrap();
    for args in [vec!["dual", p], vec!["draw", p], vec!["zono", p], vec!["dual", "--affine", p]] {
        assert_eq!(ok(&args, b""), ok(&args, b""));
    }
}

#[test]
fn reproduce_single_criterion() {
    let out = ok(&["reproduce", "--criterion", "5", "--format", "json"], b"");
    let r = json(&out);
    assert_eq!(r[0]["id"], 5);
    assert_eq!(r[0]["passed"], true);
    assert_eq!(pcube(&["reproduce", "--criterion", "12"], b"").status.code(), Some(5));
}
