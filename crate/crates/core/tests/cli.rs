mod common;

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use common::fixture_path;
use serde_json::Value;

fn zonograph(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_zonograph"))
        .args(args)
        .output()
        .unwrap()
}

fn json_of(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap()
}

fn scratch(name: &str) -> PathBuf {
    let dir = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join("cli");
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

fn arg(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn recognize_cube() {
    let out = zonograph(&["recognize", arg(&fixture_path("cube"))]);
    assert_eq!(out.status.code(), Some(0));
    let report = json_of(&out);
    assert_eq!(report["accepted"], true);
    assert_eq!(report["zones"], 3);
}

#[test]
fn generate_then_recognize() {
    let g = scratch("m5.json");
    let out = zonograph(&["generate", "-m", "5", "--seed", "7", "-o", arg(&g)]);
    assert_eq!(
        out.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    assert_eq!(json_of(&out)["n"], 22);
    let out = zonograph(&["recognize", arg(&g)]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json_of(&out)["zones"], 5);
}

#[test]
fn rejections_exit_one() {
    let out = zonograph(&["recognize", arg(&fixture_path("pseudo_double_wheel"))]);
    assert_eq!(out.status.code(), Some(1));
    let report = json_of(&out);
    assert_eq!(report["accepted"], false);
    assert_eq!(report["reason"], "zone_self_intersection");

    let out = zonograph(&["recognize", arg(&fixture_path("k4"))]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(json_of(&out)["reason"], "non_quad_face");
}

#[test]
fn input_errors_exit_two() {
    assert_eq!(
        zonograph(&["recognize", "/nonexistent/graph.json"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        zonograph(&["recognize", "--bogus", "x"]).status.code(),
        Some(2)
    );
    assert_eq!(zonograph(&["frobnicate"]).status.code(), Some(2));
    let g = scratch("unused.json");
    assert_eq!(
        zonograph(&["generate", "-m", "4", "-o", arg(&g)])
            .status
            .code(),
        Some(2)
    );
    let out = zonograph(&[
        "realize",
        arg(&fixture_path("cube")),
        "-o",
        arg(&g),
        "--scale",
        "-1",
    ]);
    assert_eq!(out.status.code(), Some(2));

    let bad = scratch("bad.json");
    std::fs::write(&bad, "{\"n\":3,\n\"adj\":[[1],[0],[0]]}").unwrap();
    let out = zonograph(&["recognize", arg(&bad)]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("bad.json"));
}

#[test]
fn realize_then_verify() {
    let off = scratch("m6.off");
    let trace = scratch("m6.trace.json");
    let out = zonograph(&[
        "realize",
        arg(&fixture_path("zonotope_m6")),
        "-o",
        arg(&off),
        "--scale",
        "3/2",
        "--zone-scales",
        "1,2,1/2",
        "--trace",
        arg(&trace),
    ]);
    assert_eq!(
        out.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    let summary = json_of(&out);
    assert_eq!(summary["vertices"], 32);
    assert_eq!(summary["faces"], 30);
    let steps: Value = serde_json::from_str(&std::fs::read_to_string(&trace).unwrap()).unwrap();
    assert_eq!(steps["steps"].as_array().unwrap().len(), 3);

    let out = zonograph(&["verify", arg(&off)]);
    assert_eq!(
        out.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&out.stdout)
    );
    assert_eq!(json_of(&out)["violations"].as_array().unwrap().len(), 0);

    // pulling a hull vertex inward breaks convexity
    let text = std::fs::read_to_string(&off).unwrap();
    let mut lines: Vec<String> = text.lines().map(str::to_string).collect();
    lines[2] = "1 1 1".into();
    let broken = scratch("broken.off");
    std::fs::write(&broken, lines.join("\n")).unwrap();
    assert_eq!(zonograph(&["verify", arg(&broken)]).status.code(), Some(1));
}

#[test]
fn precision_comes_from_the_environment() {
    let off = scratch("cube.off");
    let run = |precision: &str| {
        Command::new(env!("CARGO_BIN_EXE_zonograph"))
            .args([
                "realize",
                arg(&fixture_path("cube")),
                "-o",
                arg(&off),
                "--scale",
                "1/3",
            ])
            .env("ZG_PRECISION", precision)
            .output()
            .unwrap()
    };
    assert_eq!(run("4").status.code(), Some(0));
    assert!(std::fs::read_to_string(&off).unwrap().contains("0.3333"));
    assert_eq!(run("lots").status.code(), Some(2));
}

#[test]
fn stats_of_a_zonotope() {
    let out = zonograph(&["stats", arg(&fixture_path("zonotope_m6"))]);
    assert_eq!(out.status.code(), Some(0));
    let s = json_of(&out);
    assert_eq!(
        (s["n"].as_u64(), s["m"].as_u64(), s["f"].as_u64()),
        (Some(32), Some(6), Some(30))
    );
    assert_eq!(s["generic"], true);
    assert_eq!(s["within_bound"], true);
    assert_eq!(s["zone_length_histogram"]["10"], 6);
    assert_eq!(
        zonograph(&["stats", arg(&fixture_path("k4"))])
            .status
            .code(),
        Some(1)
    );
}
