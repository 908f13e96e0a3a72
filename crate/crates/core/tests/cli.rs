use std::path::PathBuf;
use std::process::{Command, Output};

use scissors::cli::{count_pieces, render_svg, Scenario};
use scissors::covercat::FinCatFam;

fn scenario(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("scenarios").join(name)
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_scissors")).args(args).output().expect("binary runs")
}

fn run_on(args: &[&str], file: &str) -> (i32, String, String) {
    let path = scenario(file);
    let mut all: Vec<&str> = args.to_vec();
    all.push(path.to_str().unwrap());
    let out = run(&all);
    (out.status.code().unwrap(), String::from_utf8(out.stdout).unwrap(), String::from_utf8(out.stderr).unwrap())
}

#[test]
fn verify_exit_codes() {
    assert_eq!(run_on(&["verify"], "interval_exchange.json").0, 0);
    let (code, _, err) = run_on(&["verify"], "overlap.json");
    assert_eq!(code, 1);
    assert!(err.contains("Overlap(0,1)"), "{err}");
    assert_eq!(run_on(&["verify"], "malformed.json").0, 2);
    assert_eq!(run_on(&["verify"], "no_such_file.json").0, 2);
}

#[test]
fn trace_outputs() {
    let (code, out, _) = run_on(&["trace"], "interval_exchange.json");
    assert_eq!(code, 0);
    assert!(out.contains("chain   = ([y]⊗x + [−x]⊗y) − ([0]⊗x + [0]⊗y)"), "{out}");
    assert!(out.contains("class   = y⊗x − x⊗y"), "{out}");

    let (code, out, _) = run_on(&["trace"], "rotated_square.json");
    assert_eq!(code, 0);
    assert!(out.contains("class   = {p=5: −2}⊗1"), "{out}");
    assert!(out.contains("nonzero = true"), "{out}");

    let (code, out, _) = run_on(&["trace"], "trivial.json");
    assert_eq!(code, 0);
    assert!(out.contains("class   = 0") && out.contains("nonzero = false"), "{out}");
}

#[test]
fn unknown_measure_is_a_parse_error() {
    assert_eq!(run_on(&["trace", "--measure", "volume"], "interval_exchange.json").0, 2);
    assert_eq!(run_on(&["trace", "--measure", "hadwiger:0,0"], "interval_exchange.json").0, 2);
    // a measure the group does not preserve is a failed check, not bad input
    assert_eq!(run_on(&["trace", "--measure", "hadwiger:1,0"], "interval_exchange.json").0, 1);
}

#[test]
fn hadwiger_is_refused_for_rotations() {
    assert_eq!(run_on(&["trace", "--measure", "hadwiger:1,0"], "rotated_square.json").0, 1);
    assert_eq!(run_on(&["trace"], "slide.json").0, 0);
}

const TIED: &str = r#"{
  "version": 1,
  "name": "tied lengths",
  "geometry": "E1",
  "group": "T1",
  "symbols": [
    {"name": "x", "lo": "1/4", "hi": "1/3"},
    {"name": "z", "lo": "1/4", "hi": "1/3"}
  ],
  "measure": "length",
  "target": [["0", "1"]],
  "pieces": [{"name": "A", "cells": [["0", "x"]]}, {"name": "B", "cells": [["z", "1"]]}],
  "move": ["0", "0"]
}"#;

#[test]
fn overlapping_witnesses_give_undecidable_sign() {
    let path = std::env::temp_dir().join(format!("scissors_tied_{}.json", std::process::id()));
    std::fs::write(&path, TIED).unwrap();
    for extra in [&[][..], &["--precision-bits", "64"][..]] {
        let mut args = extra.to_vec();
        args.extend(["verify", path.to_str().unwrap()]);
        let out = run(&args);
        assert_eq!(out.status.code(), Some(3), "{}", String::from_utf8_lossy(&out.stderr));
    }
    std::fs::remove_file(path).ok();
}

#[test]
fn k0_of_the_z2_file() {
    let (code, out, _) = run_on(&["k0"], "categories/ea_z2.json");
    assert_eq!(code, 0);
    assert!(out.contains("K0 = ℤ/2"), "{out}");
    let (code, out, _) = run_on(&["--json", "k0"], "categories/ea_z6.json");
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["group"], "ℤ/6");
    let (code, out, _) = run_on(&["check-measure"], "categories/toy.json");
    assert_eq!(code, 0, "{out}");
}

#[test]
fn render_draws_every_piece() {
    let (code, svg, report) = run_on(&["render"], "rotated_square.json");
    assert_eq!(code, 0);
    assert!(report.contains("12 pieces"), "{report}");
    assert!(svg.starts_with("<svg"));
    assert_eq!(count_pieces(&svg), 12);
    let s = Scenario::parse(&std::fs::read_to_string(scenario("rotated_square.json")).unwrap()).unwrap();
    assert_eq!(render_svg(&s), svg);
}

#[test]
fn json_output_is_stable() {
    for (cmd, file) in [
        ("trace", "interval_exchange.json"),
        ("trace", "rotated_square.json"),
        ("verify", "overlap.json"),
        ("k0", "categories/ea_z2xz2.json"),
        ("check-measure", "slide.json"),
    ] {
        let a = run_on(&["--json", cmd], file);
        let b = run_on(&["--json", cmd], file);
        assert_eq!(a, b, "{cmd} {file}");
        let out = if a.0 == 0 { &a.1 } else { &a.2 };
        serde_json::from_str::<serde_json::Value>(out).unwrap();
    }
}

#[test]
fn shipped_files_round_trip() {
    for f in ["interval_exchange.json", "rotated_square.json", "trivial.json", "overlap.json", "slide.json"] {
        let text = std::fs::read_to_string(scenario(f)).unwrap();
        let s = Scenario::parse(&text).unwrap();
        let again = Scenario::parse(&s.to_json()).unwrap();
        assert_eq!(again, s, "{f}");
        assert_eq!(again.to_json(), s.to_json());
    }
    for f in ["toy", "one_star", "z3_star", "ea_z2", "ea_z3", "ea_z2xz2", "ea_z6"] {
        let text = std::fs::read_to_string(scenario(&format!("categories/{f}.json"))).unwrap();
        let c = FinCatFam::from_json(&text).unwrap();
        assert_eq!(FinCatFam::from_json(&c.to_json()).unwrap().to_json(), c.to_json());
    }
}
