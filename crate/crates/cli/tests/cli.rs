use std::process::{Command, Output};

use eqres::eqmod::{lattice, splice, LatticeModel, ModuleModel, Placed};
use eqres::partitions::part;
use eqres::rep_ring::DimContext;
use eqres::resolutions::{betti_table, BettiTable};
use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_eqres"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert_eq!(
        out.status.code(),
        Some(0),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

fn json(args: &[&str]) -> Value {
    let v: Value = serde_json::from_str(&stdout(args)).unwrap();
    assert_eq!(v["schema"], "eqres/1");
    v
}

fn ctx(n: usize) -> DimContext {
    DimContext::new(n).unwrap()
}

#[test]
fn tor_two_one() {
    let out = stdout(&["tor", "--lambda", "2,1", "--n", "3"]);
    assert!(out.contains("i=0 degree=3: (2,1) dim 8"), "{out}");
    assert!(out.contains("i=1 degree=4: (2,2) dim 6, (2,1,1) dim 3"), "{out}");
    assert!(out.contains("i=2 degree=5: (2,2,1) dim 3"), "{out}");
    assert_eq!(out.lines().count(), 4);
}

#[test]
fn tor_of_a_free_module() {
    let out = stdout(&["tor", "--lambda", "7", "--n", "4", "--proj"]);
    assert_eq!(out.lines().skip(1).collect::<Vec<_>>(), ["i=0 degree=7: (7) dim 120"]);
}

#[test]
fn tor_truncation_strands() {
    let out = stdout(&["tor", "--lambda", "1,1", "--l", "2", "--n", "3", "--imax", "1"]);
    assert!(out.contains("i=1 degree=3: (1,1,1) dim 1"), "{out}");
    assert!(out.contains("i=1 degree=4: (3,1) dim 15"), "{out}");
    assert!(!out.contains("i=2"));
}

#[test]
fn tor_json_round_trip() {
    let v = json(&["tor", "--lambda", "2,1", "--l", "2", "--n", "3", "--format", "json"]);
    let table: BettiTable = serde_json::from_value(v["table"].clone()).unwrap();
    let m = ModuleModel::truncation(part(&[2, 1]), 2, ctx(3)).unwrap();
    assert_eq!(table, betti_table(&m));
    let back: ModuleModel = serde_json::from_value(v["module"].clone()).unwrap();
    assert_eq!(back, m);
}

#[test]
fn lattice_of_r_tensor_v() {
    let out = stdout(&["lattice", "--proj", "1", "--n", "2", "--dmax", "4", "--format", "dot"]);
    assert!(out.starts_with("digraph lattice {"));
    assert!(out.trim_end().ends_with('}'));
    assert_eq!(out.matches("[label=").count(), 7);
    assert_eq!(out.matches(" -> ").count(), 8);
    assert!(out.contains("[label=\"(2,1)@3\"]"));
}

#[test]
fn lattice_of_an_elementary_module_is_a_chain() {
    let out = stdout(&["lattice", "--elem", "2,1", "--dmax", "5"]);
    assert_eq!(out.matches("[label=").count(), 3);
    assert_eq!(out.matches(" -> ").count(), 2);
}

#[test]
fn lattice_json_round_trip() {
    let v = json(&[
        "lattice", "--proj", "2,1", "--n", "3", "--dmax", "6", "--format", "json",
    ]);
    let model: LatticeModel = serde_json::from_value(v["lattice"].clone()).unwrap();
    assert_eq!(
        model,
        lattice(&ModuleModel::projective(part(&[2, 1]), ctx(3)), 6).unwrap()
    );
    let v = json(&[
        "lattice",
        "--splice",
        "2,1@3;3,1@4",
        "--glue",
        "5,1@6",
        "--dmax",
        "7",
        "--format",
        "json",
    ]);
    let model: LatticeModel = serde_json::from_value(v["lattice"].clone()).unwrap();
    let branches = [Placed::new(part(&[2, 1]), 3), Placed::new(part(&[3, 1]), 4)];
    assert_eq!(model, splice(&branches, &Placed::new(part(&[5, 1]), 6), 7).unwrap());
}

#[test]
fn spliced_lattice_merges_at_the_glue() {
    let out = stdout(&[
        "lattice",
        "--splice",
        "2,1@3;3,1@4",
        "--glue",
        "5,1@6",
        "--dmax",
        "7",
        "--format",
        "text",
    ]);
    assert!(out.contains("degree 5: (4,1) (4,1)"), "{out}");
    assert!(out.contains("degree 6: (5,1)\n"), "{out}");
    assert_eq!(out.matches("-> (5,1)@6").count(), 2);
}

#[test]
fn ext_examples() {
    assert!(stdout(&["ext", "--lambda", "3,1", "--eta", "3,2", "--n", "3"]).ends_with("[1]\n"));
    assert!(stdout(&["ext", "--lambda", "2", "--eta", "2", "--n", "3"]).ends_with("[0]\n"));
    assert!(stdout(&["ext", "--lambda", "2", "--eta", "4", "--n", "3"]).ends_with("[]\n"));
    let v = json(&["ext", "--lambda", "1", "--eta", "1,1,1", "--n", "3", "--format", "json"]);
    assert_eq!(v["degrees"], serde_json::json!([2]));
}

#[test]
fn verify_suites_pass() {
    let out = stdout(&["verify", "coass", "--n", "3"]);
    assert!(out.ends_with("coass: 105/105 passed\n"), "{out}");
    let out = stdout(&["verify", "euler", "--max-size", "3", "--max-n", "3"]);
    assert!(out.lines().all(|l| !l.starts_with("FAIL")));
    let v = json(&["verify", "brute", "--max-size", "2", "--n", "2", "--format", "json"]);
    assert_eq!(v["passed"], true);
    assert_eq!(v["failed"], 0);
}

#[test]
fn output_is_deterministic() {
    for args in [
        &["verify", "sam", "--format", "json"][..],
        &["lattice", "--proj", "2", "--n", "3", "--dmax", "5"],
        &["tor", "--lambda", "3,1", "--n", "4", "--format", "json"],
    ] {
        assert_eq!(run(args).stdout, run(args).stdout, "{args:?}");
    }
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["tor", "--lambda", "1,2", "--n", "3"]).status.code(), Some(1));
    assert_eq!(run(&["tor", "--lambda", "2,1"]).status.code(), Some(1));
    assert_eq!(run(&["tor", "--lambda", "2,1", "--n", "0"]).status.code(), Some(1));
    assert_eq!(run(&["verify", "nonsense"]).status.code(), Some(1));
    assert_eq!(run(&["lattice", "--proj", "1", "--dmax", "3"]).status.code(), Some(1));
    assert_eq!(run(&["lattice", "--elem", "2,1", "--dmax", "1"]).status.code(), Some(1));
    assert_eq!(run(&["verify", "brute", "--max-size", "5"]).status.code(), Some(3));
    assert_eq!(run(&["verify", "brute", "--n", "4"]).status.code(), Some(3));
    assert_eq!(run(&["--help"]).status.code(), Some(0));
}
