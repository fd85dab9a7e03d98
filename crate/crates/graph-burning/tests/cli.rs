//! End-to-end checks of the `burn` binary: generation, solving,
//! verification, exit codes, and byte-level output determinism.

use std::fs;
use std::path::PathBuf;
use std::process::{Command, Output};

fn burn(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_burn"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn workdir(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("burn-cli-{name}-{}", std::process::id()));
    fs::create_dir_all(&dir).unwrap();
    dir
}

#[test]
fn gen_then_exact_then_verify() {
    let dir = workdir("exact");
    let prefix = dir.join("p9");
    let prefix = prefix.to_str().unwrap();

    let gen = burn(&["gen", "path", "9", "--out", prefix]);
    assert!(gen.status.success(), "{gen:?}");
    let graph_file = format!("{prefix}.burn");
    assert!(fs::metadata(&graph_file).is_ok());
    assert!(fs::metadata(format!("{prefix}.tdec")).is_ok());

    let exact = burn(&["exact", "--graph", &graph_file, "--json"]);
    assert!(exact.status.success());
    let report: serde_json::Value = serde_json::from_str(stdout(&exact).trim()).unwrap();
    assert_eq!(report["algorithm"], "exact");
    assert_eq!(report["completion_round"], 3);

    let schedule: Vec<String> = report["schedule"]
        .as_array()
        .unwrap()
        .iter()
        .map(|v| v.to_string())
        .collect();
    let verify = burn(&[
        "verify",
        "--graph",
        &graph_file,
        "--schedule",
        &schedule.join(" "),
        "--rounds",
        "3",
    ]);
    assert!(verify.status.success());
    assert_eq!(stdout(&verify).trim(), "ok");

    let tight = burn(&[
        "verify",
        "--graph",
        &graph_file,
        "--schedule",
        &schedule.join(" "),
        "--rounds",
        "2",
    ]);
    assert_eq!(tight.status.code(), Some(1));
    assert_eq!(stdout(&tight).trim(), "fail");
}

#[test]
fn decomposition_burners_and_bounds() {
    let dir = workdir("decomp");
    let prefix = dir.join("g");
    let prefix = prefix.to_str().unwrap();
    assert!(burn(&["gen", "grid", "3", "6", "--out", prefix])
        .status
        .success());
    let graph_file = format!("{prefix}.burn");
    let decomp_file = format!("{prefix}.tdec");

    let pathlen = burn(&["pathlen", "--graph", &graph_file, "--decomp", &decomp_file]);
    assert!(pathlen.status.success(), "{pathlen:?}");
    assert!(stdout(&pathlen).contains("algorithm: pathlen"));

    let treelen = burn(&[
        "treelen",
        "--graph",
        &graph_file,
        "--decomp",
        &decomp_file,
        "--mode",
        "binary",
        "--json",
    ]);
    assert!(treelen.status.success(), "{treelen:?}");
    let report: serde_json::Value = serde_json::from_str(stdout(&treelen).trim()).unwrap();
    assert_eq!(report["algorithm"], "treelen");
    assert!(report["completion_round"].as_u64() <= report["certified_bound"].as_u64());

    let bounds = burn(&["bounds", "--graph", &graph_file, "--decomp", &decomp_file]);
    assert!(bounds.status.success());
    let text = stdout(&bounds);
    assert!(text.contains("n: 18"));
    assert!(text.contains("lower:"));
    assert!(text.contains("pathlen_bound:"));
}

#[test]
fn dense_runs_without_decomposition() {
    let dir = workdir("dense");
    let prefix = dir.join("rnd");
    let prefix = prefix.to_str().unwrap();
    assert!(burn(&[
        "gen",
        "random-min-degree",
        "50",
        "5",
        "--seed",
        "7",
        "--out",
        prefix
    ])
    .status
    .success());
    let dense = burn(&["dense", "--graph", &format!("{prefix}.burn"), "--json"]);
    assert!(dense.status.success());
    let report: serde_json::Value = serde_json::from_str(stdout(&dense).trim()).unwrap();
    assert!(report["completion_round"].as_u64() <= report["certified_bound"].as_u64());
}

#[test]
fn malformed_input_exits_2() {
    let dir = workdir("bad");
    let bad = dir.join("bad.burn");
    fs::write(&bad, "p burn 3 1\ne 0 9\n").unwrap();
    let out = burn(&["exact", "--graph", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8(out.stderr).unwrap().contains("line 2"));

    let missing = burn(&["exact", "--graph", dir.join("nope.burn").to_str().unwrap()]);
    assert_eq!(missing.status.code(), Some(2));
}

#[test]
fn precondition_violations_exit_3() {
    let dir = workdir("pre");
    let disconnected = dir.join("two.burn");
    fs::write(&disconnected, "p burn 4 2\ne 0 1\ne 2 3\n").unwrap();
    let out = burn(&["exact", "--graph", disconnected.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(3));

    let prefix = dir.join("p5");
    let prefix = prefix.to_str().unwrap();
    assert!(burn(&["gen", "path", "5", "--out", prefix])
        .status
        .success());
    let no_decomp = burn(&["pathlen", "--graph", &format!("{prefix}.burn")]);
    assert_eq!(no_decomp.status.code(), Some(3));
}

#[test]
fn budget_exceeded_is_reported_not_an_error() {
    let dir = workdir("budget");
    let prefix = dir.join("p30");
    let prefix = prefix.to_str().unwrap();
    assert!(burn(&["gen", "path", "30", "--out", prefix])
        .status
        .success());
    let out = burn(&[
        "exact",
        "--graph",
        &format!("{prefix}.burn"),
        "--budget",
        "2",
    ]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), "outcome: budget-exceeded (budget 2)");
}

#[test]
fn stdout_is_byte_identical_across_runs() {
    let dir = workdir("det");
    let prefix = dir.join("kt");
    let prefix = prefix.to_str().unwrap();
    assert!(
        burn(&["gen", "ktree", "20", "2", "--seed", "3", "--out", prefix])
            .status
            .success()
    );
    let graph_file = format!("{prefix}.burn");
    let decomp_file = format!("{prefix}.tdec");
    let first_graph = fs::read(&graph_file).unwrap();
    let first_decomp = fs::read(&decomp_file).unwrap();

    // regenerating with the same seed reproduces the files byte-for-byte
    assert!(
        burn(&["gen", "ktree", "20", "2", "--seed", "3", "--out", prefix])
            .status
            .success()
    );
    assert_eq!(fs::read(&graph_file).unwrap(), first_graph);
    assert_eq!(fs::read(&decomp_file).unwrap(), first_decomp);

    for args in [
        vec!["exact", "--graph", &graph_file, "--json"],
        vec!["dense", "--graph", &graph_file],
        vec![
            "treelen",
            "--graph",
            &graph_file,
            "--decomp",
            &decomp_file,
            "--json",
        ],
        vec!["bounds", "--graph", &graph_file, "--decomp", &decomp_file],
    ] {
        let a = burn(&args);
        let b = burn(&args);
        assert!(a.status.success(), "{args:?}");
        assert_eq!(a.stdout, b.stdout, "stdout differs for {args:?}");
    }
}
