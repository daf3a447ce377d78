use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hypertrees"))
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

#[test]
fn count_examples() {
    assert_eq!(
        stdout(&["count", "--kind", "plain", "--n", "4"]),
        "1 + 12t + 16t^2 (t=1: 29)\n"
    );
    assert_eq!(
        stdout(&[
            "count",
            "--kind",
            "plain",
            "--decoration",
            "prelie",
            "--n",
            "3"
        ]),
        "2 + 3t (t=1: 5)\n"
    );
    assert_eq!(stdout(&["count", "--kind", "hollow", "--n", "1"]), "1\n");
    assert_eq!(
        stdout(&["count", "--kind", "plain", "--n", "3", "--t", "2"]),
        "1 + 3t (t=2: 7)\n"
    );
}

#[test]
fn enumerate_examples() {
    assert_eq!(
        stdout(&["enumerate", "--kind", "plain", "--n", "3"])
            .lines()
            .count(),
        4
    );
    assert_eq!(
        stdout(&["enumerate", "--kind", "plain", "--n", "1"]),
        "1;\n"
    );
    assert_eq!(
        stdout(&["enumerate", "--kind", "hollow", "--n", "2"])
            .lines()
            .count(),
        3
    );
}

#[test]
fn enumerate_json_matches_text() {
    let text = stdout(&["enumerate", "--kind", "rooted", "--n", "3"]);
    let json: Vec<String> = serde_json::from_str(&stdout(&[
        "enumerate",
        "--kind",
        "rooted",
        "--n",
        "3",
        "--format",
        "json",
    ]))
    .unwrap();
    assert_eq!(json, text.lines().collect::<Vec<_>>());
}

#[test]
fn series_examples() {
    assert_eq!(stdout(&["series", "--kind", "plain", "--N", "0"]), "");
    let lie = stdout(&[
        "series",
        "--kind",
        "rooted",
        "--decoration",
        "lie",
        "--N",
        "4",
    ]);
    assert_eq!(lie, "1: t^-1\n2: 2\n3: 3 + 9t\n4: 8 + 48t + 64t^2\n");
    let csv = stdout(&["series", "--kind", "plain", "--N", "3", "--format", "csv"]);
    assert_eq!(csv, "n,k,coeff\n1,-1,1\n2,0,1\n3,0,1\n3,1,3\n");
}

#[test]
fn cis_json_records() {
    let out = stdout(&[
        "cis",
        "--kind",
        "hollow",
        "--decoration",
        "prelie",
        "--N",
        "3",
        "--format",
        "json",
    ]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    let recs = v.as_array().unwrap();
    let parts: Vec<Vec<u64>> = recs
        .iter()
        .map(|r| {
            r["partition"]
                .as_array()
                .unwrap()
                .iter()
                .map(|p| p.as_u64().unwrap())
                .collect()
        })
        .collect();
    assert_eq!(parts, vec![vec![1], vec![1, 1], vec![2, 1], vec![1, 1, 1]]);
    assert_eq!(recs[1]["coeff"]["0"], "1");
    assert_eq!(recs[1]["coeff"]["1"], "1");
    assert_eq!(recs[2]["coeff"]["0"], "1/2");
    assert_eq!(recs[2]["coeff"]["2"], "1/2");
    assert!(out
        .trim_start_matches(|c: char| c == '[' || c.is_whitespace())
        .starts_with("{\n    \"partition\""));
}

#[test]
fn verify_examples() {
    assert!(stdout(&["verify", "--suite", "dissymmetry", "--n-max", "5"]).ends_with("0 failed\n"));
    assert!(stdout(&["verify", "--suite", "lambda", "--degree", "4"]).ends_with("0 failed\n"));
    assert!(stdout(&["verify", "--suite", "all", "--n-max", "2"]).ends_with("0 failed\n"));
}

#[test]
fn exit_codes() {
    assert_eq!(
        run(&["count", "--kind", "plain", "--n", "7"]).status.code(),
        Some(3)
    );
    assert_eq!(
        run(&["cis", "--kind", "plain", "--N", "9"]).status.code(),
        Some(3)
    );
    assert_eq!(
        run(&["count", "--kind", "tree", "--n", "2"]).status.code(),
        Some(2)
    );
    assert_eq!(run(&["count", "--kind", "plain"]).status.code(), Some(2));
    assert_eq!(
        run(&[
            "cis",
            "--kind",
            "plain",
            "--decoration",
            "cycle",
            "--N",
            "3"
        ])
        .status
        .code(),
        Some(2)
    );
    assert_eq!(
        run(&["verify", "--suite", "nothing"]).status.code(),
        Some(2)
    );
}
