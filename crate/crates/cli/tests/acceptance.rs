//! One line per acceptance criterion, each drawn from the verification
//! report at the default limits (n ≤ 6 for brute force, degree ≤ 5).

use std::process::Command;

use hypertree_core::verify::{run, Limits, Report, Status, Suite};

struct Criterion {
    name: &'static str,
    select: fn(&str) -> bool,
}

fn has(line: &str, suite: &str, needles: &[&str]) -> bool {
    line.starts_with(&format!("{suite}: "))
        && (needles.is_empty() || needles.iter().any(|n| line.contains(n)))
}

const CRITERIA: [Criterion; 11] = [
    Criterion {
        name: "hypertree counts 1, 1, 4, 29, 311, 4447 and decorated series, n <= 6",
        select: |l| has(l, "theorem_cor_s", &[]),
    },
    Criterion {
        name: "dissymmetry for Comm, Assoc, Perm, Cycle, PreLie, Lie, n <= 6",
        select: |l| has(l, "dissymmetry", &["H + H^re"]),
    },
    Criterion {
        name: "box-tree counts n <= 6 and weighted counts n <= 5",
        select: |l| has(l, "bijections", &["box-tree counts"]),
    },
    Criterion {
        name: "bijection round trips n <= 5 and worked examples",
        select: |l| {
            has(
                l,
                "bijections",
                &["round trips", "bijection", "worked examples"],
            )
        },
    },
    Criterion {
        name: "PreLie and Lie closed counts, Lie = Cycle",
        select: |l| {
            !l.contains("cycle index")
                && (has(l, "prelie", &["series"]) || has(l, "lie", &["series", "Cycle"]))
        },
    },
    Criterion {
        name: "weighted refinement for Comm and PreLie, n <= 5",
        select: |l| has(l, "weighted", &[]),
    },
    Criterion {
        name: "cycle index engine laws, degree <= 5",
        select: |l| {
            has(l, "cis", &[]) && !l.contains("fixed points") && !l.contains("specialisation")
        },
    },
    Criterion {
        name: "cycle index fixed points vs brute force, n <= 5",
        select: |l| has(l, "cis", &["fixed points"]),
    },
    Criterion {
        name: "closed cycle indices vs equations, degree <= 5",
        select: |l| has(l, "prelie", &["cycle index"]) || has(l, "lie", &["cycle index"]),
    },
    Criterion {
        name: "operad identities, degree <= 5",
        select: |l| has(l, "lambda", &[]),
    },
    Criterion {
        name: "HAC and HAL relations, degree <= 5",
        select: |l| has(l, "bidecorated", &["HAC", "HAL"]),
    },
];

/// Passes when at least one selected check exists and none failed.
fn judge(report: &Report, select: fn(&str) -> bool) -> (bool, usize, Vec<String>) {
    let mut n = 0;
    let mut failed = Vec::new();
    for (status, text) in report.lines() {
        if !select(text) {
            continue;
        }
        match status {
            Status::Pass => n += 1,
            Status::Fail => {
                n += 1;
                failed.push(text.to_string());
            }
            Status::Info => {}
        }
    }
    (n > 0 && failed.is_empty(), n, failed)
}

fn verify_all() -> Vec<u8> {
    let out = Command::new(env!("CARGO_BIN_EXE_hypertrees"))
        .args(["verify", "--suite", "all", "--threads", "4"])
        .output()
        .expect("binary runs");
    out.stdout
}

fn main() {
    let report = run(Suite::All, &Limits::default(), 4);
    let mut all_ok = true;
    for (i, c) in CRITERIA.iter().enumerate() {
        let (ok, n, failed) = judge(&report, c.select);
        all_ok &= ok;
        println!(
            "criterion {:>2} {} {} ({n} checks)",
            i + 1,
            if ok { "PASS" } else { "FAIL" },
            c.name
        );
        for f in failed {
            println!("    {f}");
        }
    }
    let first = verify_all();
    let second = verify_all();
    let same = !first.is_empty() && first == second && first == report.to_string().into_bytes();
    all_ok &= same;
    println!(
        "criterion 12 {} two runs of verify --suite all give identical reports",
        if same { "PASS" } else { "FAIL" }
    );
    if !all_ok {
        eprintln!("some acceptance criteria failed");
        std::process::exit(1);
    }
}
