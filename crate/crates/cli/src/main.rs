use std::fmt::Write as _;
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Map, Value};

use hypertree_core::cis::decorated_cis;
use hypertree_core::egf::closed_series;
use hypertree_core::foundation::{BigRat, TPoly};
use hypertree_core::hypertree::{decorated_count, enumerate_with_limit, Kind, DEFAULT_LIMIT};
use hypertree_core::species::BlockSpecies;
use hypertree_core::verify::{self, Limits, Suite};
use hypertree_core::Error;

/// Largest degree accepted by `series`.
const SERIES_LIMIT: u32 = 30;
/// Largest degree accepted by `cis` and `verify --degree`.
const CIS_LIMIT: u32 = 8;

#[derive(Parser)]
#[command(
    name = "hypertrees",
    version,
    about = "Counting, enumeration and cycle index series of decorated hypertrees"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Count structures on n labels, graded by t^(edges - 1).
    Count(CountArgs),
    /// List structures on n labels in canonical text form.
    Enumerate(EnumerateArgs),
    /// Count series of decorated structures up to degree N.
    Series(SeriesArgs),
    /// Cycle index series of decorated structures up to degree N.
    Cis(SeriesArgs),
    /// Run verification suites.
    Verify(VerifyArgs),
}

#[derive(Clone, Copy, Default, ValueEnum)]
enum Format {
    #[default]
    Text,
    Json,
    Csv,
}

#[derive(Args)]
struct CountArgs {
    #[arg(long, value_parser = parse_kind)]
    kind: Kind,
    #[arg(long, value_parser = parse_block, default_value = "comm")]
    decoration: BlockSpecies,
    #[arg(long)]
    n: u32,
    /// Evaluate at this rational value of t instead of t = 1.
    #[arg(long, value_parser = parse_rat)]
    t: Option<BigRat>,
    #[arg(long, value_enum, default_value_t)]
    format: Format,
    /// Largest n accepted for brute-force enumeration.
    #[arg(long = "n-max", default_value_t = 6)]
    n_max: u32,
}

#[derive(Args)]
struct EnumerateArgs {
    #[arg(long, value_parser = parse_kind)]
    kind: Kind,
    #[arg(long)]
    n: u32,
    #[arg(long, value_enum, default_value_t)]
    format: Format,
    #[arg(long = "n-max", default_value_t = 6)]
    n_max: u32,
}

#[derive(Args)]
struct SeriesArgs {
    #[arg(long, value_parser = parse_kind)]
    kind: Kind,
    #[arg(long, value_parser = parse_block, default_value = "comm")]
    decoration: BlockSpecies,
    #[arg(long = "N", visible_alias = "degree")]
    degree: u32,
    #[arg(long, value_parser = parse_rat)]
    t: Option<BigRat>,
    #[arg(long, value_enum, default_value_t)]
    format: Format,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long, value_parser = parse_suite, default_value = "all")]
    suite: Suite,
    /// Largest n for brute-force comparisons.
    #[arg(long = "n-max", default_value_t = 6)]
    n_max: u32,
    /// Largest degree for cycle index comparisons.
    #[arg(long, default_value_t = 5)]
    degree: u32,
    /// Number of suites run side by side.
    #[arg(long, default_value_t = 1)]
    threads: usize,
    #[arg(long, value_enum, default_value_t)]
    format: Format,
}

fn parse_kind(s: &str) -> Result<Kind, String> {
    Kind::parse(s).map_err(|e| e.to_string())
}

fn parse_block(s: &str) -> Result<BlockSpecies, String> {
    BlockSpecies::parse(s).map_err(|e| e.to_string())
}

fn parse_rat(s: &str) -> Result<BigRat, String> {
    BigRat::from_str(s).map_err(|_| format!("not a rational number: {s}"))
}

fn parse_suite(s: &str) -> Result<Suite, String> {
    Suite::parse(s).map_err(|e| e.to_string())
}

enum Failure {
    Usage(String),
    Limit(String),
    Mismatch(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::OverLimit { .. } => Failure::Limit(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

fn check_limit(what: &str, value: u32, limit: u32) -> Result<(), Failure> {
    if value > limit {
        return Err(Failure::Limit(format!(
            "{what} {value} exceeds the limit {limit}"
        )));
    }
    Ok(())
}

fn csv_quote(s: &str) -> String {
    format!("\"{}\"", s.replace('"', "\"\""))
}

fn with_value(p: &TPoly, t: &Option<BigRat>) -> String {
    match t {
        Some(t) => format!("{p} (t={t}: {})", p.eval(t)),
        None => p.to_string(),
    }
}

/// `{n, k, coeff}` records, plus `{n, t, value}` records when `t` is given.
fn triples(rows: &[(u32, &TPoly)], t: &Option<BigRat>) -> Value {
    let mut out = Vec::new();
    for &(n, p) in rows {
        for (k, c) in p.terms() {
            out.push(json!({"n": n, "k": k, "coeff": c.to_string()}));
        }
    }
    if let Some(t) = t {
        for &(n, p) in rows {
            out.push(json!({"n": n, "t": t.to_string(), "value": p.eval(t).to_string()}));
        }
    }
    Value::Array(out)
}

fn csv_rows(rows: &[(u32, &TPoly)]) -> String {
    let mut s = String::from("n,k,coeff\n");
    for &(n, p) in rows {
        for (k, c) in p.terms() {
            let _ = writeln!(s, "{n},{k},{c}");
        }
    }
    s
}

fn pretty(v: &Value) -> String {
    serde_json::to_string_pretty(v).expect("serialisable") + "\n"
}

fn count(a: &CountArgs) -> Result<String, Failure> {
    check_limit("n", a.n, a.n_max.min(DEFAULT_LIMIT))?;
    let p = decorated_count(a.kind, &a.decoration, a.n)?;
    Ok(match a.format {
        Format::Text => {
            let t =
                a.t.clone()
                    .unwrap_or_else(|| BigRat::from_integer(1.into()));
            if p.as_constant().is_some() {
                format!("{p}\n")
            } else {
                format!("{}\n", with_value(&p, &Some(t)))
            }
        }
        Format::Json => pretty(&triples(&[(a.n, &p)], &a.t)),
        Format::Csv => csv_rows(&[(a.n, &p)]),
    })
}

fn enumerate(a: &EnumerateArgs) -> Result<String, Failure> {
    check_limit("n", a.n, a.n_max.min(DEFAULT_LIMIT))?;
    let texts: Vec<String> = enumerate_with_limit(a.kind, a.n, DEFAULT_LIMIT)?
        .iter()
        .map(|v| v.to_text())
        .collect();
    Ok(match a.format {
        Format::Text => texts.iter().map(|t| format!("{t}\n")).collect(),
        Format::Json => pretty(&json!(texts)),
        Format::Csv => {
            let mut s = String::from("structure\n");
            for t in &texts {
                let _ = writeln!(s, "{}", csv_quote(t));
            }
            s
        }
    })
}

fn series(a: &SeriesArgs) -> Result<String, Failure> {
    check_limit("degree", a.degree, SERIES_LIMIT)?;
    let e = closed_series(a.kind, &a.decoration, a.degree)?;
    let rows: Vec<(u32, &TPoly)> = (1..=a.degree).map(|n| (n, e.coeff(n))).collect();
    Ok(match a.format {
        Format::Text => rows
            .iter()
            .map(|(n, p)| format!("{n}: {}\n", with_value(p, &a.t)))
            .collect(),
        Format::Json => pretty(&triples(&rows, &a.t)),
        Format::Csv => csv_rows(&rows),
    })
}

fn cis(a: &SeriesArgs) -> Result<String, Failure> {
    check_limit("degree", a.degree, CIS_LIMIT)?;
    let z = decorated_cis(a.kind, &a.decoration, a.degree)?;
    Ok(match a.format {
        Format::Text => z
            .terms()
            .map(|(l, c)| format!("p{l}: {}\n", with_value(c, &a.t)))
            .collect(),
        Format::Json => {
            let records: Vec<Value> = z
                .terms()
                .map(|(l, c)| {
                    let coeff: Map<String, Value> = c
                        .terms()
                        .map(|(k, r)| (k.to_string(), Value::String(r.to_string())))
                        .collect();
                    let mut rec = json!({"partition": l.parts(), "coeff": coeff});
                    if let Some(t) = &a.t {
                        rec["value"] = Value::String(c.eval(t).to_string());
                    }
                    rec
                })
                .collect();
            pretty(&Value::Array(records))
        }
        Format::Csv => {
            let mut s = String::from("partition,k,coeff\n");
            for (l, c) in z.terms() {
                let parts: Vec<String> = l.parts().iter().map(|p| p.to_string()).collect();
                for (k, r) in c.terms() {
                    let _ = writeln!(s, "{},{k},{r}", parts.join(" "));
                }
            }
            s
        }
    })
}

fn run_verify(a: &VerifyArgs) -> Result<String, Failure> {
    check_limit("n-max", a.n_max, DEFAULT_LIMIT)?;
    check_limit("degree", a.degree, CIS_LIMIT)?;
    if a.threads == 0 {
        return Err(Failure::Usage("--threads must be at least 1".into()));
    }
    let limits = Limits {
        n_max: a.n_max,
        degree: a.degree,
    };
    let report = verify::run(a.suite, &limits, a.threads);
    let out = match a.format {
        Format::Text => report.to_string(),
        Format::Json => {
            let lines: Vec<Value> = report
                .lines()
                .map(|(s, t)| json!({"status": s.as_str(), "check": t}))
                .collect();
            pretty(&json!({
                "checks": report.checks(),
                "failed": report.failures(),
                "lines": lines,
            }))
        }
        Format::Csv => {
            let mut s = String::from("status,check\n");
            for (st, t) in report.lines() {
                let _ = writeln!(s, "{},{}", st.as_str(), csv_quote(t));
            }
            s
        }
    };
    if report.passed() {
        Ok(out)
    } else {
        Err(Failure::Mismatch(out))
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Count(a) => count(a),
        Command::Enumerate(a) => enumerate(a),
        Command::Series(a) => series(a),
        Command::Cis(a) => cis(a),
        Command::Verify(a) => run_verify(a),
    };
    match result {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(Failure::Mismatch(out)) => {
            print!("{out}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(2)
        }
        Err(Failure::Limit(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(3)
        }
    }
}
