//! Verification suites comparing every closed form and bijection against an
//! independent computation. Reports are deterministic text.

mod suites;

use std::fmt;
use std::thread;

use crate::cis::Identity;
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Suite {
    Bijections,
    CountSeries,
    Dissymmetry,
    PreLie,
    Lie,
    Weighted,
    Cis,
    Bidecorated,
    Lambda,
    All,
}

impl Suite {
    /// Every concrete suite, in report order.
    pub const EACH: [Suite; 9] = [
        Suite::Bijections,
        Suite::CountSeries,
        Suite::Dissymmetry,
        Suite::PreLie,
        Suite::Lie,
        Suite::Weighted,
        Suite::Cis,
        Suite::Bidecorated,
        Suite::Lambda,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            Suite::Bijections => "bijections",
            Suite::CountSeries => "theorem_cor_s",
            Suite::Dissymmetry => "dissymmetry",
            Suite::PreLie => "prelie",
            Suite::Lie => "lie",
            Suite::Weighted => "weighted",
            Suite::Cis => "cis",
            Suite::Bidecorated => "bidecorated",
            Suite::Lambda => "lambda",
            Suite::All => "all",
        }
    }

    pub fn parse(s: &str) -> Result<Suite> {
        Suite::EACH
            .into_iter()
            .chain([Suite::All])
            .find(|x| x.as_str() == s)
            .ok_or_else(|| Error::UnknownName(s.to_string()))
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Size limits: `n_max` for brute-force enumeration, `degree` for cycle index series.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    pub n_max: u32,
    pub degree: u32,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            n_max: 6,
            degree: 5,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
    /// Reported but not asserted.
    Info,
}

impl Status {
    pub fn as_str(&self) -> &'static str {
        match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Info => "INFO",
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Report {
    lines: Vec<(Status, String)>,
}

impl Report {
    fn push(&mut self, status: Status, suite: Suite, text: String) {
        self.lines.push((status, format!("{suite}: {text}")));
    }

    /// Records a check; an `Err` counts as a failure.
    pub(crate) fn check(&mut self, suite: Suite, name: &str, outcome: Result<Option<String>>) {
        match outcome {
            Ok(None) => self.push(Status::Pass, suite, name.to_string()),
            Ok(Some(why)) => self.push(Status::Fail, suite, format!("{name}: {why}")),
            Err(e) => self.push(Status::Fail, suite, format!("{name}: error: {e}")),
        }
    }

    pub(crate) fn info(&mut self, suite: Suite, text: String) {
        self.push(Status::Info, suite, text);
    }

    pub(crate) fn identities(&mut self, suite: Suite, ids: Result<Vec<Identity>>) {
        let ids = match ids {
            Ok(ids) => ids,
            Err(e) => return self.check(suite, "identities", Err(e)),
        };
        for id in ids {
            let diff = id
                .first_difference()
                .map(|(l, a, b)| format!("at p{l}: {a} vs {b}"));
            if id.asserted {
                self.check(suite, &id.name, Ok(diff));
            } else {
                let verdict = diff.unwrap_or_else(|| "holds".into());
                self.info(suite, format!("{} (printed form): {verdict}", id.name));
            }
        }
    }

    /// Lines in order, each text starting with `suite: `.
    pub fn lines(&self) -> impl Iterator<Item = (Status, &str)> {
        self.lines.iter().map(|(s, t)| (*s, t.as_str()))
    }

    pub fn checks(&self) -> usize {
        self.lines.iter().filter(|l| l.0 != Status::Info).count()
    }

    pub fn failures(&self) -> usize {
        self.lines.iter().filter(|l| l.0 == Status::Fail).count()
    }

    pub fn passed(&self) -> bool {
        self.failures() == 0
    }

    fn extend(&mut self, other: Report) {
        self.lines.extend(other.lines);
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (status, text) in &self.lines {
            writeln!(f, "{} {text}", status.as_str())?;
        }
        writeln!(f, "{} checks, {} failed", self.checks(), self.failures())
    }
}

/// Runs one suite, or all of them; `threads > 1` runs suites side by side.
/// The report does not depend on `threads`.
pub fn run(suite: Suite, limits: &Limits, threads: usize) -> Report {
    let suites: Vec<Suite> = match suite {
        Suite::All => Suite::EACH.to_vec(),
        s => vec![s],
    };
    let mut out = Report::default();
    for chunk in suites.chunks(threads.max(1)) {
        let reports: Vec<Report> = thread::scope(|sc| {
            let handles: Vec<_> = chunk
                .iter()
                .map(|&s| sc.spawn(move || suites::run_one(s, limits)))
                .collect();
            handles
                .into_iter()
                .map(|h| h.join().expect("suite panicked"))
                .collect()
        });
        for r in reports {
            out.extend(r);
        }
    }
    out
}
