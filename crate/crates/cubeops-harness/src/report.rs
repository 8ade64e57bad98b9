//! Report data for a harness run.
//!
//! Reports carry only data that is a pure function of the run's
//! [`SuiteConfig`](crate::SuiteConfig): suite and law names, verdicts,
//! case counts, and minimal-index counterexamples. Wall-clock timings are
//! returned alongside the report, never inside it, so the rendered JSON is
//! byte-identical across runs and across execution modes.

use serde::{Deserialize, Serialize};

use crate::gen::SuiteConfig;

/// Everything needed to re-run one failing case: the law's coordinates in
/// the registry plus the case index and its derived seed.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counterexample {
    pub suite: String,
    pub law: String,
    pub case_index: u64,
    pub case_seed: u64,
    pub message: String,
}

/// Verdict for one law: every case is always executed, and a failing law
/// reports the counterexample with the smallest case index.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LawReport {
    pub law: String,
    pub pass: bool,
    pub checked: u64,
    pub counterexample: Option<Counterexample>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub suite: String,
    pub pass: bool,
    pub laws: Vec<LawReport>,
}

/// A full run: the configuration it was derived from and one report per
/// selected suite, sorted by suite name.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RunReport {
    pub config: SuiteConfig,
    pub pass: bool,
    pub suites: Vec<SuiteReport>,
}

impl RunReport {
    /// All counterexamples in the run, in report order.
    pub fn counterexamples(&self) -> Vec<&Counterexample> {
        self.suites
            .iter()
            .flat_map(|s| s.laws.iter())
            .filter_map(|l| l.counterexample.as_ref())
            .collect()
    }
}

/// Wall-clock duration of one suite, reported out of band.
#[derive(Clone, Debug)]
pub struct SuiteTiming {
    pub suite: String,
    pub millis: u128,
}

/// Report plus timings; only the report is part of the deterministic
/// contract.
#[derive(Clone, Debug)]
pub struct RunOutcome {
    pub report: RunReport,
    pub timings: Vec<SuiteTiming>,
}

/// The canonical JSON form of a report: pretty-printed with a trailing
/// newline. Byte-identical for equal reports.
pub fn render_json(report: &RunReport) -> String {
    let mut out = serde_json::to_string_pretty(report).expect("report serializes");
    out.push('\n');
    out
}
