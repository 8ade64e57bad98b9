//! Deterministic property-law harness for `cubeops-core`.
//!
//! Every value a law sees is a pure function of `(root seed, suite name,
//! law name, case index)`, so a failing case is identified by two integers
//! and replays exactly. Reports are plain data with a canonical JSON form:
//! two runs with the same [`SuiteConfig`] produce byte-identical reports,
//! whether cases are executed sequentially or in parallel (timings are
//! returned out of band, never embedded in the report).

pub mod gen;
pub mod report;
pub mod suites;
pub mod svg;

pub use gen::SuiteConfig;
pub use report::{
    render_json, Counterexample, LawReport, RunOutcome, RunReport, SuiteReport, SuiteTiming,
};
pub use suites::{default_suite_names, registry, replay, run_suites, Case, Law, Mode, Suite};
pub use svg::{render_svg, RenderInput};
