//! Law checkers for conditional plausibility measures: the conditioning
//! axioms, acceptability, the algebraic laws on their operator domains,
//! standardness, determination by unconditional values, monotonicity,
//! and the implications tying those together.
//!
//! Checks never error on a violation; a failed law is data, carried as
//! replayable witnesses. Small spaces are swept exhaustively, larger
//! ones with a seeded event sample.

mod checks;
mod table;

pub mod replay;

pub use checks::{
    check_acceptable, check_algebraic, check_coherence, check_cpl, check_determined,
    check_monotonic, check_standard, run_suite,
};

use crate::world::Event;
use crate::Value;

/// How an instance sweep picks its event universe.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Mode {
    /// Exhaustive for up to three variables, sampled beyond.
    #[default]
    Auto,
    /// Every event; rejected for spaces with more than three variables.
    Exhaustive,
    /// A seeded structured sample of events.
    Sampled,
}

/// Tuning for a check run. The defaults suit the desk-scale suites.
#[derive(Debug, Clone)]
pub struct CheckOptions {
    pub mode: Mode,
    /// Seed for sampled event lists and budgeted probes.
    pub seed: u64,
    /// Most witnesses kept per law.
    pub witness_cap: usize,
    /// Random events added to a sampled universe.
    pub sample_events: usize,
    /// Total cap on a sampled universe.
    pub event_cap: usize,
    /// Probe count above which off-domain sweeps switch to sampling.
    pub probe_budget: u64,
}

impl Default for CheckOptions {
    fn default() -> Self {
        CheckOptions {
            mode: Mode::Auto,
            seed: crate::sampling::DEFAULT_SEED,
            witness_cap: 8,
            sample_events: 24,
            event_cap: 48,
            probe_budget: 2_000_000,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CheckStatus {
    Pass,
    Fail,
    /// The law could not be evaluated on this measure (for example the
    /// operator laws on a measure without operators).
    Skipped,
}

impl CheckStatus {
    pub fn as_str(self) -> &'static str {
        match self {
            CheckStatus::Pass => "pass",
            CheckStatus::Fail => "fail",
            CheckStatus::Skipped => "skipped",
        }
    }
}

/// One concrete violation: the events and values that exhibit it.
#[derive(Debug, Clone)]
pub struct Witness {
    pub law: &'static str,
    pub events: Vec<Event>,
    pub values: Vec<Value>,
    pub note: String,
}

/// Outcome of one law on one measure instance.
#[derive(Debug, Clone)]
pub struct LawResult {
    pub law: &'static str,
    pub status: CheckStatus,
    /// Whether a failure of this law counts against the measure.
    /// Informational probes (the unrestricted cancellation and
    /// monotonicity sweeps) report their status without being required.
    pub required: bool,
    /// Instances the sweep actually evaluated.
    pub checked: u64,
    pub witnesses: Vec<Witness>,
    pub note: Option<String>,
}

impl LawResult {
    pub fn passed_or_unrequired(&self) -> bool {
        !(self.required && self.status == CheckStatus::Fail)
    }
}

/// Outcome of one check (a group of related laws) on one measure.
#[derive(Debug, Clone)]
pub struct CheckReport {
    /// Which checker produced this report.
    pub check: &'static str,
    /// `Cpm::name()` of the measure checked.
    pub measure: String,
    pub laws: Vec<LawResult>,
}

impl CheckReport {
    pub fn passed(&self) -> bool {
        self.laws.iter().all(LawResult::passed_or_unrequired)
    }

    pub fn law(&self, name: &str) -> Option<&LawResult> {
        self.laws.iter().find(|l| l.law == name)
    }

    pub fn status_of(&self, name: &str) -> Option<CheckStatus> {
        self.law(name).map(|l| l.status)
    }
}

/// Every report produced by one full run over a measure.
#[derive(Debug, Clone)]
pub struct SuiteReport {
    pub reports: Vec<CheckReport>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.reports.iter().all(CheckReport::passed)
    }

    pub fn law(&self, name: &str) -> Option<&LawResult> {
        self.reports.iter().find_map(|r| r.law(name))
    }

    pub fn report(&self, check: &str) -> Option<&CheckReport> {
        self.reports.iter().find(|r| r.check == check)
    }
}
