//! Exhaustive populations and theorem-verification suites.

pub mod enumerate;
pub mod suites;

use std::collections::BTreeMap;
use std::sync::atomic::{AtomicU64, Ordering};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::text::render_document;

pub use enumerate::{enumerate_single_degree_ideals, MonomialTable, SubsetEnumerator, DEFAULT_BUDGET};
pub use suites::{run_suite, SUITES};

/// Caps the number of instances a run may evaluate.
#[derive(Debug)]
pub struct Budget {
    limit: u64,
    used: AtomicU64,
}

impl Budget {
    pub fn new(limit: u64) -> Self {
        Budget { limit, used: AtomicU64::new(0) }
    }

    pub fn limit(&self) -> u64 {
        self.limit
    }

    pub fn used(&self) -> u64 {
        self.used.load(Ordering::Relaxed)
    }

    /// Reserves `n` evaluations or fails without reserving any.
    pub fn charge(&self, n: u64) -> Result<()> {
        let before = self.used.fetch_add(n, Ordering::Relaxed);
        let after = before.saturating_add(n);
        if after > self.limit {
            self.used.fetch_sub(n, Ordering::Relaxed);
            return Err(Error::BudgetExceeded { budget: self.limit, needed: after });
        }
        Ok(())
    }
}

/// Population bounds for a suite run; `None` picks the suite's default.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuiteParams {
    pub n: Option<usize>,
    pub d: Option<u32>,
    pub budget: u64,
    pub seed: u64,
}

impl Default for SuiteParams {
    fn default() -> Self {
        SuiteParams { n: None, d: None, budget: DEFAULT_BUDGET, seed: 0x5eed }
    }
}

/// An instance violating a suite's claim, rendered so it can be fed back to the CLI.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub ideal: String,
    pub detail: String,
}

/// Counts and counterexamples from a chunk of work; merged in chunk order.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Tally {
    pub population: u64,
    pub counts: BTreeMap<String, u64>,
    pub counterexamples: Vec<Counterexample>,
}

const MAX_STORED_COUNTEREXAMPLES: usize = 50;

impl Tally {
    pub fn count(&mut self, key: &str) {
        *self.counts.entry(key.to_string()).or_default() += 1;
    }

    pub fn fail(&mut self, ideal: &MonomialIdeal, detail: impl Into<String>) {
        self.count("counterexamples");
        if self.counterexamples.len() < MAX_STORED_COUNTEREXAMPLES {
            self.counterexamples.push(Counterexample { ideal: render_document(ideal), detail: detail.into() });
        }
    }

    /// Counts `key` when `ok`, records a counterexample otherwise.
    pub fn check(&mut self, ok: bool, ideal: &MonomialIdeal, detail: &str) {
        if ok {
            self.count("checked");
        } else {
            self.fail(ideal, detail);
        }
    }

    pub fn merge(mut self, other: Tally) -> Tally {
        self.population += other.population;
        for (k, v) in other.counts {
            *self.counts.entry(k).or_default() += v;
        }
        let room = MAX_STORED_COUNTEREXAMPLES.saturating_sub(self.counterexamples.len());
        self.counterexamples.extend(other.counterexamples.into_iter().take(room));
        self
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub n_max: usize,
    pub d_max: u32,
    pub population: u64,
    /// Instances passing each filter or predicate, by name.
    pub counts: BTreeMap<String, u64>,
    pub counterexamples: Vec<Counterexample>,
    /// Wall-clock time; the only field that varies between identical runs.
    pub elapsed_ms: u64,
}

impl SuiteReport {
    pub fn clean(&self) -> bool {
        self.counts.get("counterexamples").copied().unwrap_or(0) == 0
    }

    pub fn count(&self, key: &str) -> u64 {
        self.counts.get(key).copied().unwrap_or(0)
    }
}
