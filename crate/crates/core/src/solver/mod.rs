//! Exact Turán and anti-Ramsey numbers on tiny hosts, lower-bound
//! certificates, and Monte-Carlo rainbow frequencies.
//!
//! Both exact searches split their tree into a fixed frontier of subtrees.
//! The leftmost subtree runs first and its optimum seeds the others, which
//! then run independently, so values, witnesses and node counts do not
//! depend on the thread count.

use std::sync::atomic::{AtomicBool, AtomicU64, Ordering};
use std::time::{Duration, Instant};

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::exec::Execution;
use crate::formulas;
use crate::model::{write_arc, Coloring, EdgeSet, EdgeSetDoc, HostGraph};
use crate::motif::MotifSpec;

mod anti_ramsey;
mod sample;
mod turan;

pub use anti_ramsey::{ar_exact, ar_exact_with, ar_lower_certificate};
pub use sample::{rainbow_probability, rainbow_probability_with, Estimate};
pub use turan::{turan_exact, turan_exact_with};

/// Default edge cap for the anti-Ramsey partition search.
pub const AR_EDGE_CAP: usize = 16;
/// Default edge cap for the Turán branch-and-bound.
pub const TURAN_EDGE_CAP: usize = 120;

/// Node and wall-clock limits for one solve.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Budget {
    pub max_nodes: u64,
    pub max_millis: u64,
}

impl Budget {
    pub fn new(max_nodes: u64, max_time: Duration) -> Result<Self> {
        let max_millis = max_time.as_millis().min(u64::MAX as u128) as u64;
        if max_nodes == 0 || max_millis == 0 {
            return Err(Error::invalid("budget limits must be positive"));
        }
        Ok(Budget { max_nodes, max_millis })
    }
}

impl Default for Budget {
    fn default() -> Self {
        Budget { max_nodes: 2_000_000_000, max_millis: 600_000 }
    }
}

/// Budget, edge cap and execution mode for a solve.
#[derive(Clone, Copy, Debug, Default)]
pub struct SolveConfig {
    pub budget: Budget,
    /// Overrides the solver's default edge cap.
    pub edge_cap: Option<usize>,
    pub exec: Execution,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Problem {
    Turan,
    AntiRamsey,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SolveStatus {
    Proven,
    BudgetExceeded,
    /// The motif has no copy in the host, so no coloring can contain a
    /// rainbow one.
    Unattainable,
}

/// Extremal family (Turán) or optimal coloring (anti-Ramsey).
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SolveWitness {
    Family(EdgeSet),
    Coloring(Coloring),
}

impl Serialize for SolveWitness {
    fn serialize<S: Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        #[serde(rename_all = "kebab-case")]
        enum Doc {
            Family(EdgeSetDoc),
            Coloring(String),
        }
        match self {
            SolveWitness::Family(set) => Doc::Family(EdgeSetDoc::from(set)).serialize(ser),
            SolveWitness::Coloring(c) => Doc::Coloring(write_arc(c)).serialize(ser),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SolveResult {
    pub problem: Problem,
    pub n: u32,
    pub s: u32,
    pub motif: MotifSpec,
    pub status: SolveStatus,
    /// Exact when proven, a lower bound when the budget ran out, absent
    /// when unattainable.
    pub value: Option<u64>,
    pub witness: Option<SolveWitness>,
    pub nodes_explored: u64,
    pub budget: Budget,
    /// Hypothesis of the matching closed form, or "outside proven regime".
    pub regime: String,
}

impl SolveResult {
    pub fn family(&self) -> Option<&EdgeSet> {
        match &self.witness {
            Some(SolveWitness::Family(set)) => Some(set),
            _ => None,
        }
    }

    pub fn coloring(&self) -> Option<&Coloring> {
        match &self.witness {
            Some(SolveWitness::Coloring(c)) => Some(c),
            _ => None,
        }
    }
}

const OUTSIDE_REGIME: &str = "outside proven regime";

fn regime(problem: Problem, motif: MotifSpec, host: HostGraph) -> String {
    let report = match problem {
        Problem::Turan => formulas::ex_value(motif, host.n(), host.s()),
        Problem::AntiRamsey => formulas::ar_value(motif, host.n(), host.s()),
    };
    report.map_or_else(|_| OUTSIDE_REGIME.to_string(), |r| r.regime)
}

fn check_cap(host: HostGraph, cap: usize) -> Result<usize> {
    let m = host.materialized_edge_count()?;
    if m > cap {
        return Err(Error::ResourceLimit(format!("{host} has {m} edges, solver cap is {cap}")));
    }
    Ok(m)
}

/// Shared node counter and stop flag.
struct Limits {
    budget: Budget,
    start: Instant,
    nodes: AtomicU64,
    stop: AtomicBool,
}

const FLUSH_EVERY: u64 = 64;

impl Limits {
    fn new(budget: Budget) -> Self {
        Limits { budget, start: Instant::now(), nodes: AtomicU64::new(0), stop: AtomicBool::new(false) }
    }

    fn stopped(&self) -> bool {
        self.stop.load(Ordering::Relaxed)
    }
}

/// Per-task node counter that reports to [`Limits`] in batches.
struct Meter<'a> {
    limits: &'a Limits,
    count: u64,
    pending: u64,
}

impl<'a> Meter<'a> {
    fn new(limits: &'a Limits) -> Self {
        Meter { limits, count: 0, pending: 0 }
    }

    /// Counts a node; `false` once any task has exhausted the budget.
    fn tick(&mut self) -> bool {
        self.count += 1;
        self.pending += 1;
        if self.pending >= FLUSH_EVERY {
            self.flush();
        }
        !self.limits.stopped()
    }

    fn flush(&mut self) {
        let total = self.limits.nodes.fetch_add(self.pending, Ordering::Relaxed) + self.pending;
        self.pending = 0;
        let b = self.limits.budget;
        if total > b.max_nodes || self.limits.start.elapsed() > Duration::from_millis(b.max_millis) {
            self.limits.stop.store(true, Ordering::Relaxed);
        }
    }
}
