//! Shared bookkeeping for the bounded combinatorial searches.

use std::time::{Duration, Instant};

use serde::Serialize;

/// How a bounded search ended.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    /// A witness was found.
    Witness,
    /// The whole space was explored without finding a witness.
    Refuted,
    /// The node or time budget ran out first. Says nothing about existence.
    BudgetExhausted,
}

/// Witness-or-refutation result of a search plus its statistics.
#[derive(Clone, Debug)]
pub struct SearchOutcome<T> {
    pub status: Status,
    pub witness: Option<T>,
    pub nodes_expanded: u64,
    pub elapsed: Duration,
}

impl<T> SearchOutcome<T> {
    pub fn is_witness(&self) -> bool {
        self.status == Status::Witness
    }

    pub fn is_refuted(&self) -> bool {
        self.status == Status::Refuted
    }

    /// `Some(true)` on a witness, `Some(false)` on an exhaustive refutation,
    /// `None` when the budget ran out.
    pub fn verdict(&self) -> Option<bool> {
        match self.status {
            Status::Witness => Some(true),
            Status::Refuted => Some(false),
            Status::BudgetExhausted => None,
        }
    }

    pub fn map<U>(self, f: impl FnOnce(T) -> U) -> SearchOutcome<U> {
        SearchOutcome {
            status: self.status,
            witness: self.witness.map(f),
            nodes_expanded: self.nodes_expanded,
            elapsed: self.elapsed,
        }
    }

    pub(crate) fn witness(w: T, meter: &Meter) -> Self {
        SearchOutcome {
            status: Status::Witness,
            witness: Some(w),
            nodes_expanded: meter.nodes,
            elapsed: meter.start.elapsed(),
        }
    }

    pub(crate) fn without_witness(meter: &Meter) -> Self {
        SearchOutcome {
            status: if meter.exhausted {
                Status::BudgetExhausted
            } else {
                Status::Refuted
            },
            witness: None,
            nodes_expanded: meter.nodes,
            elapsed: meter.start.elapsed(),
        }
    }
}

/// Limits on a single search. `None` means unlimited.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Budget {
    pub max_nodes: Option<u64>,
    pub max_time: Option<Duration>,
}

impl Budget {
    pub const UNLIMITED: Budget = Budget {
        max_nodes: None,
        max_time: None,
    };

    pub fn nodes(max_nodes: u64) -> Self {
        Budget {
            max_nodes: Some(max_nodes),
            max_time: None,
        }
    }
}

/// Counts expanded nodes and trips once the budget is spent.
pub(crate) struct Meter {
    budget: Budget,
    pub(crate) nodes: u64,
    pub(crate) start: Instant,
    pub(crate) exhausted: bool,
}

impl Meter {
    pub(crate) fn new(budget: Budget) -> Self {
        Meter {
            budget,
            nodes: 0,
            start: Instant::now(),
            exhausted: false,
        }
    }

    /// Records one node; false once the budget is exhausted.
    #[inline]
    pub(crate) fn tick(&mut self) -> bool {
        if self.exhausted {
            return false;
        }
        self.nodes += 1;
        if self.budget.max_nodes.is_some_and(|m| self.nodes > m) {
            self.exhausted = true;
        } else if self.nodes.is_multiple_of(1024) {
            if let Some(t) = self.budget.max_time {
                if self.start.elapsed() > t {
                    self.exhausted = true;
                }
            }
        }
        !self.exhausted
    }
}
