//! Instrumentation counters reported alongside solver results.

use std::sync::atomic::{AtomicU64, Ordering};

use serde::{Deserialize, Serialize};

/// Shared mutable counters; safe to update from worker threads. The
/// totals are deterministic because the multiset of counted events does
/// not depend on scheduling.
#[derive(Debug, Default)]
pub struct Counters {
    pub intersection_calls: AtomicU64,
    pub augmentations: AtomicU64,
    pub candidate_profiles: AtomicU64,
    pub achievable_profiles: AtomicU64,
    pub comparisons: AtomicU64,
    pub evaluations: AtomicU64,
    pub subproblems: AtomicU64,
}

impl Counters {
    pub fn new() -> Self {
        Counters::default()
    }

    pub fn bump(field: &AtomicU64) {
        field.fetch_add(1, Ordering::Relaxed);
    }

    pub fn add(field: &AtomicU64, amount: u64) {
        field.fetch_add(amount, Ordering::Relaxed);
    }

    /// Immutable snapshot; `oracle_queries` is supplied by the caller
    /// because the query counter lives on the matroid itself.
    pub fn snapshot(&self, oracle_queries: u64) -> Instrumentation {
        Instrumentation {
            oracle_queries,
            intersection_calls: self.intersection_calls.load(Ordering::Relaxed),
            augmentations: self.augmentations.load(Ordering::Relaxed),
            candidate_profiles: self.candidate_profiles.load(Ordering::Relaxed),
            achievable_profiles: self.achievable_profiles.load(Ordering::Relaxed),
            comparisons: self.comparisons.load(Ordering::Relaxed),
            evaluations: self.evaluations.load(Ordering::Relaxed),
            subproblems: self.subproblems.load(Ordering::Relaxed),
        }
    }
}

/// Counter snapshot serialized into result files.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Instrumentation {
    pub oracle_queries: u64,
    pub intersection_calls: u64,
    pub augmentations: u64,
    pub candidate_profiles: u64,
    pub achievable_profiles: u64,
    pub comparisons: u64,
    pub evaluations: u64,
    pub subproblems: u64,
}
