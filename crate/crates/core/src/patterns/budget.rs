use std::sync::atomic::{AtomicBool, AtomicU64, AtomicUsize, Ordering};

use rayon::prelude::*;

use super::{SearchLimits, SearchOutcome, Witness};

/// Shared node counter for one search. Top-level branches are numbered; once
/// branch `k` finds a witness, every branch numbered above `k` unwinds, so
/// the reported witness is the one a sequential run would return.
pub(crate) struct Budget {
    cap: Option<u64>,
    used: AtomicU64,
    exhausted: AtomicBool,
    found_at: AtomicUsize,
}

impl Budget {
    pub(crate) fn new(cap: Option<u64>) -> Self {
        Budget {
            cap,
            used: AtomicU64::new(0),
            exhausted: AtomicBool::new(false),
            found_at: AtomicUsize::new(usize::MAX),
        }
    }

    /// Counts one node of `branch`. Returns false when the branch must unwind.
    #[inline]
    pub(crate) fn tick(&self, branch: usize) -> bool {
        if self.exhausted.load(Ordering::Relaxed) || branch > self.found_at.load(Ordering::Relaxed) {
            return false;
        }
        let used = self.used.fetch_add(1, Ordering::Relaxed) + 1;
        match self.cap {
            Some(cap) if used > cap => {
                self.exhausted.store(true, Ordering::Relaxed);
                false
            }
            _ => true,
        }
    }

    fn found(&self, branch: usize) {
        self.found_at.fetch_min(branch, Ordering::Relaxed);
    }

    pub(crate) fn nodes(&self) -> u64 {
        self.used.load(Ordering::Relaxed)
    }

    /// Runs `branch(i)` for `i in 0..count`, sequentially or over the rayon
    /// pool, and folds the result into an outcome.
    pub(crate) fn run<F>(&self, count: usize, limits: &SearchLimits, branch: F) -> SearchOutcome
    where
        F: Fn(usize) -> Option<Witness> + Sync,
    {
        let hit = |i: usize| {
            let w = branch(i);
            if w.is_some() {
                self.found(i);
            }
            w
        };
        let witness = if limits.parallel {
            (0..count).into_par_iter().find_map_first(hit)
        } else {
            (0..count).find_map(hit)
        };
        match witness {
            Some(w) => SearchOutcome::Found(w),
            None if self.exhausted.load(Ordering::Relaxed) => SearchOutcome::Exhausted { nodes: self.nodes() },
            None => SearchOutcome::Absent,
        }
    }
}
