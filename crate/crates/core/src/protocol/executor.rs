// Copyright 2026 The framekit Authors
// SPDX-License-Identifier: Apache-2.0

use rayon::prelude::*;
use rayon::ThreadPool;

/// Environment variable capping the worker count (`0` or unset means automatic).
pub const THREADS_ENV: &str = "FRAMEKIT_THREADS";

/// Accumulators merged across workers. Implementations only hold integer counts,
/// so merging is associative and commutative and results do not depend on how
/// trials were split across threads.
pub trait Merge: Default + Send {
    fn merge(&mut self, other: Self);
}

/// Runs independent trials on a rayon pool.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Executor {
    threads: usize,
}

impl Executor {
    /// `threads == 0` lets rayon pick.
    pub fn with_threads(threads: usize) -> Self {
        Self { threads }
    }

    pub fn from_env() -> Self {
        let threads = std::env::var(THREADS_ENV)
            .ok()
            .and_then(|v| v.trim().parse().ok())
            .unwrap_or(0);
        Self { threads }
    }

    pub fn threads(&self) -> usize {
        self.threads
    }

    fn pool(&self) -> ThreadPool {
        rayon::ThreadPoolBuilder::new()
            .num_threads(self.threads)
            .build()
            .expect("thread pool")
    }

    /// Calls `trial(i, &mut acc)` for `i in 0..trials` and merges the accumulators.
    pub fn run<S, F>(&self, trials: u64, trial: F) -> S
    where
        S: Merge,
        F: Fn(u64, &mut S) + Sync,
    {
        self.pool().install(|| {
            (0..trials)
                .into_par_iter()
                .fold(S::default, |mut acc, i| {
                    trial(i, &mut acc);
                    acc
                })
                .reduce(S::default, |mut a, b| {
                    a.merge(b);
                    a
                })
        })
    }

    /// Like [`Executor::run`] for fallible trials. Every trial runs; on failure
    /// the error of the lowest-indexed failing trial is returned.
    /// Evaluates `f(i)` for every item and returns the results in index order.
    pub fn map<R, F>(&self, items: u64, f: F) -> Vec<R>
    where
        R: Send,
        F: Fn(u64) -> R + Sync + Send,
    {
        self.pool()
            .install(|| (0..items).into_par_iter().map(f).collect())
    }

    pub fn try_run<S, E, F>(&self, trials: u64, trial: F) -> Result<S, E>
    where
        S: Merge,
        E: Send,
        F: Fn(u64, &mut S) -> Result<(), E> + Sync,
    {
        let keep_first = |a: Option<(u64, E)>, b: Option<(u64, E)>| match (a, b) {
            (Some(x), Some(y)) => Some(if x.0 <= y.0 { x } else { y }),
            (x, y) => x.or(y),
        };
        let (acc, err) = self.pool().install(|| {
            (0..trials)
                .into_par_iter()
                .fold(
                    || (S::default(), None),
                    |(mut acc, err), i| {
                        let e = trial(i, &mut acc).err().map(|e| (i, e));
                        (acc, keep_first(err, e))
                    },
                )
                .reduce(
                    || (S::default(), None),
                    |(mut a, ea), (b, eb)| {
                        a.merge(b);
                        (a, keep_first(ea, eb))
                    },
                )
        });
        match err {
            Some((_, e)) => Err(e),
            None => Ok(acc),
        }
    }
}

impl Default for Executor {
    fn default() -> Self {
        Self::from_env()
    }
}
