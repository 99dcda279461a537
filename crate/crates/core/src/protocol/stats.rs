// Copyright 2026 The framekit Authors
// SPDX-License-Identifier: Apache-2.0

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::executor::Merge;

/// Integer counters collected by every protocol simulation.
///
/// The histogram key depends on the protocol: steps to success for the T walk,
/// total CNOTs for the CNOT protocol, and `C†` restores per trial for the
/// Pauli-frame protocol. Only successful trials enter the histogram; capped
/// trials are counted separately.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SimStats {
    pub trials: u64,
    pub successes: u64,
    pub capped: u64,
    pub cnot_corrections: u64,
    pub t_corrections: u64,
    pub clifford_corrections: u64,
    pub buffers: u64,
    pub buffer_rounds: u64,
    pub checkpoints: u64,
    pub checkpoint_violations: u64,
    pub histogram: BTreeMap<u64, u64>,
    /// Trials that entered retry round `r` with a bad frame.
    pub round_attempts: Vec<u64>,
    /// Trials whose frame became good in round `r`.
    pub round_successes: Vec<u64>,
}

fn add_vec(a: &mut Vec<u64>, b: &[u64]) {
    if a.len() < b.len() {
        a.resize(b.len(), 0);
    }
    for (x, y) in a.iter_mut().zip(b) {
        *x += y;
    }
}

fn bump(v: &mut Vec<u64>, index: usize) {
    if v.len() <= index {
        v.resize(index + 1, 0);
    }
    v[index] += 1;
}

impl SimStats {
    pub fn record_success(&mut self, key: u64) {
        self.trials += 1;
        self.successes += 1;
        *self.histogram.entry(key).or_insert(0) += 1;
    }

    pub fn record_capped(&mut self) {
        self.trials += 1;
        self.capped += 1;
    }

    pub fn record_round(&mut self, round: usize, became_good: bool) {
        bump(&mut self.round_attempts, round);
        if became_good {
            bump(&mut self.round_successes, round);
        }
        // Keep both vectors the same length for per-round reporting.
        if self.round_successes.len() < self.round_attempts.len() {
            self.round_successes.resize(self.round_attempts.len(), 0);
        }
    }

    pub fn success_fraction(&self) -> f64 {
        ratio(self.successes, self.trials)
    }

    pub fn capped_fraction(&self) -> f64 {
        ratio(self.capped, self.trials)
    }

    /// Fraction of retry rounds that turned a bad frame good.
    pub fn transition_frequency(&self) -> f64 {
        ratio(
            self.round_successes.iter().sum(),
            self.round_attempts.iter().sum(),
        )
    }

    /// Mean histogram key over successful trials.
    pub fn histogram_mean(&self) -> f64 {
        let total: u64 = self.histogram.values().sum();
        let weighted: f64 = self
            .histogram
            .iter()
            .map(|(&k, &c)| k as f64 * c as f64)
            .sum();
        if total == 0 {
            f64::NAN
        } else {
            weighted / total as f64
        }
    }

    /// Successful trials whose key is at most `k`.
    pub fn count_at_most(&self, k: u64) -> u64 {
        self.histogram.range(..=k).map(|(_, &c)| c).sum()
    }

    pub fn summary(&self) -> Summary {
        Summary {
            success_fraction: self.success_fraction(),
            capped_fraction: self.capped_fraction(),
            transition_frequency: self.transition_frequency(),
            histogram_mean: self.histogram_mean(),
            per_round_transition: self
                .round_attempts
                .iter()
                .zip(&self.round_successes)
                .map(|(&a, &s)| ratio(s, a))
                .collect(),
        }
    }
}

fn ratio(a: u64, b: u64) -> f64 {
    if b == 0 {
        f64::NAN
    } else {
        a as f64 / b as f64
    }
}

impl Merge for SimStats {
    fn merge(&mut self, other: Self) {
        self.trials += other.trials;
        self.successes += other.successes;
        self.capped += other.capped;
        self.cnot_corrections += other.cnot_corrections;
        self.t_corrections += other.t_corrections;
        self.clifford_corrections += other.clifford_corrections;
        self.buffers += other.buffers;
        self.buffer_rounds += other.buffer_rounds;
        self.checkpoints += other.checkpoints;
        self.checkpoint_violations += other.checkpoint_violations;
        for (k, c) in other.histogram {
            *self.histogram.entry(k).or_insert(0) += c;
        }
        add_vec(&mut self.round_attempts, &other.round_attempts);
        add_vec(&mut self.round_successes, &other.round_successes);
    }
}

/// Ratios derived from [`SimStats`]; `NaN` when undefined.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Summary {
    pub success_fraction: f64,
    pub capped_fraction: f64,
    pub transition_frequency: f64,
    pub histogram_mean: f64,
    pub per_round_transition: Vec<f64>,
}
