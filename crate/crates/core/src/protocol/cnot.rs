// Copyright 2026 The framekit Authors
// SPDX-License-Identifier: Apache-2.0

//! Retry protocol for pushing a Clifford frame pair through a CNOT.
//!
//! A trial draws the frame pair `(C1, C2)` in front of the CNOT uniformly. While
//! the pair is bad, one corrective CNOT is spent and a buffer reveals a new pair
//! `(C3, C4)` from the buffer model. Without pre-correction the buffer
//! composes with the previous frame, giving `(C3·C1, C4·C2)`; with
//! pre-correction the retry is compiled against the known frame, so only
//! `(C3, C4)` remains. The trial ends when the pair is good or after
//! `max_rounds` retries.

use super::executor::Executor;
use super::model::BufferModel;
use super::rng::trial_rng;
use super::stats::SimStats;
use super::ProtocolError;
use crate::clifford::{CliffordGroup, GROUP_ORDER};
use crate::frame_rules::CnotTable;
use rand::Rng;

/// Assumptions baked into [`run_cnot_protocol`], for output metadata.
pub fn cnot_assumptions(model: &BufferModel) -> Vec<String> {
    vec![
        "input frame pair drawn uniformly over the 24x24 single-qubit Clifford pairs".into(),
        format!("buffer pair drawn from model {}", model.distribution),
        if model.pre_correction() {
            "retry compiled with the inverse of the known frame: new pair = buffer pair".into()
        } else {
            "retry without pre-correction: new pair = buffer pair composed with previous pair"
                .into()
        },
        "histogram key = total CNOTs (algorithm CNOT + corrections) over successful trials".into(),
    ]
}

pub fn run_cnot_protocol(
    model: &BufferModel,
    trials: u64,
    seed: u64,
    max_rounds: u32,
    executor: &Executor,
) -> Result<SimStats, ProtocolError> {
    if max_rounds == 0 {
        return Err(ProtocolError::ZeroLimit("max_rounds"));
    }
    let table = CnotTable::get();
    let group = CliffordGroup::get();
    let pre = model.pre_correction();
    Ok(executor.run(trials, |i, stats: &mut SimStats| {
        let mut rng = trial_rng(seed, 0, i);
        let (mut a, mut b) = (
            rng.random_range(0..GROUP_ORDER),
            rng.random_range(0..GROUP_ORDER),
        );
        let mut rounds = 0u32;
        while !table.is_good(a, b) {
            if rounds == max_rounds {
                stats.cnot_corrections += rounds as u64;
                stats.record_capped();
                return;
            }
            let (c3, c4) = model.sample_pair(&mut rng);
            (a, b) = if pre {
                (c3, c4)
            } else {
                (group.product_index(c3, a), group.product_index(c4, b))
            };
            stats.record_round(rounds as usize, table.is_good(a, b));
            stats.buffers += 1;
            stats.buffer_rounds += model.latency_rounds as u64;
            rounds += 1;
        }
        stats.cnot_corrections += rounds as u64;
        stats.record_success(1 + rounds as u64);
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::protocol::model::BufferDistribution;

    #[test]
    fn identity_buffers_never_fix_a_bad_pair_with_pre_correction_off() {
        let model = BufferModel::new(BufferDistribution::Biased { epsilon: 0.0 }, 1).unwrap();
        let stats = run_cnot_protocol(&model, 2000, 3, 5, &Executor::with_threads(2)).unwrap();
        // Good inputs finish with one CNOT, bad ones stay bad under identity buffers.
        assert_eq!(stats.successes + stats.capped, 2000);
        assert_eq!(stats.histogram.keys().copied().collect::<Vec<_>>(), vec![1]);
        assert_eq!(stats.round_successes.iter().sum::<u64>(), 0);
    }

    #[test]
    fn identity_buffers_always_fix_with_pre_correction() {
        let model = BufferModel::new(BufferDistribution::Biased { epsilon: 0.0 }, 3)
            .unwrap()
            .with_pre_correction(true);
        let stats = run_cnot_protocol(&model, 2000, 3, 5, &Executor::with_threads(2)).unwrap();
        assert_eq!(stats.capped, 0);
        assert!(stats.histogram.keys().all(|&k| k <= 2));
        assert_eq!(stats.buffer_rounds, 3 * stats.buffers);
    }

    #[test]
    fn rejects_zero_rounds() {
        assert!(
            run_cnot_protocol(&BufferModel::uniform(), 1, 0, 0, &Executor::with_threads(1))
                .is_err()
        );
    }
}
