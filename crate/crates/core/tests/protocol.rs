// Copyright 2026 The framekit Authors
// SPDX-License-Identifier: Apache-2.0

//! Monte Carlo runners against exact oracles, at 4σ binomial tolerance.

use framekit::clifford::{CliffordGroup, GROUP_ORDER};
use framekit::frame_rules::CnotTable;
use framekit::protocol::rng::trial_rng;
use framekit::protocol::{
    run_cnot_protocol, run_pauli_frame_protocol, run_t_walk, run_t_walk_symbolic,
    BufferDistribution, BufferModel, Executor, FrameOptions, LogicalCircuit, ProtocolError,
};
use framekit::walk::{cutoff_probability, return_probability, termination_probability};

fn within_sigma(observed: f64, expected: f64, n: f64, k: f64) -> bool {
    let sigma = (expected * (1.0 - expected) / n).sqrt();
    (observed - expected).abs() <= k * sigma.max(1.0 / n)
}

/// Fraction of the 576 pairs that are good, by exhaustive count.
fn good_fraction<F: Fn(usize, usize) -> bool>(filter: F) -> f64 {
    let table = CnotTable::get();
    let pairs: Vec<(usize, usize)> = (0..GROUP_ORDER)
        .flat_map(|a| (0..GROUP_ORDER).map(move |b| (a, b)))
        .filter(|&(a, b)| filter(a, b))
        .collect();
    pairs.iter().filter(|&&(a, b)| table.is_good(a, b)).count() as f64 / pairs.len() as f64
}

#[test]
fn uniform_cnot_transition_matches_pair_count() {
    // A uniform buffer pair composed with any pair is uniform, so each retry
    // succeeds with the good fraction of all pairs.
    let p = good_fraction(|_, _| true);
    let stats = run_cnot_protocol(
        &BufferModel::uniform(),
        200_000,
        1,
        10_000,
        &Executor::default(),
    )
    .unwrap();
    let attempts: u64 = stats.round_attempts.iter().sum();
    assert!(
        within_sigma(stats.transition_frequency(), p, attempts as f64, 4.0),
        "{}",
        stats.transition_frequency()
    );
    // Total CNOTs: 1 + rounds, with rounds geometric for bad inputs.
    let mean = 1.0 + (1.0 - p) / p;
    let sd = (1.0 - p).sqrt() / p;
    assert!((stats.histogram_mean() - mean).abs() < 4.0 * sd / (stats.successes as f64).sqrt());
    assert_eq!(stats.capped, 0);
}

#[test]
fn pauli_biased_transition_matches_mixture() {
    let group = CliffordGroup::get();
    let is_pauli = |i: usize| group.element(i).is_pauli();
    let good_pauli = good_fraction(|a, b| is_pauli(a) && is_pauli(b));
    let good_mixed = good_fraction(|a, b| !(is_pauli(a) && is_pauli(b)));
    for eps in [0.1, 0.5] {
        let model = BufferModel::new(BufferDistribution::PauliBiased { epsilon: eps }, 1).unwrap();
        assert!(model.pre_correction());
        let expected = (1.0 - eps) * good_pauli + eps * good_mixed;
        let stats = run_cnot_protocol(&model, 100_000, 2, 10_000, &Executor::default()).unwrap();
        let attempts: u64 = stats.round_attempts.iter().sum();
        assert!(
            within_sigma(stats.transition_frequency(), expected, attempts as f64, 4.0),
            "ε={eps}"
        );
    }
}

#[test]
fn t_walk_matches_cutoff_probability() {
    for &p in &[0.1, 1.0 / 3.0] {
        let trials = 40_000;
        let stats = run_t_walk(p, trials, 4, 10_000, &Executor::default()).unwrap();
        for n in 0..=20u64 {
            let empirical = stats.count_at_most(2 * n + 1) as f64 / trials as f64;
            let f = cutoff_probability(p, n);
            assert!(
                within_sigma(empirical, f, trials as f64, 4.0),
                "p={p} n={n}: {empirical} vs {f}"
            );
        }
    }
}

#[test]
fn t_walk_first_return_distribution() {
    let (p, trials) = (0.3, 40_000u64);
    let stats = run_t_walk(p, trials, 5, 10_000, &Executor::default()).unwrap();
    for j in 0..=6u64 {
        let observed =
            stats.histogram.get(&(2 * j + 1)).copied().unwrap_or(0) as f64 / trials as f64;
        let expected = return_probability(p, j);
        assert!(
            within_sigma(observed, expected, trials as f64, 4.0),
            "j={j}: {observed} vs {expected}"
        );
    }
    assert!(stats.histogram.keys().all(|k| k % 2 == 1));
}

#[test]
fn t_walk_above_half_terminates_with_reduced_probability() {
    let p = 2.0 / 3.0;
    let trials = 20_000;
    let stats = run_t_walk(p, trials, 6, 4_000, &Executor::default()).unwrap();
    let expected: f64 = 1.0 - termination_probability(p);
    assert!(
        within_sigma(stats.capped_fraction(), expected, trials as f64, 4.0),
        "{}",
        stats.capped_fraction()
    );
}

#[test]
fn symbolic_walk_reproduces_abstract_walk() {
    let ex = Executor::with_threads(4);
    for &p in &[0.2, 0.5] {
        let a = run_t_walk(p, 2_000, 8, 400, &ex).unwrap();
        let b = run_t_walk_symbolic(p, 2_000, 8, 400, &ex).unwrap();
        assert_eq!(a, b);
    }
}

#[test]
fn pauli_frame_stays_pauli_on_random_circuits() {
    let model = BufferModel::uniform();
    for seed in 0..5 {
        let circuit = LogicalCircuit::random(&mut trial_rng(seed, 7, 0), 3, 20, 0.3, 0.2);
        let stats = run_pauli_frame_protocol(
            &circuit,
            &model,
            FrameOptions::default(),
            2_000,
            seed,
            &Executor::default(),
        )
        .unwrap();
        assert_eq!(stats.checkpoint_violations, 0);
        assert_eq!(stats.successes, 2_000);
        if circuit.t_count() > 0 {
            assert!(stats.buffers > 0);
        }
    }
}

#[test]
fn dropping_the_restore_breaks_the_frame() {
    let circuit = LogicalCircuit::random(&mut trial_rng(1, 7, 0), 2, 20, 0.5, 0.1);
    let r = run_pauli_frame_protocol(
        &circuit,
        &BufferModel::uniform(),
        FrameOptions { restore: false },
        500,
        1,
        &Executor::default(),
    );
    assert!(matches!(r, Err(ProtocolError::Violation { .. })));
}

#[test]
fn results_do_not_depend_on_thread_count() {
    let one = Executor::with_threads(1);
    let eight = Executor::with_threads(8);
    let model = BufferModel::new(BufferDistribution::Biased { epsilon: 0.3 }, 2).unwrap();
    assert_eq!(
        run_cnot_protocol(&model, 20_000, 9, 50, &one).unwrap(),
        run_cnot_protocol(&model, 20_000, 9, 50, &eight).unwrap()
    );
    assert_eq!(
        run_t_walk(0.4, 20_000, 9, 500, &one).unwrap(),
        run_t_walk(0.4, 20_000, 9, 500, &eight).unwrap()
    );
    let circuit = LogicalCircuit::random(&mut trial_rng(3, 7, 0), 3, 20, 0.3, 0.2);
    assert_eq!(
        run_pauli_frame_protocol(&circuit, &model, FrameOptions::default(), 2_000, 9, &one)
            .unwrap(),
        run_pauli_frame_protocol(&circuit, &model, FrameOptions::default(), 2_000, 9, &eight)
            .unwrap()
    );
}
