// Copyright 2026 The framekit Authors
// SPDX-License-Identifier: Apache-2.0

//! Walk analytics against brute-force path enumeration and direct sums.

use framekit::walk::{
    catalan, cutoff_probability, fig6_curve, min_steps_for_target, partial_sum, return_probability,
    tail_probability, termination_probability, upper_bound_check, MinSteps, FIG6_TARGETS,
};
use proptest::prelude::*;

/// Probability that the walk succeeds within `steps` steps, summing over all
/// `2^steps` up/down sequences.
fn enumerate_success(p: f64, steps: u32) -> f64 {
    let mut total = 0.0;
    for seq in 0u32..1 << steps {
        let mut level = 0i64;
        let mut weight = 1.0;
        let mut succeeded = false;
        for s in 0..steps {
            let up = seq >> s & 1 == 1;
            // Steps after success still carry weight, so each prefix is
            // counted with total mass one over its continuations.
            weight *= if up { p } else { 1.0 - p };
            if succeeded {
                continue;
            }
            if up {
                level += 1;
            } else if level == 0 {
                succeeded = true;
            } else {
                level -= 1;
            }
        }
        if succeeded {
            total += weight;
        }
    }
    total
}

/// Same quantity by dynamic programming over levels.
fn dp_success(p: f64, steps: usize) -> f64 {
    let mut dist = vec![0.0; steps + 2];
    dist[0] = 1.0;
    let mut done = 0.0;
    for _ in 0..steps {
        let mut next = vec![0.0; steps + 2];
        for (l, &m) in dist.iter().enumerate() {
            if m == 0.0 {
                continue;
            }
            next[l + 1] += m * p;
            if l == 0 {
                done += m * (1.0 - p);
            } else {
                next[l - 1] += m * (1.0 - p);
            }
        }
        dist = next;
    }
    done
}

#[test]
fn cutoff_matches_path_enumeration() {
    for &p in &[0.1, 1.0 / 3.0, 2.0 / 3.0] {
        for n in 0..=8u32 {
            let brute = enumerate_success(p, 2 * n + 1);
            let f = cutoff_probability(p, n as u64);
            assert!((f - brute).abs() < 1e-12, "p={p} n={n}: {f} vs {brute}");
            assert!((partial_sum(p, n as u64) - brute).abs() < 1e-12);
        }
    }
}

#[test]
fn catalan_counts_dyck_paths() {
    // Up/down sequences of length 2j that never dip below zero and end at zero.
    for j in 0..=10u32 {
        let count = (0u32..1 << (2 * j))
            .filter(|seq| {
                let mut level = 0i32;
                for s in 0..2 * j {
                    level += if seq >> s & 1 == 1 { 1 } else { -1 };
                    if level < 0 {
                        return false;
                    }
                }
                level == 0
            })
            .count() as u128;
        assert_eq!(catalan(j as u64).unwrap(), count, "j={j}");
    }
    // K_{j+1} = Σ K_i K_{j−i}
    for j in 0..40u64 {
        let sum: u128 = (0..=j)
            .map(|i| catalan(i).unwrap() * catalan(j - i).unwrap())
            .sum();
        assert_eq!(catalan(j + 1).unwrap(), sum);
    }
}

#[test]
fn cutoff_matches_partial_sum_on_grid() {
    for i in 1..=19 {
        let p = 0.05 * i as f64;
        for n in 0..=100 {
            let f = cutoff_probability(p, n);
            let direct: f64 = (0..=n).map(|k| return_probability(p, k)).sum();
            assert!((f - direct).abs() < 1e-9, "p={p} n={n}: {f} vs {direct}");
        }
    }
}

#[test]
fn dp_oracle_agrees_for_long_cutoffs() {
    for &p in &[0.2, 0.45, 0.5, 0.55, 0.8] {
        for n in [20u64, 60, 150, 400] {
            let dp = dp_success(p, 2 * n as usize + 1);
            assert!((cutoff_probability(p, n) - dp).abs() < 1e-9, "p={p} n={n}");
        }
    }
}

#[test]
fn upper_bound_holds_on_grid() {
    for i in 1..=19 {
        let p = 0.05 * i as f64;
        for n in 1..=100 {
            let c = upper_bound_check(p, n);
            assert!(c.holds(), "{c:?}");
        }
    }
}

#[test]
fn termination_limit() {
    for &p in &[0.1, 0.5, 2.0 / 3.0, 0.9] {
        let t: f64 = termination_probability(p);
        let far = dp_success(p, 20_001);
        let tol = if (p - 0.5f64).abs() < 1e-12 {
            1e-2
        } else {
            1e-9
        };
        assert!((t - far).abs() < tol, "p={p}: {t} vs {far}");
    }
}

#[test]
fn cutoff_scales_logarithmically_in_epsilon() {
    for &p in &[0.1, 0.25, 0.4] {
        let ratios: Vec<f64> = [1e-2, 1e-4, 1e-6, 1e-8, 1e-10]
            .iter()
            .map(
                |&eps: &f64| match min_steps_for_target(p, 1.0 - eps).unwrap() {
                    MinSteps::Steps(n) => n as f64 / eps.ln().abs(),
                    MinSteps::Unattainable => panic!("p={p}"),
                },
            )
            .collect();
        let (lo, hi) = ratios
            .iter()
            .fold((f64::MAX, 0.0f64), |(a, b), &r| (a.min(r), b.max(r)));
        assert!(hi / lo.max(1e-12) < 3.0, "p={p}: {ratios:?}");
        // Large-n slope: [4p(1−p)]^n decay gives n ≈ ln(1/ε) / ln(1/(4p(1−p))).
        let slope = 1.0 / (1.0 / (4.0 * p * (1.0 - p))).ln();
        assert!(
            (ratios[4] - slope).abs() / slope < 0.35,
            "p={p}: {} vs {slope}",
            ratios[4]
        );
    }
}

#[test]
fn fig6_points_are_minimal() {
    let ps: Vec<f64> = (1..=24).map(|i| 0.02 * i as f64).collect();
    for pt in fig6_curve(&FIG6_TARGETS, &ps) {
        assert!(cutoff_probability(pt.p, pt.n) > pt.q);
        if pt.n > 0 {
            assert!(cutoff_probability(pt.p, pt.n - 1) <= pt.q);
        }
    }
}

proptest! {
    #[test]
    fn cutoff_is_monotone_and_bounded(p in 0.0f64..=1.0, n in 0u64..300) {
        let a = cutoff_probability(p, n);
        let b = cutoff_probability(p, n + 1);
        prop_assert!(a <= b + 1e-12);
        prop_assert!(b <= termination_probability(p) + 1e-12);
        prop_assert!(a >= -1e-12);
        let f = tail_probability(p, n);
        prop_assert!(f >= -1e-12);
    }

    #[test]
    fn return_probability_symmetry(p in 0.01f64..0.99, j in 0u64..60) {
        // P_{2j+1}(p)·p = P_{2j+1}(1−p)·(1−p)
        let a = return_probability(p, j) * p;
        let b = return_probability(1.0 - p, j) * (1.0 - p);
        prop_assert!((a - b).abs() <= 1e-12 * a.max(b).max(1e-300));
    }
}
