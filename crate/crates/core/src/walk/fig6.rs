// Copyright 2026 The framekit Authors
// SPDX-License-Identifier: Apache-2.0

use serde::Serialize;

use super::{min_steps_for_target, MinSteps};

/// Targets plotted by default.
pub const FIG6_TARGETS: [f64; 3] = [0.9, 0.99, 0.999];

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Fig6Point {
    pub q: f64,
    pub p: f64,
    pub n: u64,
}

/// `p = 0.02, 0.04, …, 0.50`.
pub fn default_fig6_grid() -> Vec<f64> {
    (1..=25).map(|i| i as f64 * 0.02).collect()
}

/// Minimal cutoff `n(p)` for each target, skipping unattainable points.
/// Invalid probabilities are skipped as well.
pub fn fig6_curve(targets: &[f64], ps: &[f64]) -> Vec<Fig6Point> {
    let mut out = Vec::new();
    for &q in targets {
        for &p in ps {
            if let Ok(MinSteps::Steps(n)) = min_steps_for_target(p, q) {
                out.push(Fig6Point { q, p, n });
            }
        }
    }
    out
}
