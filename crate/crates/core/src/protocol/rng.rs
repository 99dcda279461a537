// Copyright 2026 The framekit Authors
// SPDX-License-Identifier: Apache-2.0

//! Per-trial random streams.
//!
//! Trial `i` of a run with master seed `s` draws from
//! `ChaCha8Rng::seed_from_u64(s + lane·0x9E3779B97F4A7C15)` switched to stream `i`.
//! The lane separates independent uses within one trial (for example the class
//! draws and the concrete-element draws of the symbolic walk). Results depend
//! only on `(s, lane, i)`, never on scheduling.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub type TrialRng = ChaCha8Rng;

/// Golden-ratio stride between lane seeds.
pub const LANE_STRIDE: u64 = 0x9E37_79B9_7F4A_7C15;

pub fn trial_rng(seed: u64, lane: u64, trial: u64) -> TrialRng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(lane.wrapping_mul(LANE_STRIDE)));
    rng.set_stream(trial);
    rng
}
