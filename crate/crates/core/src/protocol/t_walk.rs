// Copyright 2026 The framekit Authors
// SPDX-License-Identifier: Apache-2.0

//! Monte Carlo of the T-gate correction walk.
//!
//! Each step applies one `T` and waits for a buffer that reveals the Clifford
//! `G` in front of it. The level counts unresolved `T` gates stuck behind a
//! `C+` Clifford: `G ∈ C+` raises it; `G ∈ C−` lowers it, or completes the
//! logical `T` when the level is already 0. A trial that succeeds after `s`
//! steps used `s − 1` corrective `T` gates.
//!
//! Both runners draw the class of `G` from lane 0 as `u < p` with `u` uniform
//! in `[0, 1)`, so under a shared seed they follow the same path; the symbolic
//! runner draws the concrete `G` from lane 1.

use rand::Rng;

use super::executor::Executor;
use super::rng::trial_rng;
use super::stats::SimStats;
use super::ProtocolError;
use crate::clifford::{CliffordGate1, CliffordGroup, GROUP_ORDER};
use crate::dense::{gates, DenseMatrix};
use crate::frame_rules::{classify_t_input, conjugate_by_t, TClass};

fn validate(p: f64, max_steps: u64) -> Result<(), ProtocolError> {
    if !(0.0..=1.0).contains(&p) {
        return Err(ProtocolError::InvalidProbability(p));
    }
    if max_steps == 0 {
        return Err(ProtocolError::ZeroLimit("max_steps"));
    }
    Ok(())
}

/// Level-only walk.
pub fn run_t_walk(
    p: f64,
    trials: u64,
    seed: u64,
    max_steps: u64,
    executor: &Executor,
) -> Result<SimStats, ProtocolError> {
    validate(p, max_steps)?;
    Ok(executor.run(trials, |i, stats: &mut SimStats| {
        let mut rng = trial_rng(seed, 0, i);
        let mut level = 0u64;
        for step in 1..=max_steps {
            if rng.random::<f64>() < p {
                level += 1;
            } else if level == 0 {
                stats.t_corrections += step - 1;
                stats.record_success(step);
                return;
            } else {
                level -= 1;
            }
        }
        stats.t_corrections += max_steps - 1;
        stats.record_capped();
    }))
}

const TOL: f64 = 1e-9;

struct Classes {
    minus: Vec<usize>,
    plus: Vec<usize>,
}

fn classes() -> Classes {
    let group = CliffordGroup::get();
    let (minus, plus) =
        (0..GROUP_ORDER).partition(|&i| classify_t_input(&group.element(i)) == TClass::CMinus);
    Classes { minus, plus }
}

/// Walk over the actual operator word.
///
/// The word `W` is the product of every `T` and buffer Clifford applied so far,
/// kept as a dense matrix. Symbolically the trial holds a stack of the `C+`
/// Cliffords that left a `T` stuck, plus the Clifford `lead` standing at the
/// left end of the word. After each step the runner checks that
///
/// * the stack depth equals the abstract level;
/// * `W·T†` is Clifford exactly when the abstract walk succeeds, and then
///   `W ∝ (T·G·T†)·T`;
/// * whenever the stack empties, `W ∝ lead`, so the pending `T` gates have
///   collapsed to a Clifford through `T² = S`.
pub fn run_t_walk_symbolic(
    p: f64,
    trials: u64,
    seed: u64,
    max_steps: u64,
    executor: &Executor,
) -> Result<SimStats, ProtocolError> {
    validate(p, max_steps)?;
    let classes = classes();
    let t = gates::t::<f64>();
    let tdg = gates::tdg::<f64>();
    let s = CliffordGate1::s();
    executor.try_run(trials, |i, stats: &mut SimStats| {
        let mut class_rng = trial_rng(seed, 0, i);
        let mut element_rng = trial_rng(seed, 1, i);
        let mismatch = |step: u64, detail: String| ProtocolError::SymbolicMismatch { trial: i, step, detail };

        let mut level = 0u64;
        let mut stack: Vec<CliffordGate1> = Vec::new();
        let mut lead = CliffordGate1::identity();
        let mut word: DenseMatrix<f64> = DenseMatrix::identity(2);
        for step in 1..=max_steps {
            let up = class_rng.random::<f64>() < p;
            let pool = if up { &classes.plus } else { &classes.minus };
            let g = CliffordGroup::get().element(pool[element_rng.random_range(0..pool.len())]);
            // The buffer revealed G as the Clifford in front of this T, so the
            // physical buffer correction was G·lead⁻¹.
            let buffer = g.compose(&lead.inverse());
            word = t.matmul(&buffer.to_dense()).matmul(&word);

            let abstract_success = !up && level == 0;
            level = if up { level + 1 } else { level.saturating_sub(1) };

            let mut success = false;
            match classify_t_input(&g) {
                TClass::CPlus => {
                    stack.push(g);
                    lead = CliffordGate1::identity();
                }
                TClass::CMinus => {
                    let g_tilde = conjugate_by_t(&g).map_err(|e| mismatch(step, e.to_string()))?;
                    match stack.pop() {
                        None => {
                            success = true;
                            lead = g_tilde;
                        }
                        Some(d) => {
                            // T·G·T·D = G̃·T²·D = G̃·S·D.
                            lead = g_tilde.compose(&s).compose(&d);
                            if classify_t_input(&lead) != TClass::CPlus {
                                return Err(mismatch(step, format!("collapsed lead {lead} is not in C+")));
                            }
                        }
                    }
                }
            }
            if stack.len() as u64 != level {
                return Err(mismatch(step, format!("stack depth {} vs level {level}", stack.len())));
            }

            let w_tdg = word.matmul(&tdg);
            let symbolic_success = w_tdg.is_clifford(TOL).unwrap_or(false);
            if symbolic_success != abstract_success || success != abstract_success {
                return Err(mismatch(
                    step,
                    format!("word-level success {symbolic_success}, symbolic {success}, abstract {abstract_success}"),
                ));
            }
            if success {
                let realised = CliffordGate1::from_unitary(&w_tdg, TOL);
                if realised != Some(lead) {
                    return Err(mismatch(step, format!("W·T† realises {realised:?}, expected {lead}")));
                }
                stats.t_corrections += step - 1;
                stats.record_success(step);
                return Ok(());
            }
            if stack.is_empty() {
                let target = lead.to_dense::<f64>();
                if word.relative_phase(&target, TOL).is_none() {
                    return Err(mismatch(step, format!("word is not proportional to {lead} at level 0")));
                }
                word = target;
            }
        }
        stats.t_corrections += max_steps - 1;
        stats.record_capped();
        Ok(())
    })
}
