// Copyright 2026 The framekit Authors
// SPDX-License-Identifier: Apache-2.0

//! Seeded Monte Carlo of the buffer protocols.
//!
//! Every runner takes a master seed and an [`Executor`]; trial `i` draws from
//! its own stream (see [`rng`]) and accumulates into integer-only
//! [`SimStats`], so output is identical for any worker count.

pub mod circuit;
pub mod cnot;
pub mod executor;
pub mod model;
pub mod pauli_frame;
pub mod rng;
pub mod stats;
pub mod t_walk;

use thiserror::Error;

pub use circuit::{parse_circuit, CircuitError, Gate, LogicalCircuit};
pub use cnot::{cnot_assumptions, run_cnot_protocol};
pub use executor::{Executor, Merge, THREADS_ENV};
pub use model::{BufferDistribution, BufferModel, ModelError};
pub use pauli_frame::{run_pauli_frame_protocol, run_pauli_frame_trial, FrameOptions};
pub use stats::{SimStats, Summary};
pub use t_walk::{run_t_walk, run_t_walk_symbolic};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ProtocolError {
    #[error("probability {0} outside [0, 1]")]
    InvalidProbability(f64),
    #[error("{0} must be at least 1")]
    ZeroLimit(&'static str),
    #[error("trial {trial}, gate {gate}: frame on qubit {qubit} is {frame}, not a Pauli")]
    Violation {
        trial: u64,
        gate: usize,
        qubit: usize,
        frame: String,
    },
    #[error("trial {trial}, step {step}: symbolic walk disagrees with abstract walk: {detail}")]
    SymbolicMismatch {
        trial: u64,
        step: u64,
        detail: String,
    },
}
