// Copyright 2026 The framekit Authors
// SPDX-License-Identifier: Apache-2.0

//! Stabilizer codes and the logical channel left by a physical error after
//! syndrome projection.

pub mod channel;
pub mod code;
pub mod gf2;
pub mod process;
pub mod state;

use thiserror::Error;

pub use channel::{
    choi_to_process, effective_process_matrix, encoded_bell_half, project_and_correct, CodeChannel,
    ErrorClass, ErrorReport, PhysicalError, SyndromeOutcome, VerificationReport,
    PROBABILITY_SUM_TOL,
};
pub use code::{build_five_qubit_code, RecoveryDecomposition, StabilizerCode};
pub use process::{PermutationVerdict, ProcessMatrix};
pub use state::StateVector;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum StabilizerError {
    #[error("invalid stabilizer code: {0}")]
    InvalidCode(String),
    #[error("dimension mismatch: got {0}, expected {1}")]
    DimensionMismatch(usize, usize),
    #[error("syndrome {0} is out of range")]
    BadSyndrome(u64),
    #[error("syndrome {0} has zero probability")]
    ZeroProbability(u64),
    #[error("corrected state leaves the code space (norm deficit {0:e})")]
    Leakage(f64),
}
