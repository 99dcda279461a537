// Copyright 2026 The framekit Authors
// SPDX-License-Identifier: Apache-2.0

//! Clifford gates in conjugation-tableau form, global phase quotiented out.

mod group;
mod single;
mod two;

use thiserror::Error;

use crate::pauli::PauliOperator;

pub use group::{enumerate_cliffords1, CliffordGroup, GROUP_ORDER};
pub use single::CliffordGate1;
pub use two::{tensor, CliffordTableau2};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CliffordError {
    #[error("qubit count mismatch: gate acts on {gate}, operator has {operator}")]
    DimensionMismatch { gate: usize, operator: usize },
    #[error("invalid Clifford images: {0}")]
    InvalidImages(String),
    #[error("unknown Clifford index {0}")]
    UnknownIndex(usize),
}

/// Conjugation action `P ↦ U P U†` of a Clifford on Paulis, signs included.
pub trait ConjugatePauli {
    fn num_qubits(&self) -> usize;

    fn conjugate_pauli(&self, p: &PauliOperator) -> Result<PauliOperator, CliffordError>;
}

/// Pushes `i^a X^x Z^z` through images of the per-qubit `X` and `Z` generators.
pub(crate) fn conjugate_with_images(
    p: &PauliOperator,
    x_images: &[PauliOperator],
    z_images: &[PauliOperator],
) -> PauliOperator {
    let n = p.num_qubits();
    let mut out = PauliOperator::identity(n).times_phase(p.phase());
    for (q, img) in x_images.iter().enumerate() {
        if p.x_bits() >> q & 1 == 1 {
            out = out * *img;
        }
    }
    for (q, img) in z_images.iter().enumerate() {
        if p.z_bits() >> q & 1 == 1 {
            out = out * *img;
        }
    }
    out
}
