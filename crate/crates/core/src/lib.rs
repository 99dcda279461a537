// Copyright 2026 The framekit Authors
// SPDX-License-Identifier: Apache-2.0

//! Frame tracking for fault-tolerant circuits with slow error diagnostics.
//!
//! The crate is organised bottom-up:
//!
//! * [`pauli`], [`clifford`] and [`dense`]: exact Pauli/Clifford algebra with a
//!   dense complex-matrix backend used as an independent oracle.
//! * [`frame_rules`]: how Clifford frames propagate through CNOT and T gates.
//! * [`walk`]: closed-form analytics for the T-gate correction random walk.
//! * [`protocol`]: seeded, parallel Monte Carlo of the buffer protocols.
//! * [`stabilizer`]: syndrome projection of physical Clifford errors on a
//!   stabilizer code and the resulting logical process matrix.
//!
//! Numeric code is generic over [`Scalar`] (`f32` or `f64`); the `*64`
//! aliases below fix the double-precision instantiation used by the CLI.

pub mod clifford;
pub mod dense;
pub mod frame_rules;
pub mod pauli;
pub mod protocol;
pub mod scalar;
pub mod stabilizer;
pub mod walk;

pub use clifford::{CliffordGate1, CliffordTableau2, ConjugatePauli};
pub use pauli::{PauliKind, PauliOperator};
pub use scalar::Scalar;

pub type DenseMatrix64 = dense::DenseMatrix<f64>;
pub type DenseUnitary64 = dense::DenseUnitary<f64>;
pub type DenseMatrix32 = dense::DenseMatrix<f32>;
pub type StateVector64 = stabilizer::StateVector<f64>;
pub type ProcessMatrix64 = stabilizer::ProcessMatrix<f64>;
pub type ProcessMatrix32 = stabilizer::ProcessMatrix<f32>;
