// Copyright 2026 The framekit Authors
// SPDX-License-Identifier: Apache-2.0

//! Pauli-frame tracking through `T` gates with a buffer.
//!
//! Each qubit carries a frame `F` with physical state `F·(ideal state)`. Pushing
//! a Pauli frame `P` through `T` leaves `C·P₂` with `C ∈ {I, S}` (`S†` for
//! `T†`), and `C` is only known once the diagnostics for `P` arrive. The qubit is
//! then marked pending. Before its next `T` or two-qubit gate, and at the end
//! of the circuit, a buffer runs: the EC rounds add a Pauli `P₃`, and `C†` is
//! applied, leaving the Pauli `C†P₃C·P₂`. Clifford gates on a pending qubit
//! conjugate both the frame and the pending `C`.

use rand::Rng;

use super::circuit::{Gate, LogicalCircuit};
use super::executor::Executor;
use super::model::BufferModel;
use super::rng::trial_rng;
use super::stats::SimStats;
use super::ProtocolError;
use crate::clifford::{CliffordGate1, CliffordGroup};
use crate::frame_rules::{pauli_through_rotation, CnotTable};
use crate::pauli::PauliOperator;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FrameOptions {
    /// Apply `C†` after each buffer. Turning this off breaks the protocol and
    /// is only useful to check that violations are detected.
    pub restore: bool,
}

impl Default for FrameOptions {
    fn default() -> Self {
        Self { restore: true }
    }
}

struct Frames<'a> {
    frame: Vec<CliffordGate1>,
    pending: Vec<Option<CliffordGate1>>,
    model: &'a BufferModel,
    options: FrameOptions,
    trial: u64,
    restores: u64,
}

impl Frames<'_> {
    fn checkpoint(
        &self,
        stats: &mut SimStats,
        gate: usize,
        qubit: usize,
    ) -> Result<(), ProtocolError> {
        stats.checkpoints += 1;
        let f = self.frame[qubit];
        if f.is_pauli() {
            Ok(())
        } else {
            stats.checkpoint_violations += 1;
            Err(ProtocolError::Violation {
                trial: self.trial,
                gate,
                qubit,
                frame: f.to_string(),
            })
        }
    }

    fn buffer<R: Rng>(
        &mut self,
        rng: &mut R,
        stats: &mut SimStats,
        gate: usize,
        qubit: usize,
    ) -> Result<(), ProtocolError> {
        let Some(c) = self.pending[qubit].take() else {
            return Ok(());
        };
        let p3 = CliffordGroup::get().element(self.model.sample_pauli(rng));
        stats.buffers += 1;
        stats.buffer_rounds += self.model.latency_rounds as u64;
        self.frame[qubit] = p3.compose(&self.frame[qubit]);
        if self.options.restore && c != CliffordGate1::identity() {
            self.frame[qubit] = c.inverse().compose(&self.frame[qubit]);
            stats.clifford_corrections += 1;
            self.restores += 1;
        }
        self.checkpoint(stats, gate, qubit)
    }
}

fn as_pauli(frame: &CliffordGate1) -> PauliOperator {
    // A Pauli gate P maps X to ±X and Z to ±Z; the signs identify P.
    let x_flip = frame.z_image().sign() == Some(-1);
    let z_flip = frame.x_image().sign() == Some(-1);
    PauliOperator::from_kinds(&[crate::pauli::PauliKind::from_bits(x_flip, z_flip)])
}

/// One trial; the initial frame is a random Pauli per qubit drawn from the model.
pub fn run_pauli_frame_trial<R: Rng>(
    circuit: &LogicalCircuit,
    model: &BufferModel,
    options: FrameOptions,
    trial: u64,
    rng: &mut R,
    stats: &mut SimStats,
) -> Result<(), ProtocolError> {
    let group = CliffordGroup::get();
    let n = circuit.num_qubits();
    let frame = (0..n)
        .map(|_| group.element(model.sample_pauli(rng)))
        .collect();
    let mut st = Frames {
        frame,
        pending: vec![None; n],
        model,
        options,
        trial,
        restores: 0,
    };
    for (gi, gate) in circuit.gates().iter().enumerate() {
        if let Some((q, u)) = gate.clifford() {
            st.frame[q] = u.compose(&st.frame[q]).compose(&u.inverse());
            if let Some(c) = st.pending[q] {
                st.pending[q] = Some(u.compose(&c).compose(&u.inverse()));
            }
        } else if let Some((q, rotation)) = gate.rotation() {
            st.buffer(rng, stats, gi, q)?;
            st.checkpoint(stats, gi, q)?;
            let (c, p2) = pauli_through_rotation(rotation, &as_pauli(&st.frame[q]))
                .expect("single-qubit Pauli");
            st.frame[q] = c.compose(&CliffordGate1::pauli(p2.kind_at(0)));
            st.pending[q] = Some(c);
        } else if let Gate::Cnot(a, b) = *gate {
            for q in [a, b] {
                st.buffer(rng, stats, gi, q)?;
                st.checkpoint(stats, gi, q)?;
            }
            let table = CnotTable::get();
            let (ia, ib) = (st.frame[a].index(), st.frame[b].index());
            let (oa, ob) = table
                .output(ia, ib)
                .expect("Pauli pairs propagate through CNOT");
            st.frame[a] = group.element(oa);
            st.frame[b] = group.element(ob);
        }
    }
    for q in 0..n {
        st.buffer(rng, stats, circuit.gates().len(), q)?;
    }
    stats.record_success(st.restores);
    Ok(())
}

/// Runs `trials` independent trials; fails on the first (lowest-index) trial
/// that reaches a checkpoint with a non-Pauli frame.
pub fn run_pauli_frame_protocol(
    circuit: &LogicalCircuit,
    model: &BufferModel,
    options: FrameOptions,
    trials: u64,
    seed: u64,
    executor: &Executor,
) -> Result<SimStats, ProtocolError> {
    executor.try_run(trials, |i, stats: &mut SimStats| {
        let mut rng = trial_rng(seed, 0, i);
        run_pauli_frame_trial(circuit, model, options, i, &mut rng, stats)
    })
}
