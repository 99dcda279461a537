// Copyright 2026 The framekit Authors
// SPDX-License-Identifier: Apache-2.0

//! Single-qubit process matrices in the Pauli basis `(I, X, Y, Z)`.

use serde::Serialize;

use crate::clifford::{CliffordGate1, CliffordGroup, ConjugatePauli, GROUP_ORDER};
use crate::pauli::{PauliKind, PauliOperator};
use crate::scalar::Scalar;

/// `Λ_ij = Tr[ℰ(P_i)·P_j] / 2`, so a trace-preserving channel has `Λ_00 = 1`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ProcessMatrix<T> {
    pub entries: [[T; 4]; 4],
}

/// Outcome of [`ProcessMatrix::is_signed_permutation`].
#[derive(Debug, Clone, PartialEq)]
pub enum PermutationVerdict<T> {
    Clifford(CliffordGate1),
    /// Entries that are neither `0` nor `±1` within tolerance, or rows and
    /// columns without exactly one unit entry.
    NotPermutation {
        offending: Vec<(usize, usize, T)>,
    },
    /// A signed permutation that no unitary realises, for example a reflection.
    NoMatchingClifford {
        pattern: [i8; 16],
    },
}

impl<T> PermutationVerdict<T> {
    pub fn clifford(&self) -> Option<CliffordGate1> {
        match self {
            PermutationVerdict::Clifford(c) => Some(*c),
            _ => None,
        }
    }
}

const BASIS: [PauliKind; 4] = PauliKind::ALL;

impl<T: Scalar> ProcessMatrix<T> {
    pub fn identity() -> Self {
        let mut entries = [[T::zero(); 4]; 4];
        for (i, row) in entries.iter_mut().enumerate() {
            row[i] = T::one();
        }
        Self { entries }
    }

    /// Process matrix of `ρ ↦ CρC†`, read off the tableau.
    pub fn from_clifford(c: &CliffordGate1) -> Self {
        let mut entries = [[T::zero(); 4]; 4];
        for (i, &k) in BASIS.iter().enumerate() {
            let image = c
                .conjugate_pauli(&PauliOperator::from_kinds(&[k]))
                .expect("single-qubit Pauli");
            let j = image.kind_at(0).basis_index();
            let sign = image
                .sign()
                .expect("image of a Hermitian Pauli is Hermitian");
            entries[i][j] = T::lit(sign as f64);
        }
        Self { entries }
    }

    pub fn get(&self, i: usize, j: usize) -> T {
        self.entries[i][j]
    }

    pub fn max_abs_diff(&self, other: &Self) -> T {
        let mut m = T::zero();
        for i in 0..4 {
            for j in 0..4 {
                m = m.max((self.entries[i][j] - other.entries[i][j]).abs());
            }
        }
        m
    }

    /// Rounds each entry to `{0, ±1}`, if every entry is within `tol` of one.
    pub fn pattern(&self, tol: T) -> Option<[i8; 16]> {
        let mut out = [0i8; 16];
        for i in 0..4 {
            for j in 0..4 {
                let v = self.entries[i][j];
                out[4 * i + j] = if v.abs() <= tol {
                    0
                } else if (v - T::one()).abs() <= tol {
                    1
                } else if (v + T::one()).abs() <= tol {
                    -1
                } else {
                    return None;
                };
            }
        }
        Some(out)
    }

    /// Checks the signed-permutation shape and identifies the Clifford among
    /// the 24 whose process matrix has the same pattern.
    pub fn is_signed_permutation(&self, tol: T) -> PermutationVerdict<T> {
        let mut offending = Vec::new();
        for i in 0..4 {
            for j in 0..4 {
                let v = self.entries[i][j].abs();
                if v > tol && (v - T::one()).abs() > tol {
                    offending.push((i, j, self.entries[i][j]));
                }
            }
        }
        let unit = |i: usize, j: usize| (self.entries[i][j].abs() - T::one()).abs() <= tol;
        for k in 0..4 {
            let row_units = (0..4).filter(|&j| unit(k, j)).count();
            let col_units = (0..4).filter(|&i| unit(i, k)).count();
            if row_units != 1 || col_units != 1 {
                offending.push((k, k, self.entries[k][k]));
            }
        }
        if !offending.is_empty() {
            offending.sort_by_key(|&(i, j, _)| (i, j));
            offending.dedup_by_key(|e| (e.0, e.1));
            return PermutationVerdict::NotPermutation { offending };
        }
        let pattern = self.pattern(tol).expect("entries checked above");
        let group = CliffordGroup::get();
        (0..GROUP_ORDER)
            .map(|i| group.element(i))
            .find(|c| ProcessMatrix::<T>::from_clifford(c).pattern(T::lit(0.5)) == Some(pattern))
            .map_or(
                PermutationVerdict::NoMatchingClifford { pattern },
                PermutationVerdict::Clifford,
            )
    }
}

impl<T: Scalar + Serialize> Serialize for ProcessMatrix<T> {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.entries.serialize(serializer)
    }
}
