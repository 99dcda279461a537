// Copyright 2026 The framekit Authors
// SPDX-License-Identifier: Apache-2.0

use std::fmt;

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use super::group::CliffordGroup;
use super::{conjugate_with_images, CliffordError, ConjugatePauli};
use crate::dense::{gates, DenseMatrix};
use crate::pauli::{PauliKind, PauliOperator};
use crate::scalar::Scalar;

/// Single-qubit Clifford, stored as the signed images of `X` and `Z`.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct CliffordGate1 {
    x_image: PauliOperator,
    z_image: PauliOperator,
}

fn signed(kind: PauliKind, negative: bool) -> PauliOperator {
    let p = PauliOperator::from_kinds(&[kind]);
    if negative {
        p.negate()
    } else {
        p
    }
}

impl CliffordGate1 {
    /// Validates that the images are signed, non-identity and anticommuting.
    pub fn from_images(
        x_image: PauliOperator,
        z_image: PauliOperator,
    ) -> Result<Self, CliffordError> {
        for img in [&x_image, &z_image] {
            if img.num_qubits() != 1 {
                return Err(CliffordError::DimensionMismatch {
                    gate: 1,
                    operator: img.num_qubits(),
                });
            }
            if img.sign().is_none() || img.is_identity_up_to_phase() {
                return Err(CliffordError::InvalidImages(format!(
                    "{img} is not a signed non-identity Pauli"
                )));
            }
        }
        if x_image.commutes_with(&z_image) {
            return Err(CliffordError::InvalidImages(format!(
                "{x_image} and {z_image} commute"
            )));
        }
        Ok(Self { x_image, z_image })
    }

    pub(crate) const fn from_images_unchecked(
        x_image: PauliOperator,
        z_image: PauliOperator,
    ) -> Self {
        Self { x_image, z_image }
    }

    fn named(x: (PauliKind, bool), z: (PauliKind, bool)) -> Self {
        Self::from_images_unchecked(signed(x.0, x.1), signed(z.0, z.1))
    }

    pub fn identity() -> Self {
        Self::named((PauliKind::X, false), (PauliKind::Z, false))
    }

    pub fn x() -> Self {
        Self::named((PauliKind::X, false), (PauliKind::Z, true))
    }

    pub fn y() -> Self {
        Self::named((PauliKind::X, true), (PauliKind::Z, true))
    }

    pub fn z() -> Self {
        Self::named((PauliKind::X, true), (PauliKind::Z, false))
    }

    pub fn h() -> Self {
        Self::named((PauliKind::Z, false), (PauliKind::X, false))
    }

    /// Phase gate `diag(1, i)`: `X ↦ Y`, `Z ↦ Z`.
    pub fn s() -> Self {
        Self::named((PauliKind::Y, false), (PauliKind::Z, false))
    }

    pub fn sdg() -> Self {
        Self::named((PauliKind::Y, true), (PauliKind::Z, false))
    }

    /// The Pauli gate with the given letter.
    pub fn pauli(kind: PauliKind) -> Self {
        match kind {
            PauliKind::I => Self::identity(),
            PauliKind::X => Self::x(),
            PauliKind::Y => Self::y(),
            PauliKind::Z => Self::z(),
        }
    }

    pub fn x_image(&self) -> PauliOperator {
        self.x_image
    }

    pub fn z_image(&self) -> PauliOperator {
        self.z_image
    }

    /// Image of `Y = iXZ`.
    pub fn y_image(&self) -> PauliOperator {
        (self.x_image * self.z_image).times_phase(1)
    }

    /// Sort key used for canonical ordering: letters then signs of the images.
    pub fn encoding(&self) -> u8 {
        let part = |p: &PauliOperator| {
            let k = p.kind_at(0).basis_index() as u8;
            k << 1 | u8::from(p.sign() == Some(-1))
        };
        part(&self.x_image) << 3 | part(&self.z_image)
    }

    /// Canonical index in `0..24`.
    pub fn index(&self) -> usize {
        CliffordGroup::get().index_of(self)
    }

    pub fn from_index(index: usize) -> Result<Self, CliffordError> {
        CliffordGroup::get()
            .elements()
            .get(index)
            .copied()
            .ok_or(CliffordError::UnknownIndex(index))
    }

    /// Generator word over `{H, S}` written as an operator product.
    pub fn word(&self) -> &'static str {
        CliffordGroup::get().word(self.index())
    }

    /// `self · other`: apply `other`, then `self`.
    pub fn compose(&self, other: &Self) -> Self {
        Self::from_images_unchecked(self.conj(&other.x_image), self.conj(&other.z_image))
    }

    pub fn inverse(&self) -> Self {
        CliffordGroup::get().inverse(self)
    }

    fn conj(&self, p: &PauliOperator) -> PauliOperator {
        conjugate_with_images(p, &[self.x_image], &[self.z_image])
    }

    pub fn is_pauli(&self) -> bool {
        self.x_image.kind_at(0) == PauliKind::X && self.z_image.kind_at(0) == PauliKind::Z
    }

    /// Dense matrix built from the generator word (global phase arbitrary).
    pub fn to_dense<T: Scalar>(&self) -> DenseMatrix<T> {
        self.word()
            .chars()
            .map(|c| match c {
                'H' => gates::h::<T>(),
                'S' => gates::s::<T>(),
                _ => gates::i::<T>(),
            })
            .reduce(|a, b| a.matmul(&b))
            .unwrap_or_else(gates::i::<T>)
    }

    /// Recovers the Clifford realised by a 2×2 unitary, if it is one.
    pub fn from_unitary<T: Scalar>(u: &DenseMatrix<T>, tol: T) -> Option<Self> {
        if u.dim() != 2 || !u.is_unitary(tol) {
            return None;
        }
        let image = |kind| {
            let p = PauliOperator::from_kinds(&[kind]).to_dense::<T>();
            let (q, c) = PauliOperator::from_dense(&u.matmul(&p).matmul(&u.adjoint()), tol)?;
            if (c.re.abs() - T::one()).abs() > tol || c.im.abs() > tol {
                return None;
            }
            Some(if c.re < T::zero() { q.negate() } else { q })
        };
        Self::from_images(image(PauliKind::X)?, image(PauliKind::Z)?).ok()
    }
}

impl Default for CliffordGate1 {
    fn default() -> Self {
        Self::identity()
    }
}

impl ConjugatePauli for CliffordGate1 {
    fn num_qubits(&self) -> usize {
        1
    }

    fn conjugate_pauli(&self, p: &PauliOperator) -> Result<PauliOperator, CliffordError> {
        if p.num_qubits() != 1 {
            return Err(CliffordError::DimensionMismatch {
                gate: 1,
                operator: p.num_qubits(),
            });
        }
        Ok(self.conj(p))
    }
}

impl fmt::Debug for CliffordGate1 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CliffordGate1(X→{}, Z→{})", self.x_image, self.z_image)
    }
}

impl fmt::Display for CliffordGate1 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "C{}[{}]", self.index(), self.word())
    }
}

impl Serialize for CliffordGate1 {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut st = serializer.serialize_struct("CliffordGate1", 2)?;
        st.serialize_field("index", &self.index())?;
        st.serialize_field("word", self.word())?;
        st.end()
    }
}
