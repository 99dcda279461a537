// Copyright 2026 The framekit Authors
// SPDX-License-Identifier: Apache-2.0

use std::fmt;

use super::single::CliffordGate1;
use super::{conjugate_with_images, CliffordError, ConjugatePauli};
use crate::dense::DenseMatrix;
use crate::pauli::{PauliKind, PauliOperator};
use crate::scalar::Scalar;

/// Two-qubit Clifford as the signed images of `X⊗I, Z⊗I, I⊗X, I⊗Z`.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct CliffordTableau2 {
    images: [PauliOperator; 4],
}

fn generator(qubit: usize, kind: PauliKind) -> PauliOperator {
    PauliOperator::single(2, qubit, kind).expect("two-qubit generator")
}

fn lift(p: &PauliOperator, qubit: usize) -> PauliOperator {
    let id = PauliOperator::identity(1);
    let t = if qubit == 0 {
        p.tensor(&id)
    } else {
        id.tensor(p)
    };
    t.expect("two qubits")
}

impl CliffordTableau2 {
    /// Validates signs and the symplectic commutation pattern.
    pub fn from_images(images: [PauliOperator; 4]) -> Result<Self, CliffordError> {
        for img in &images {
            if img.num_qubits() != 2 {
                return Err(CliffordError::DimensionMismatch {
                    gate: 2,
                    operator: img.num_qubits(),
                });
            }
            if img.sign().is_none() || img.is_identity_up_to_phase() {
                return Err(CliffordError::InvalidImages(format!(
                    "{img} is not a signed non-identity Pauli"
                )));
            }
        }
        let gens = Self::identity().images;
        for i in 0..4 {
            for j in (i + 1)..4 {
                if gens[i].commutes_with(&gens[j]) != images[i].commutes_with(&images[j]) {
                    return Err(CliffordError::InvalidImages(format!(
                        "commutation of images {} and {} is not preserved",
                        images[i], images[j]
                    )));
                }
            }
        }
        // Independence: the four symplectic vectors must span the space.
        let mut span = std::collections::HashSet::from([0u128]);
        for img in &images {
            let v = img.symplectic();
            let extra: Vec<u128> = span.iter().map(|s| s ^ v).collect();
            span.extend(extra);
        }
        if span.len() != 16 {
            return Err(CliffordError::InvalidImages(
                "images are not independent".into(),
            ));
        }
        Ok(Self { images })
    }

    pub fn identity() -> Self {
        Self {
            images: [
                generator(0, PauliKind::X),
                generator(0, PauliKind::Z),
                generator(1, PauliKind::X),
                generator(1, PauliKind::Z),
            ],
        }
    }

    /// CNOT with qubit 0 as control: `XI→XX, ZI→ZI, IX→IX, IZ→ZZ`.
    pub fn cnot() -> Self {
        let p = |s: &str| s.parse::<PauliOperator>().expect("literal");
        Self {
            images: [p("XX"), p("ZI"), p("IX"), p("ZZ")],
        }
    }

    /// Images of `X⊗I, Z⊗I, I⊗X, I⊗Z`.
    pub fn images(&self) -> [PauliOperator; 4] {
        self.images
    }

    /// `self · other`: apply `other`, then `self`.
    pub fn compose(&self, other: &Self) -> Self {
        Self {
            images: other.images.map(|p| self.conj(&p)),
        }
    }

    fn conj(&self, p: &PauliOperator) -> PauliOperator {
        conjugate_with_images(
            p,
            &[self.images[0], self.images[2]],
            &[self.images[1], self.images[3]],
        )
    }

    /// Splits into `c1 ⊗ c2` when every image is supported on its own qubit.
    pub fn factor_tensor(&self) -> Option<(CliffordGate1, CliffordGate1)> {
        let [xa, za, xb, zb] = self.images;
        if xa.support() != 0b01
            || za.support() != 0b01
            || xb.support() != 0b10
            || zb.support() != 0b10
        {
            return None;
        }
        let restrict = |p: &PauliOperator, q: usize| {
            let f = p.factor(q);
            if p.sign() == Some(-1) {
                f.negate()
            } else {
                f
            }
        };
        let c1 = CliffordGate1::from_images(restrict(&xa, 0), restrict(&za, 0)).ok()?;
        let c2 = CliffordGate1::from_images(restrict(&xb, 1), restrict(&zb, 1)).ok()?;
        Some((c1, c2))
    }

    /// Recovers the tableau of a 4×4 Clifford unitary.
    pub fn from_unitary<T: Scalar>(u: &DenseMatrix<T>, tol: T) -> Option<Self> {
        if u.dim() != 4 || !u.is_unitary(tol) {
            return None;
        }
        let adj = u.adjoint();
        let gens = Self::identity().images;
        let mut images = gens;
        for (slot, g) in images.iter_mut().zip(gens.iter()) {
            let conj = u.matmul(&g.to_dense::<T>()).matmul(&adj);
            let (q, c) = PauliOperator::from_dense(&conj, tol)?;
            if (c.re.abs() - T::one()).abs() > tol || c.im.abs() > tol {
                return None;
            }
            *slot = if c.re < T::zero() { q.negate() } else { q };
        }
        Self::from_images(images).ok()
    }
}

/// `c1 ⊗ c2`, with `c1` on qubit 0.
pub fn tensor(c1: &CliffordGate1, c2: &CliffordGate1) -> CliffordTableau2 {
    CliffordTableau2 {
        images: [
            lift(&c1.x_image(), 0),
            lift(&c1.z_image(), 0),
            lift(&c2.x_image(), 1),
            lift(&c2.z_image(), 1),
        ],
    }
}

impl ConjugatePauli for CliffordTableau2 {
    fn num_qubits(&self) -> usize {
        2
    }

    fn conjugate_pauli(&self, p: &PauliOperator) -> Result<PauliOperator, CliffordError> {
        if p.num_qubits() != 2 {
            return Err(CliffordError::DimensionMismatch {
                gate: 2,
                operator: p.num_qubits(),
            });
        }
        Ok(self.conj(p))
    }
}

impl fmt::Debug for CliffordTableau2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c, d] = self.images;
        write!(f, "CliffordTableau2(XI→{a}, ZI→{b}, IX→{c}, IZ→{d})")
    }
}
