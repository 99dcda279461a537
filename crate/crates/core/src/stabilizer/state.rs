// Copyright 2026 The framekit Authors
// SPDX-License-Identifier: Apache-2.0

//! Pure states on a few qubits. Qubit 0 is the most significant bit of the
//! amplitude index, matching the Kronecker order of [`DenseMatrix::kron`].

use num_complex::Complex;

use super::StabilizerError;
use crate::dense::DenseMatrix;
use crate::pauli::PauliOperator;
use crate::scalar::Scalar;

#[derive(Debug, Clone, PartialEq)]
pub struct StateVector<T> {
    num_qubits: usize,
    amps: Vec<Complex<T>>,
}

fn zero<T: Scalar>() -> Complex<T> {
    Complex::new(T::zero(), T::zero())
}

/// Reverses the low `m` bits so that qubit `q` lands on index bit `m − 1 − q`.
fn index_mask(mask: u64, m: usize) -> usize {
    if m == 0 {
        return 0;
    }
    (mask.reverse_bits() >> (64 - m)) as usize
}

impl<T: Scalar> StateVector<T> {
    /// `|0…0⟩`.
    pub fn zero_state(num_qubits: usize) -> Self {
        Self::basis(num_qubits, 0)
    }

    pub fn basis(num_qubits: usize, index: usize) -> Self {
        assert!(num_qubits < 32, "state too large");
        let mut amps = vec![zero(); 1 << num_qubits];
        amps[index] = Complex::new(T::one(), T::zero());
        Self { num_qubits, amps }
    }

    pub fn from_amplitudes(amps: Vec<Complex<T>>) -> Result<Self, StabilizerError> {
        if !amps.len().is_power_of_two() {
            return Err(StabilizerError::DimensionMismatch(
                amps.len(),
                amps.len().next_power_of_two(),
            ));
        }
        Ok(Self {
            num_qubits: amps.len().trailing_zeros() as usize,
            amps,
        })
    }

    pub fn num_qubits(&self) -> usize {
        self.num_qubits
    }

    pub fn amplitudes(&self) -> &[Complex<T>] {
        &self.amps
    }

    pub fn norm_sqr(&self) -> T {
        self.amps
            .iter()
            .fold(T::zero(), |acc, a| acc + a.norm_sqr())
    }

    pub fn scale(&mut self, c: Complex<T>) {
        for a in &mut self.amps {
            *a = *a * c;
        }
    }

    /// Rescales to unit norm and returns the old squared norm.
    pub fn normalize(&mut self) -> T {
        let n2 = self.norm_sqr();
        if n2 > T::zero() {
            self.scale(Complex::new(T::one() / n2.sqrt(), T::zero()));
        }
        n2
    }

    pub fn inner(&self, other: &Self) -> Complex<T> {
        self.amps
            .iter()
            .zip(&other.amps)
            .fold(zero(), |acc, (a, b)| acc + a.conj() * b)
    }

    pub fn add_scaled(&mut self, other: &Self, c: Complex<T>) {
        for (a, b) in self.amps.iter_mut().zip(&other.amps) {
            *a = *a + *b * c;
        }
    }

    /// Tensor product with `other` on the following qubits.
    pub fn tensor(&self, other: &Self) -> Self {
        let amps = self
            .amps
            .iter()
            .flat_map(|a| other.amps.iter().map(move |b| *a * b))
            .collect();
        Self {
            num_qubits: self.num_qubits + other.num_qubits,
            amps,
        }
    }

    /// Applies a Pauli on all qubits.
    pub fn apply_pauli(&mut self, p: &PauliOperator) {
        assert_eq!(p.num_qubits(), self.num_qubits, "Pauli width");
        let m = self.num_qubits;
        let (xm, zm) = (index_mask(p.x_bits(), m), index_mask(p.z_bits(), m));
        let i_pow = [
            Complex::new(T::one(), T::zero()),
            Complex::new(T::zero(), T::one()),
            Complex::new(-T::one(), T::zero()),
            Complex::new(T::zero(), -T::one()),
        ];
        let phase = i_pow[p.phase() as usize & 3];
        let old = std::mem::take(&mut self.amps);
        let mut amps = vec![zero(); old.len()];
        // i^k X^x Z^z |b⟩ = i^k (−1)^{|z∧b|} |b ⊕ x⟩
        for (b, a) in old.into_iter().enumerate() {
            let s = if (b & zm).count_ones() % 2 == 1 {
                -phase
            } else {
                phase
            };
            amps[b ^ xm] = a * s;
        }
        self.amps = amps;
    }

    pub fn apply_pauli_on(&mut self, first: usize, p: &PauliOperator) {
        let before = PauliOperator::identity(first);
        let after = PauliOperator::identity(self.num_qubits - first - p.num_qubits());
        let full = before
            .tensor(p)
            .and_then(|q| q.tensor(&after))
            .expect("width fits");
        self.apply_pauli(&full);
    }

    pub fn expectation(&self, p: &PauliOperator) -> Complex<T> {
        let mut q = self.clone();
        q.apply_pauli(p);
        self.inner(&q)
    }

    /// Applies a `2^k × 2^k` matrix to the contiguous qubits `first..first+k`.
    pub fn apply_block(&mut self, first: usize, u: &DenseMatrix<T>) {
        let d = u.dim();
        assert!(d.is_power_of_two() && d > 1);
        let k = d.trailing_zeros() as usize;
        assert!(first + k <= self.num_qubits, "block outside the register");
        let shift = self.num_qubits - first - k;
        let low = 1usize << shift;
        let mut buf = vec![zero(); d];
        for high in 0..(self.amps.len() >> (shift + k)) {
            for lo in 0..low {
                let base = (high << (shift + k)) | lo;
                for (j, slot) in buf.iter_mut().enumerate() {
                    *slot = self.amps[base | j << shift];
                }
                for r in 0..d {
                    let mut acc = zero();
                    for (c, v) in buf.iter().enumerate() {
                        acc = acc + u.get(r, c) * v;
                    }
                    self.amps[base | r << shift] = acc;
                }
            }
        }
    }

    pub fn apply_single(&mut self, qubit: usize, u: &DenseMatrix<T>) {
        assert_eq!(u.dim(), 2);
        self.apply_block(qubit, u);
    }

    pub fn apply_cnot(&mut self, control: usize, target: usize) {
        assert!(control != target && control < self.num_qubits && target < self.num_qubits);
        let cb = 1usize << (self.num_qubits - 1 - control);
        let tb = 1usize << (self.num_qubits - 1 - target);
        for b in 0..self.amps.len() {
            if b & cb != 0 && b & tb == 0 {
                self.amps.swap(b, b | tb);
            }
        }
    }
}
