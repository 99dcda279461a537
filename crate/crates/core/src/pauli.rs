// Copyright 2026 The framekit Authors
// SPDX-License-Identifier: Apache-2.0

//! Phased n-qubit Pauli operators in symplectic (bit-mask) form.
//!
//! An operator is stored as `i^phase · X^x Z^z`, factor by factor, with qubit
//! `k` held in bit `k` of the two masks. Under this convention `Y = i·XZ`, so a
//! Hermitian operator carries `phase ≡ popcount(x & z) (mod 2)`. Qubit 0 is the
//! leftmost tensor factor when converting to a dense matrix.

use std::fmt;
use std::ops::Mul;
use std::str::FromStr;

use num_complex::Complex;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

use crate::dense::DenseMatrix;
use crate::scalar::Scalar;

/// Maximum supported qubit count (one `u64` mask per component).
pub const MAX_QUBITS: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PauliError {
    #[error("qubit count mismatch: {0} vs {1}")]
    DimensionMismatch(usize, usize),
    #[error("qubit index {index} out of range for {n} qubits")]
    QubitOutOfRange { index: usize, n: usize },
    #[error("at most {MAX_QUBITS} qubits are supported, got {0}")]
    TooManyQubits(usize),
    #[error("invalid Pauli string {0:?}")]
    Parse(String),
}

/// Single-qubit Pauli letter.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PauliKind {
    I,
    X,
    Y,
    Z,
}

impl PauliKind {
    pub const ALL: [PauliKind; 4] = [PauliKind::I, PauliKind::X, PauliKind::Y, PauliKind::Z];

    pub fn bits(self) -> (bool, bool) {
        match self {
            PauliKind::I => (false, false),
            PauliKind::X => (true, false),
            PauliKind::Y => (true, true),
            PauliKind::Z => (false, true),
        }
    }

    pub fn from_bits(x: bool, z: bool) -> Self {
        match (x, z) {
            (false, false) => PauliKind::I,
            (true, false) => PauliKind::X,
            (true, true) => PauliKind::Y,
            (false, true) => PauliKind::Z,
        }
    }

    pub fn letter(self) -> char {
        match self {
            PauliKind::I => 'I',
            PauliKind::X => 'X',
            PauliKind::Y => 'Y',
            PauliKind::Z => 'Z',
        }
    }

    /// Position in the `(I, X, Y, Z)` basis ordering.
    pub fn basis_index(self) -> usize {
        self as usize
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct PauliOperator {
    n: u8,
    x: u64,
    z: u64,
    phase: u8,
}

fn mask(n: usize) -> u64 {
    if n == 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

impl PauliOperator {
    pub fn identity(n: usize) -> Self {
        assert!(n <= MAX_QUBITS, "at most {MAX_QUBITS} qubits");
        Self {
            n: n as u8,
            x: 0,
            z: 0,
            phase: 0,
        }
    }

    /// Builds `i^phase · X^x Z^z`; bits above `n` are rejected.
    pub fn from_bits(n: usize, x: u64, z: u64, phase: u8) -> Result<Self, PauliError> {
        if n > MAX_QUBITS {
            return Err(PauliError::TooManyQubits(n));
        }
        let m = mask(n);
        if x & !m != 0 || z & !m != 0 {
            let top = 63 - ((x | z) & !m).leading_zeros() as usize;
            return Err(PauliError::QubitOutOfRange { index: top, n });
        }
        Ok(Self {
            n: n as u8,
            x,
            z,
            phase: phase & 3,
        })
    }

    /// Hermitian single-qubit Pauli `kind` acting on `qubit` of an `n`-qubit register.
    pub fn single(n: usize, qubit: usize, kind: PauliKind) -> Result<Self, PauliError> {
        if qubit >= n {
            return Err(PauliError::QubitOutOfRange { index: qubit, n });
        }
        let (xb, zb) = kind.bits();
        let bit = 1u64 << qubit;
        let x = if xb { bit } else { 0 };
        let z = if zb { bit } else { 0 };
        let phase = u8::from(xb && zb);
        Self::from_bits(n, x, z, phase)
    }

    /// Hermitian tensor product of the given letters, qubit 0 first.
    pub fn from_kinds(kinds: &[PauliKind]) -> Self {
        let mut p = Self::identity(kinds.len());
        for (q, &k) in kinds.iter().enumerate() {
            let (xb, zb) = k.bits();
            if xb {
                p.x |= 1 << q;
            }
            if zb {
                p.z |= 1 << q;
            }
        }
        p.phase = (p.y_count() & 3) as u8;
        p
    }

    pub fn num_qubits(&self) -> usize {
        self.n as usize
    }

    pub fn x_bits(&self) -> u64 {
        self.x
    }

    pub fn z_bits(&self) -> u64 {
        self.z
    }

    /// Exponent of `i` in the `X^x Z^z` convention.
    pub fn phase(&self) -> u8 {
        self.phase
    }

    pub fn kind_at(&self, qubit: usize) -> PauliKind {
        PauliKind::from_bits(self.x >> qubit & 1 == 1, self.z >> qubit & 1 == 1)
    }

    pub fn kinds(&self) -> Vec<PauliKind> {
        (0..self.num_qubits()).map(|q| self.kind_at(q)).collect()
    }

    fn y_count(&self) -> u32 {
        (self.x & self.z).count_ones()
    }

    /// Number of qubits acted on non-trivially.
    pub fn weight(&self) -> usize {
        (self.x | self.z).count_ones() as usize
    }

    /// Bit mask of qubits acted on non-trivially.
    pub fn support(&self) -> u64 {
        self.x | self.z
    }

    pub fn is_identity_up_to_phase(&self) -> bool {
        self.x == 0 && self.z == 0
    }

    /// Coefficient of the Hermitian label as a power of `i`: the operator equals
    /// `i^k · (⊗ letters)`.
    pub fn label_phase(&self) -> u8 {
        ((self.phase as u32 + 4 - (self.y_count() & 3)) & 3) as u8
    }

    pub fn is_hermitian(&self) -> bool {
        self.label_phase() & 1 == 0
    }

    /// `Some(±1)` when the operator is `±` a Hermitian Pauli.
    pub fn sign(&self) -> Option<i8> {
        match self.label_phase() {
            0 => Some(1),
            2 => Some(-1),
            _ => None,
        }
    }

    /// Multiplies by `i^k`.
    pub fn times_phase(mut self, k: u8) -> Self {
        self.phase = (self.phase + k) & 3;
        self
    }

    pub fn negate(self) -> Self {
        self.times_phase(2)
    }

    /// The `+1` Hermitian representative with the same letters.
    pub fn unsigned(mut self) -> Self {
        self.phase = (self.y_count() & 3) as u8;
        self
    }

    pub fn commutes_with(&self, other: &Self) -> bool {
        assert_eq!(self.n, other.n, "qubit count mismatch");
        ((self.x & other.z).count_ones() + (self.z & other.x).count_ones()).is_multiple_of(2)
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self, PauliError> {
        if self.n != other.n {
            return Err(PauliError::DimensionMismatch(
                self.num_qubits(),
                other.num_qubits(),
            ));
        }
        // Z^z1 X^x2 = (-1)^{z1·x2} X^x2 Z^z1, factor by factor.
        let swaps = (self.z & other.x).count_ones() as u8;
        Ok(Self {
            n: self.n,
            x: self.x ^ other.x,
            z: self.z ^ other.z,
            phase: (self.phase + other.phase + 2 * (swaps & 1)) & 3,
        })
    }

    /// `self ⊗ other`, with `other`'s qubits appended after `self`'s.
    pub fn tensor(&self, other: &Self) -> Result<Self, PauliError> {
        let n = self.num_qubits() + other.num_qubits();
        Self::from_bits(
            n,
            self.x | other.x << self.n,
            self.z | other.z << self.n,
            self.phase + other.phase,
        )
    }

    /// Single-qubit Hermitian factor on `qubit` (sign dropped).
    pub fn factor(&self, qubit: usize) -> PauliOperator {
        PauliOperator::from_kinds(&[self.kind_at(qubit)])
    }

    /// Symplectic vector `x | z << n` used by GF(2) routines.
    pub fn symplectic(&self) -> u128 {
        self.x as u128 | (self.z as u128) << self.n
    }

    pub fn from_symplectic(n: usize, v: u128) -> Self {
        let m = mask(n) as u128;
        let x = (v & m) as u64;
        let z = ((v >> n) & m) as u64;
        let mut p = Self::from_bits(n, x, z, 0).expect("masked bits");
        p.phase = (p.y_count() & 3) as u8;
        p
    }

    /// Dense `2^n × 2^n` matrix, qubit 0 leftmost.
    pub fn to_dense<T: Scalar>(&self) -> DenseMatrix<T> {
        let n = self.num_qubits();
        let dim = 1usize << n;
        let mut m = DenseMatrix::zeros(dim);
        let phase = Complex::<T>::i().powu(self.phase as u32);
        for col in 0..dim {
            // X^x Z^z |col>: Z contributes (-1)^{z·col}, X flips bits.
            let mut sign_flips = 0u32;
            let mut row = col;
            for q in 0..n {
                let pos = n - 1 - q;
                let bit = (col >> pos) & 1;
                if (self.z >> q) & 1 == 1 && bit == 1 {
                    sign_flips += 1;
                }
                if (self.x >> q) & 1 == 1 {
                    row ^= 1 << pos;
                }
            }
            let v = if sign_flips % 2 == 1 { -phase } else { phase };
            m.set(row, col, v);
        }
        m
    }

    /// Identifies a dense matrix proportional to a Pauli: returns the Pauli and
    /// the complex factor `c` such that `m = c · P` (with `P` the Hermitian label).
    pub fn from_dense<T: Scalar>(
        m: &DenseMatrix<T>,
        tol: T,
    ) -> Option<(PauliOperator, Complex<T>)> {
        let dim = m.dim();
        if !dim.is_power_of_two() {
            return None;
        }
        let n = dim.trailing_zeros() as usize;
        if n > 6 {
            return None;
        }
        let dim_t = T::from_usize(dim)?;
        for v in 0..(1u128 << (2 * n)) {
            let p = PauliOperator::from_symplectic(n, v);
            let pd = p.to_dense::<T>();
            // Tr(P† m) / dim
            let c = pd.adjoint().matmul(m).trace() / dim_t;
            if c.norm() > T::lit(0.5) {
                let diff = m.sub(&pd.scale(c)).max_abs();
                return (diff <= tol).then_some((p, c));
            }
        }
        None
    }
}

impl Mul for PauliOperator {
    type Output = PauliOperator;

    fn mul(self, rhs: Self) -> Self::Output {
        self.checked_mul(&rhs).expect("qubit count mismatch")
    }
}

impl fmt::Display for PauliOperator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let prefix = ["+", "+i", "-", "-i"][self.label_phase() as usize];
        f.write_str(prefix)?;
        for q in 0..self.num_qubits() {
            write!(f, "{}", self.kind_at(q).letter())?;
        }
        Ok(())
    }
}

impl fmt::Debug for PauliOperator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PauliOperator({self})")
    }
}

impl FromStr for PauliOperator {
    type Err = PauliError;

    /// Accepts an optional `+`, `-`, `+i`, `-i` or `i` prefix followed by letters.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let (k, rest) = if let Some(r) = s.strip_prefix("+i") {
            (1, r)
        } else if let Some(r) = s.strip_prefix("-i") {
            (3, r)
        } else if let Some(r) = s.strip_prefix('i') {
            (1, r)
        } else if let Some(r) = s.strip_prefix('+') {
            (0, r)
        } else if let Some(r) = s.strip_prefix('-') {
            (2, r)
        } else {
            (0, s)
        };
        if rest.is_empty() || rest.len() > MAX_QUBITS {
            return Err(PauliError::Parse(s.to_string()));
        }
        let kinds = rest
            .chars()
            .map(|c| match c {
                'I' => Ok(PauliKind::I),
                'X' => Ok(PauliKind::X),
                'Y' => Ok(PauliKind::Y),
                'Z' => Ok(PauliKind::Z),
                _ => Err(PauliError::Parse(s.to_string())),
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(PauliOperator::from_kinds(&kinds).times_phase(k))
    }
}

impl Serialize for PauliOperator {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for PauliOperator {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}
