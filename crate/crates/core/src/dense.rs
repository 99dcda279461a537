// Copyright 2026 The framekit Authors
// SPDX-License-Identifier: Apache-2.0

//! Small dense complex matrices.
//!
//! This is the cross-check backend: tableau results are compared against
//! explicit matrix products here, and the channel analysis runs on it.

use num_complex::Complex;
use thiserror::Error;

use crate::pauli::PauliOperator;
use crate::scalar::Scalar;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum DenseError {
    #[error("dimension mismatch: {0} vs {1}")]
    DimensionMismatch(usize, usize),
    #[error("matrix is not unitary (max deviation {0:e})")]
    NotUnitary(f64),
    #[error("unsupported dimension {0}; expected 2 or 4")]
    UnsupportedDimension(usize),
}

/// Row-major square complex matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct DenseMatrix<T> {
    dim: usize,
    data: Vec<Complex<T>>,
}

/// A dense matrix expected to satisfy `U·U† = I`.
pub type DenseUnitary<T> = DenseMatrix<T>;

impl<T: Scalar> DenseMatrix<T> {
    pub fn zeros(dim: usize) -> Self {
        Self {
            dim,
            data: vec![Complex::new(T::zero(), T::zero()); dim * dim],
        }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zeros(dim);
        for i in 0..dim {
            m.set(i, i, Complex::new(T::one(), T::zero()));
        }
        m
    }

    /// Builds from row-major entries; panics unless `entries.len()` is a square.
    pub fn from_rows(entries: Vec<Complex<T>>) -> Self {
        let dim = (entries.len() as f64).sqrt().round() as usize;
        assert_eq!(
            dim * dim,
            entries.len(),
            "entry count must be a perfect square"
        );
        Self { dim, data: entries }
    }

    pub fn from_real(entries: &[f64]) -> Self {
        Self::from_rows(
            entries
                .iter()
                .map(|&v| Complex::new(T::lit(v), T::zero()))
                .collect(),
        )
    }

    pub fn diagonal(diag: &[Complex<T>]) -> Self {
        let mut m = Self::zeros(diag.len());
        for (i, &d) in diag.iter().enumerate() {
            m.set(i, i, d);
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, row: usize, col: usize) -> Complex<T> {
        self.data[row * self.dim + col]
    }

    pub fn set(&mut self, row: usize, col: usize, v: Complex<T>) {
        self.data[row * self.dim + col] = v;
    }

    pub fn entries(&self) -> &[Complex<T>] {
        &self.data
    }

    pub fn matmul(&self, rhs: &Self) -> Self {
        assert_eq!(self.dim, rhs.dim, "dimension mismatch");
        let d = self.dim;
        let mut out = Self::zeros(d);
        for i in 0..d {
            for k in 0..d {
                let a = self.data[i * d + k];
                if a.re == T::zero() && a.im == T::zero() {
                    continue;
                }
                for j in 0..d {
                    out.data[i * d + j] = out.data[i * d + j] + a * rhs.data[k * d + j];
                }
            }
        }
        out
    }

    pub fn checked_matmul(&self, rhs: &Self) -> Result<Self, DenseError> {
        if self.dim != rhs.dim {
            return Err(DenseError::DimensionMismatch(self.dim, rhs.dim));
        }
        Ok(self.matmul(rhs))
    }

    /// Left-to-right product of a sequence of matrices.
    pub fn product<'a, I>(factors: I) -> Self
    where
        I: IntoIterator<Item = &'a Self>,
    {
        let mut it = factors.into_iter();
        let first = it.next().expect("at least one factor").clone();
        it.fold(first, |acc, m| acc.matmul(m))
    }

    pub fn adjoint(&self) -> Self {
        let d = self.dim;
        let mut out = Self::zeros(d);
        for i in 0..d {
            for j in 0..d {
                out.data[j * d + i] = self.data[i * d + j].conj();
            }
        }
        out
    }

    pub fn transpose(&self) -> Self {
        let d = self.dim;
        let mut out = Self::zeros(d);
        for i in 0..d {
            for j in 0..d {
                out.data[j * d + i] = self.data[i * d + j];
            }
        }
        out
    }

    pub fn kron(&self, rhs: &Self) -> Self {
        let (a, b) = (self.dim, rhs.dim);
        let d = a * b;
        let mut out = Self::zeros(d);
        for i in 0..a {
            for j in 0..a {
                let s = self.data[i * a + j];
                for k in 0..b {
                    for l in 0..b {
                        out.data[(i * b + k) * d + j * b + l] = s * rhs.data[k * b + l];
                    }
                }
            }
        }
        out
    }

    pub fn scale(&self, c: Complex<T>) -> Self {
        Self {
            dim: self.dim,
            data: self.data.iter().map(|&v| v * c).collect(),
        }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        assert_eq!(self.dim, rhs.dim, "dimension mismatch");
        Self {
            dim: self.dim,
            data: self
                .data
                .iter()
                .zip(&rhs.data)
                .map(|(&a, &b)| a + b)
                .collect(),
        }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        assert_eq!(self.dim, rhs.dim, "dimension mismatch");
        Self {
            dim: self.dim,
            data: self
                .data
                .iter()
                .zip(&rhs.data)
                .map(|(&a, &b)| a - b)
                .collect(),
        }
    }

    pub fn trace(&self) -> Complex<T> {
        (0..self.dim).fold(Complex::new(T::zero(), T::zero()), |acc, i| {
            acc + self.get(i, i)
        })
    }

    /// Largest entry modulus.
    pub fn max_abs(&self) -> T {
        self.data.iter().fold(T::zero(), |acc, v| acc.max(v.norm()))
    }

    pub fn apply(&self, v: &[Complex<T>]) -> Vec<Complex<T>> {
        assert_eq!(v.len(), self.dim, "dimension mismatch");
        (0..self.dim)
            .map(|i| {
                (0..self.dim).fold(Complex::new(T::zero(), T::zero()), |acc, j| {
                    acc + self.get(i, j) * v[j]
                })
            })
            .collect()
    }

    /// Max-entry deviation of `U·U†` from the identity.
    pub fn unitarity_defect(&self) -> T {
        self.matmul(&self.adjoint())
            .sub(&Self::identity(self.dim))
            .max_abs()
    }

    pub fn is_unitary(&self, tol: T) -> bool {
        self.unitarity_defect() <= tol
    }

    pub fn ensure_unitary(&self, tol: T) -> Result<(), DenseError> {
        let defect = self.unitarity_defect();
        if defect <= tol {
            Ok(())
        } else {
            Err(DenseError::NotUnitary(defect.to_f64().unwrap_or(f64::NAN)))
        }
    }

    /// The phase `e^{iθ}` with `self ≈ e^{iθ}·other`, if one exists within `tol`.
    pub fn relative_phase(&self, other: &Self, tol: T) -> Option<Complex<T>> {
        if self.dim != other.dim {
            return None;
        }
        let (k, _) = other
            .data
            .iter()
            .enumerate()
            .fold((0, T::zero()), |(bk, bv), (i, v)| {
                if v.norm() > bv {
                    (i, v.norm())
                } else {
                    (bk, bv)
                }
            });
        let pivot = other.data[k];
        if pivot.norm() <= tol {
            return (self.max_abs() <= tol).then(|| Complex::new(T::one(), T::zero()));
        }
        let ratio = self.data[k] / pivot;
        if (ratio.norm() - T::one()).abs() > tol {
            return None;
        }
        let phase = ratio / ratio.norm();
        (self.sub(&other.scale(phase)).max_abs() <= tol).then_some(phase)
    }

    /// `true` iff `self = e^{iθ}·other` for some real `θ`, within `tol`.
    pub fn equal_up_to_phase(&self, other: &Self, tol: T) -> Result<bool, DenseError> {
        if self.dim != other.dim {
            return Err(DenseError::DimensionMismatch(self.dim, other.dim));
        }
        Ok(self.relative_phase(other, tol).is_some())
    }

    /// `true` iff conjugation by `self` maps every Pauli generator to a Pauli
    /// (up to phase). Supports one and two qubits.
    pub fn is_clifford(&self, tol: T) -> Result<bool, DenseError> {
        let n = match self.dim {
            2 => 1,
            4 => 2,
            d => return Err(DenseError::UnsupportedDimension(d)),
        };
        self.ensure_unitary(tol)?;
        let adj = self.adjoint();
        for q in 0..n {
            for kind in [crate::pauli::PauliKind::X, crate::pauli::PauliKind::Z] {
                let p = PauliOperator::single(n, q, kind)
                    .expect("qubit in range")
                    .to_dense::<T>();
                let image = self.matmul(&p).matmul(&adj);
                match PauliOperator::from_dense(&image, tol) {
                    Some((_, c)) if (c.norm() - T::one()).abs() <= tol => {}
                    _ => return Ok(false),
                }
            }
        }
        Ok(true)
    }
}

/// Two-qubit controlled gate `½(I+Z)⊗I + ½(I−Z)⊗U`, control on the first qubit.
pub fn controlled_u_matrix<T: Scalar>(u: &DenseMatrix<T>) -> Result<DenseMatrix<T>, DenseError> {
    if u.dim() != 2 {
        return Err(DenseError::DimensionMismatch(u.dim(), 2));
    }
    u.ensure_unitary(T::default_tol())?;
    let half = Complex::new(T::lit(0.5), T::zero());
    let i2 = DenseMatrix::identity(2);
    let z = gates::z::<T>();
    let up = i2.add(&z).scale(half);
    let down = i2.sub(&z).scale(half);
    Ok(up.kron(&i2).add(&down.kron(u)))
}

/// Standard gate matrices.
pub mod gates {
    use super::*;

    fn c<T: Scalar>(re: f64, im: f64) -> Complex<T> {
        Complex::new(T::lit(re), T::lit(im))
    }

    pub fn i<T: Scalar>() -> DenseMatrix<T> {
        DenseMatrix::identity(2)
    }

    pub fn x<T: Scalar>() -> DenseMatrix<T> {
        DenseMatrix::from_real(&[0.0, 1.0, 1.0, 0.0])
    }

    pub fn y<T: Scalar>() -> DenseMatrix<T> {
        DenseMatrix::from_rows(vec![c(0.0, 0.0), c(0.0, -1.0), c(0.0, 1.0), c(0.0, 0.0)])
    }

    pub fn z<T: Scalar>() -> DenseMatrix<T> {
        DenseMatrix::from_real(&[1.0, 0.0, 0.0, -1.0])
    }

    pub fn h<T: Scalar>() -> DenseMatrix<T> {
        let r = std::f64::consts::FRAC_1_SQRT_2;
        DenseMatrix::from_real(&[r, r, r, -r])
    }

    /// Phase gate `diag(1, i)`.
    pub fn s<T: Scalar>() -> DenseMatrix<T> {
        DenseMatrix::diagonal(&[c(1.0, 0.0), c(0.0, 1.0)])
    }

    pub fn sdg<T: Scalar>() -> DenseMatrix<T> {
        DenseMatrix::diagonal(&[c(1.0, 0.0), c(0.0, -1.0)])
    }

    /// `diag(1, e^{iπ/4})`.
    pub fn t<T: Scalar>() -> DenseMatrix<T> {
        let a = T::FRAC_PI_4();
        DenseMatrix::diagonal(&[c(1.0, 0.0), Complex::new(a.cos(), a.sin())])
    }

    pub fn tdg<T: Scalar>() -> DenseMatrix<T> {
        t::<T>().adjoint()
    }

    /// CNOT with the first qubit as control.
    pub fn cnot<T: Scalar>() -> DenseMatrix<T> {
        DenseMatrix::from_real(&[
            1.0, 0.0, 0.0, 0.0, //
            0.0, 1.0, 0.0, 0.0, //
            0.0, 0.0, 0.0, 1.0, //
            0.0, 0.0, 1.0, 0.0,
        ])
    }

    /// `exp(iθ·P)` for a Hermitian Pauli matrix `P` (so `P² = I`).
    pub fn pauli_rotation<T: Scalar>(p: &DenseMatrix<T>, theta: T) -> DenseMatrix<T> {
        let id = DenseMatrix::identity(p.dim());
        id.scale(Complex::new(theta.cos(), T::zero()))
            .add(&p.scale(Complex::new(T::zero(), theta.sin())))
    }
}

#[cfg(test)]
mod tests {
    use super::gates::*;
    use super::*;

    type M = DenseMatrix<f64>;

    #[test]
    fn standard_gates_are_unitary() {
        for g in [
            i::<f64>(),
            x(),
            y(),
            z(),
            h(),
            s(),
            sdg(),
            t(),
            tdg(),
            cnot(),
        ] {
            assert!(g.is_unitary(1e-12));
        }
    }

    #[test]
    fn equal_up_to_phase_examples() {
        let u = h::<f64>().matmul(&t());
        let a = std::f64::consts::PI / 7.0;
        let rotated = u.scale(Complex::new(a.cos(), a.sin()));
        assert!(rotated.equal_up_to_phase(&u, 1e-10).unwrap());
        assert!(!h::<f64>().equal_up_to_phase(&s(), 1e-10).unwrap());
        assert!(z::<f64>()
            .equal_up_to_phase(&z::<f64>().scale(Complex::new(-1.0, 0.0)), 1e-10)
            .unwrap());
        assert_eq!(
            h::<f64>().equal_up_to_phase(&cnot(), 1e-10),
            Err(DenseError::DimensionMismatch(2, 4))
        );
    }

    #[test]
    fn controlled_u_examples() {
        assert!(controlled_u_matrix(&i::<f64>())
            .unwrap()
            .equal_up_to_phase(&M::identity(4), 0.0)
            .unwrap());
        assert_eq!(controlled_u_matrix(&x::<f64>()).unwrap(), cnot());
        let cz = controlled_u_matrix(&z::<f64>()).unwrap();
        assert_eq!(
            cz,
            M::from_real(&[1., 0., 0., 0., 0., 1., 0., 0., 0., 0., 1., 0., 0., 0., 0., -1.])
        );
        let bad = M::from_real(&[1.0, 1.0, 0.0, 1.0]);
        assert!(matches!(
            controlled_u_matrix(&bad),
            Err(DenseError::NotUnitary(_))
        ));
    }

    #[test]
    fn clifford_test_examples() {
        assert!(s::<f64>().is_clifford(1e-10).unwrap());
        assert!(!t::<f64>().is_clifford(1e-10).unwrap());
        let tst = t::<f64>().matmul(&s()).matmul(&tdg());
        assert!(tst.is_clifford(1e-10).unwrap());
        assert!(cnot::<f64>().is_clifford(1e-10).unwrap());
        assert_eq!(
            M::identity(8).is_clifford(1e-10),
            Err(DenseError::UnsupportedDimension(8))
        );
    }

    #[test]
    fn single_precision_backend() {
        let u = h::<f32>().matmul(&s());
        assert!(u.is_unitary(f32::default_tol()));
        assert!(u.is_clifford(f32::default_tol()).unwrap());
        assert!(!t::<f32>().is_clifford(f32::default_tol()).unwrap());
    }
}
