// Copyright 2026 The framekit Authors
// SPDX-License-Identifier: Apache-2.0

//! Effective logical channel of a physical error followed by syndrome
//! projection and pure-error correction.
//!
//! The code's logical qubit is maximally entangled with a reference qubit
//! (qubit 0; code qubits are `1..=n`). After the error, the projection onto
//! syndrome `s` and the correction `T_s`, the state lies in the code space and
//! decodes to a two-qubit state `ψ_dec[l·2 + a] = ⟨a, l̄|φ⟩`. Its projector is
//! the Choi state of the logical channel, and
//! `Λ_ij ∝ Tr[J·(P_j ⊗ P_iᵀ)]`, normalised so that `Λ_00 = 1`.

use num_complex::Complex;
use rand::Rng;
use serde::Serialize;

use super::code::StabilizerCode;
use super::process::{PermutationVerdict, ProcessMatrix};
use super::state::StateVector;
use super::StabilizerError;
use crate::clifford::{CliffordGate1, CliffordGroup, GROUP_ORDER};
use crate::dense::{gates, DenseMatrix};
use crate::pauli::PauliOperator;
use crate::protocol::rng::trial_rng;
use crate::protocol::{Executor, Gate, LogicalCircuit};
use crate::scalar::Scalar;

/// A physical error on the `n` code qubits.
#[derive(Debug, Clone)]
pub enum PhysicalError<T> {
    /// One single-qubit Clifford per code qubit.
    Transversal(Vec<CliffordGate1>),
    Pauli(PauliOperator),
    /// One arbitrary single-qubit unitary per code qubit.
    Local(Vec<DenseMatrix<T>>),
    /// A `2^n × 2^n` unitary on all code qubits.
    Dense(DenseMatrix<T>),
    /// A gate sequence on the code qubits, indices `0..n`.
    Circuit(LogicalCircuit),
}

impl<T: Scalar> PhysicalError<T> {
    fn apply(&self, state: &mut StateVector<T>, n: usize) -> Result<(), StabilizerError> {
        let width = |w: usize| {
            if w == n {
                Ok(())
            } else {
                Err(StabilizerError::DimensionMismatch(w, n))
            }
        };
        match self {
            PhysicalError::Transversal(cs) => {
                width(cs.len())?;
                for (q, c) in cs.iter().enumerate() {
                    state.apply_single(q + 1, &c.to_dense());
                }
            }
            PhysicalError::Pauli(p) => {
                width(p.num_qubits())?;
                state.apply_pauli_on(1, p);
            }
            PhysicalError::Local(us) => {
                width(us.len())?;
                for (q, u) in us.iter().enumerate() {
                    if u.dim() != 2 {
                        return Err(StabilizerError::DimensionMismatch(u.dim(), 2));
                    }
                    state.apply_single(q + 1, u);
                }
            }
            PhysicalError::Dense(u) => {
                width(u.dim().trailing_zeros() as usize)?;
                if u.dim() != 1 << n {
                    return Err(StabilizerError::DimensionMismatch(u.dim(), 1 << n));
                }
                state.apply_block(1, u);
            }
            PhysicalError::Circuit(c) => {
                width(c.num_qubits())?;
                for g in c.gates() {
                    match *g {
                        Gate::Cnot(a, b) => state.apply_cnot(a + 1, b + 1),
                        Gate::T(q) => state.apply_single(q + 1, &gates::t()),
                        Gate::Tdg(q) => state.apply_single(q + 1, &gates::tdg()),
                        g => {
                            let (q, c) = g.clifford().expect("single-qubit Clifford gate");
                            state.apply_single(q + 1, &c.to_dense());
                        }
                    }
                }
            }
        }
        Ok(())
    }

    pub fn describe(&self) -> String {
        match self {
            PhysicalError::Transversal(cs) => cs
                .iter()
                .map(|c| c.to_string())
                .collect::<Vec<_>>()
                .join(" ⊗ "),
            PhysicalError::Pauli(p) => p.to_string(),
            PhysicalError::Local(us) => format!("local unitaries on {} qubits", us.len()),
            PhysicalError::Dense(u) => format!("dense unitary of dimension {}", u.dim()),
            PhysicalError::Circuit(c) => c
                .gates()
                .iter()
                .map(|g| g.to_string())
                .collect::<Vec<_>>()
                .join("; "),
        }
    }
}

/// Logical basis states and the encoded Bell state of a code.
#[derive(Debug, Clone)]
pub struct CodeChannel<T> {
    code: StabilizerCode,
    zero: StateVector<T>,
    one: StateVector<T>,
    bell: StateVector<T>,
}

fn project<T: Scalar>(state: &mut StateVector<T>, p: &PauliOperator, sign: T, first: usize) {
    // state ← (state + sign·P·state) / 2
    let mut q = state.clone();
    q.apply_pauli_on(first, p);
    let half = T::lit(0.5);
    state.scale(Complex::new(half, T::zero()));
    state.add_scaled(&q, Complex::new(half * sign, T::zero()));
}

impl<T: Scalar> CodeChannel<T> {
    pub fn new(code: StabilizerCode) -> Self {
        let n = code.num_qubits();
        // |0̄⟩: the first basis state with nonzero overlap on the +1 eigenspace
        // of every generator and of Z̄.
        let checks: Vec<PauliOperator> = code
            .generators()
            .iter()
            .copied()
            .chain([code.logical_z()])
            .collect();
        let tol = T::default_tol();
        let zero = (0..1usize << n)
            .find_map(|b| {
                let mut s = StateVector::basis(n, b);
                for g in &checks {
                    project(&mut s, g, T::one(), 0);
                }
                (s.normalize() > tol).then_some(s)
            })
            .expect("code space is nonempty");
        let mut one = zero.clone();
        one.apply_pauli(&code.logical_x());
        let r = T::lit(std::f64::consts::FRAC_1_SQRT_2);
        let mut bell = StateVector::basis(1, 0).tensor(&zero);
        bell.add_scaled(
            &StateVector::basis(1, 1).tensor(&one),
            Complex::new(T::one(), T::zero()),
        );
        bell.scale(Complex::new(r, T::zero()));
        Self {
            code,
            zero,
            one,
            bell,
        }
    }

    pub fn code(&self) -> &StabilizerCode {
        &self.code
    }

    pub fn logical_zero(&self) -> &StateVector<T> {
        &self.zero
    }

    pub fn logical_one(&self) -> &StateVector<T> {
        &self.one
    }

    /// `(|0⟩|0̄⟩ + |1⟩|1̄⟩)/√2` on the reference plus code qubits.
    pub fn encoded_bell_half(&self) -> &StateVector<T> {
        &self.bell
    }

    fn errored(&self, error: &PhysicalError<T>) -> Result<StateVector<T>, StabilizerError> {
        let mut s = self.bell.clone();
        error.apply(&mut s, self.code.num_qubits())?;
        Ok(s)
    }

    /// Unnormalised `T_s·Π_s·state` for the reference-plus-code register.
    fn project_and_correct_raw(&self, state: &StateVector<T>, syndrome: u64) -> StateVector<T> {
        let mut s = state.clone();
        for (i, g) in self.code.generators().iter().enumerate() {
            let sign = if syndrome >> i & 1 == 1 {
                -T::one()
            } else {
                T::one()
            };
            project(&mut s, g, sign, 1);
        }
        s.apply_pauli_on(1, &self.code.pure_error(syndrome));
        s
    }

    /// Applies `error`, projects onto syndrome `s` and applies `T_s`. Returns
    /// the renormalised state and the outcome probability.
    pub fn project_and_correct(
        &self,
        state: &StateVector<T>,
        error: &PhysicalError<T>,
        syndrome: u64,
    ) -> Result<(StateVector<T>, T), StabilizerError> {
        if syndrome as usize >= self.code.num_syndromes() {
            return Err(StabilizerError::BadSyndrome(syndrome));
        }
        if state.num_qubits() != self.code.num_qubits() + 1 {
            return Err(StabilizerError::DimensionMismatch(
                state.num_qubits(),
                self.code.num_qubits() + 1,
            ));
        }
        let mut s = state.clone();
        error.apply(&mut s, self.code.num_qubits())?;
        let mut out = self.project_and_correct_raw(&s, syndrome);
        let prob = out.normalize();
        if prob <= zero_threshold::<T>() {
            return Err(StabilizerError::ZeroProbability(syndrome));
        }
        Ok((out, prob))
    }

    /// Outcome probability of every syndrome for the encoded Bell input.
    pub fn syndrome_distribution(
        &self,
        error: &PhysicalError<T>,
    ) -> Result<Vec<T>, StabilizerError> {
        let s = self.errored(error)?;
        Ok((0..self.code.num_syndromes() as u64)
            .map(|k| self.project_and_correct_raw(&s, k).norm_sqr())
            .collect())
    }

    /// Two-qubit decoded state, logical qubit first.
    fn decode(&self, phi: &StateVector<T>) -> Result<[Complex<T>; 4], StabilizerError> {
        let half = phi.amplitudes().len() / 2;
        let mut out = [Complex::new(T::zero(), T::zero()); 4];
        for a in 0..2 {
            let slice =
                StateVector::from_amplitudes(phi.amplitudes()[a * half..(a + 1) * half].to_vec())?;
            out[a] = self.zero.inner(&slice);
            out[2 + a] = self.one.inner(&slice);
        }
        let norm = out.iter().fold(T::zero(), |acc, v| acc + v.norm_sqr());
        // After correction the state must lie in the code space, where the
        // decoded norm equals the full norm.
        let leak = (phi.norm_sqr() - norm).abs();
        if leak > T::default_tol().sqrt() * phi.norm_sqr() {
            return Err(StabilizerError::Leakage(leak.to_f64().unwrap_or(f64::NAN)));
        }
        Ok(out)
    }

    /// `Λ⁽¹⁾` for syndrome `s`.
    pub fn effective_process_matrix(
        &self,
        error: &PhysicalError<T>,
        syndrome: u64,
    ) -> Result<ProcessMatrix<T>, StabilizerError> {
        let (phi, _) = self.project_and_correct(&self.bell, error, syndrome)?;
        Ok(choi_to_process(&self.decode(&phi)?))
    }
}

fn zero_threshold<T: Scalar>() -> T {
    T::default_tol() * T::default_tol()
}

/// `Λ_ij = Tr[J·(P_j ⊗ P_iᵀ)]` for `J = |ψ⟩⟨ψ|`, normalised so `Λ_00 = 1`.
pub fn choi_to_process<T: Scalar>(psi: &[Complex<T>; 4]) -> ProcessMatrix<T> {
    let ps = [gates::i::<T>(), gates::x(), gates::y(), gates::z()];
    let mut entries = [[T::zero(); 4]; 4];
    for (i, pi) in ps.iter().enumerate() {
        let pit = pi.transpose();
        for (j, pj) in ps.iter().enumerate() {
            // Tr[|ψ⟩⟨ψ|·M] = ⟨ψ|M|ψ⟩
            let m = pj.kron(&pit);
            let mpsi = m.apply(psi);
            let v = psi
                .iter()
                .zip(&mpsi)
                .fold(Complex::new(T::zero(), T::zero()), |acc, (a, b)| {
                    acc + a.conj() * b
                });
            entries[i][j] = v.re;
        }
    }
    let norm = entries[0][0];
    for row in &mut entries {
        for v in row.iter_mut() {
            *v = *v / norm;
        }
    }
    ProcessMatrix { entries }
}

/// Free-function form of [`CodeChannel::encoded_bell_half`].
pub fn encoded_bell_half<T: Scalar>(code: &StabilizerCode) -> StateVector<T> {
    CodeChannel::<T>::new(code.clone())
        .encoded_bell_half()
        .clone()
}

/// Free-function form of [`CodeChannel::project_and_correct`].
pub fn project_and_correct<T: Scalar>(
    state: &StateVector<T>,
    code: &StabilizerCode,
    error: &PhysicalError<T>,
    syndrome: u64,
) -> Result<(StateVector<T>, T), StabilizerError> {
    CodeChannel::<T>::new(code.clone()).project_and_correct(state, error, syndrome)
}

/// Free-function form of [`CodeChannel::effective_process_matrix`].
pub fn effective_process_matrix<T: Scalar>(
    code: &StabilizerCode,
    error: &PhysicalError<T>,
    syndrome: u64,
) -> Result<ProcessMatrix<T>, StabilizerError> {
    CodeChannel::<T>::new(code.clone()).effective_process_matrix(error, syndrome)
}

/// Which random physical errors a verification run draws.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ErrorClass {
    /// Independent uniform single-qubit Cliffords on every code qubit.
    Transversal,
    /// Random Clifford circuits of `gates` gates from `{H, S, X, Z, CNOT}`.
    Entangling { gates: usize },
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SyndromeOutcome {
    pub syndrome: String,
    pub probability: f64,
    /// Row-major `{0, ±1}` pattern, when the matrix is a signed permutation.
    pub pattern: Option<Vec<i8>>,
    pub logical_clifford: Option<usize>,
    pub logical_word: Option<String>,
    pub max_deviation: f64,
    pub pass: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ErrorReport {
    pub index: u64,
    pub error: String,
    pub syndrome_probabilities: Vec<f64>,
    pub probability_sum: f64,
    pub outcomes: Vec<SyndromeOutcome>,
    pub pass: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerificationReport {
    pub logical_x: String,
    pub logical_z: String,
    pub error_class: ErrorClass,
    pub tolerance: f64,
    pub probability_tolerance: f64,
    pub errors: Vec<ErrorReport>,
    pub nonzero_syndromes: usize,
    pub all_pass: bool,
}

/// Tolerance on `Σ_s p(s) = 1`.
pub const PROBABILITY_SUM_TOL: f64 = 1e-10;

impl CodeChannel<f64> {
    pub fn random_error<R: Rng + ?Sized>(
        &self,
        class: ErrorClass,
        rng: &mut R,
    ) -> PhysicalError<f64> {
        let n = self.code.num_qubits();
        match class {
            ErrorClass::Transversal => PhysicalError::Transversal(
                (0..n)
                    .map(|_| CliffordGroup::get().element(rng.random_range(0..GROUP_ORDER)))
                    .collect(),
            ),
            ErrorClass::Entangling { gates } => {
                PhysicalError::Circuit(LogicalCircuit::random(rng, n, gates, 0.0, 0.3))
            }
        }
    }

    /// Checks every nonzero-probability syndrome of one error.
    pub fn verify_error(
        &self,
        index: u64,
        error: &PhysicalError<f64>,
        tol: f64,
    ) -> Result<ErrorReport, StabilizerError> {
        let probs = self.syndrome_distribution(error)?;
        let sum: f64 = probs.iter().sum();
        let mut outcomes = Vec::new();
        for (s, &p) in probs.iter().enumerate() {
            if p <= zero_threshold::<f64>() {
                continue;
            }
            let m = self.effective_process_matrix(error, s as u64)?;
            let verdict = m.is_signed_permutation(tol);
            let clifford = verdict.clifford();
            let max_deviation = match clifford {
                Some(c) => m.max_abs_diff(&ProcessMatrix::from_clifford(&c)),
                None => f64::NAN,
            };
            outcomes.push(SyndromeOutcome {
                syndrome: self.code.syndrome_label(s as u64),
                probability: p,
                pattern: m.pattern(tol).map(|p| p.to_vec()),
                logical_clifford: clifford.map(|c| c.index()),
                logical_word: clifford.map(|c| c.word().to_string()),
                max_deviation,
                pass: matches!(verdict, PermutationVerdict::Clifford(_)),
            });
        }
        let pass = (sum - 1.0).abs() <= PROBABILITY_SUM_TOL && outcomes.iter().all(|o| o.pass);
        Ok(ErrorReport {
            index,
            error: error.describe(),
            syndrome_probabilities: probs,
            probability_sum: sum,
            outcomes,
            pass,
        })
    }

    /// Draws `errors` random errors (error `i` from its own seeded stream) and
    /// verifies them in parallel; the report is in index order.
    pub fn verify_random_errors(
        &self,
        class: ErrorClass,
        errors: u64,
        seed: u64,
        tol: f64,
        executor: &Executor,
    ) -> Result<VerificationReport, StabilizerError> {
        let results = executor.map(errors, |i| {
            let mut rng = trial_rng(seed, 0, i);
            let e = self.random_error(class, &mut rng);
            self.verify_error(i, &e, tol)
        });
        let errors = results.into_iter().collect::<Result<Vec<_>, _>>()?;
        Ok(VerificationReport {
            logical_x: self.code.logical_x().to_string(),
            logical_z: self.code.logical_z().to_string(),
            error_class: class,
            tolerance: tol,
            probability_tolerance: PROBABILITY_SUM_TOL,
            nonzero_syndromes: errors.iter().map(|e| e.outcomes.len()).sum(),
            all_pass: errors.iter().all(|e| e.pass),
            errors,
        })
    }
}
