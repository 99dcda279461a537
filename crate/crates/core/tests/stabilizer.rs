// Copyright 2026 The framekit Authors
// SPDX-License-Identifier: Apache-2.0

//! Syndrome projection and logical channels on the five-qubit code.

use framekit::clifford::{CliffordGroup, GROUP_ORDER};
use framekit::dense::{gates, DenseMatrix};
use framekit::protocol::rng::trial_rng;
use framekit::protocol::{Executor, Gate};
use framekit::stabilizer::{
    build_five_qubit_code, CodeChannel, ErrorClass, PhysicalError, ProcessMatrix, StabilizerCode,
    PROBABILITY_SUM_TOL,
};
use framekit::{CliffordGate1, PauliKind, PauliOperator, ProcessMatrix32};
use num_complex::Complex;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn random_pauli<R: Rng>(rng: &mut R, n: usize) -> PauliOperator {
    let kinds: Vec<PauliKind> = (0..n)
        .map(|_| PauliKind::ALL[rng.random_range(0..4)])
        .collect();
    PauliOperator::from_kinds(&kinds)
}

fn in_stabilizer_group(code: &StabilizerCode, g: &PauliOperator) -> bool {
    // Brute force over all 2^4 generator products.
    (0u32..1 << code.generators().len()).any(|mask| {
        let prod = code
            .generators()
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .fold(PauliOperator::identity(code.num_qubits()), |acc, (_, g)| {
                acc * *g
            });
        prod.unsigned() == g.unsigned()
    })
}

#[test]
fn random_recoveries_recompose() {
    let code = build_five_qubit_code();
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..1000 {
        let r = random_pauli(&mut rng, 5);
        let d = code.decompose_recovery(&r).unwrap();
        let recomposed = d.logical * d.pure_error * d.stabilizer;
        assert_eq!(recomposed.unsigned(), r.unsigned(), "{r}");
        assert!(in_stabilizer_group(&code, &d.stabilizer));
        assert!(
            d.pure_error.commutes_with(&code.logical_x())
                && d.pure_error.commutes_with(&code.logical_z())
        );
        let logicals = [
            PauliOperator::identity(5),
            code.logical_x(),
            code.logical_z(),
            (code.logical_x() * code.logical_z()).unsigned(),
        ];
        assert!(logicals
            .iter()
            .any(|l| l.unsigned() == d.logical.unsigned()));
    }
}

#[test]
fn pure_errors_satisfy_their_syndromes() {
    let code = build_five_qubit_code();
    for s in 0..code.num_syndromes() as u64 {
        let t = code.pure_error(s);
        for (i, g) in code.generators().iter().enumerate() {
            assert_eq!(!t.commutes_with(g), s >> i & 1 == 1);
        }
    }
    // Every weight-one Pauli has a distinct nonzero syndrome (distance 3).
    let mut seen = std::collections::HashSet::new();
    for q in 0..5 {
        for k in [PauliKind::X, PauliKind::Y, PauliKind::Z] {
            let s = code.syndrome(&PauliOperator::single(5, q, k).unwrap());
            assert!(s != 0 && seen.insert(s));
        }
    }
}

#[test]
fn rotation_error_splits_between_two_syndromes() {
    let ch = CodeChannel::<f64>::new(build_five_qubit_code());
    let x1 = PauliOperator::single(5, 1, PauliKind::X).unwrap();
    let flagged = ch.code().syndrome(&x1) as usize;
    for &theta in &[0.0, 0.3, 0.7, std::f64::consts::FRAC_PI_4, 1.2] {
        let mut us = vec![gates::i::<f64>(); 5];
        us[1] = gates::pauli_rotation(&gates::x(), theta);
        let probs = ch.syndrome_distribution(&PhysicalError::Local(us)).unwrap();
        for (s, &p) in probs.iter().enumerate() {
            let expected = match s {
                0 => theta.cos().powi(2),
                s if s == flagged => theta.sin().powi(2),
                _ => 0.0,
            };
            assert!(
                (p - expected).abs() < 1e-12,
                "θ={theta} s={s}: {p} vs {expected}"
            );
        }
    }
}

#[test]
fn transversal_logicals_match_their_process_matrices() {
    let ch = CodeChannel::<f64>::new(build_five_qubit_code());
    let x = ch
        .effective_process_matrix(&PhysicalError::Transversal(vec![CliffordGate1::x(); 5]), 0)
        .unwrap();
    let diag = [
        [1.0, 0.0, 0.0, 0.0],
        [0.0, 1.0, 0.0, 0.0],
        [0.0, 0.0, -1.0, 0.0],
        [0.0, 0.0, 0.0, -1.0],
    ];
    assert!(x.max_abs_diff(&ProcessMatrix { entries: diag }) < 1e-12);
    for (err, logical) in [
        (CliffordGate1::x(), CliffordGate1::x()),
        (CliffordGate1::z(), CliffordGate1::z()),
    ] {
        let m = ch
            .effective_process_matrix(&PhysicalError::Transversal(vec![err; 5]), 0)
            .unwrap();
        assert!(m.max_abs_diff(&ProcessMatrix::from_clifford(&logical)) < 1e-12);
    }
}

/// Logical action `A_{l,l'} = ⟨l̄|T_s Π_s E|l̄'⟩` built from explicit 32×32 matrices.
fn direct_process(
    ch: &CodeChannel<f64>,
    error: &[CliffordGate1],
    s: u64,
) -> Option<ProcessMatrix<f64>> {
    let code = ch.code();
    let mut e = DenseMatrix::<f64>::identity(1);
    for c in error {
        e = e.kron(&c.to_dense());
    }
    let mut op = e;
    for (i, g) in code.generators().iter().enumerate() {
        let sign = if s >> i & 1 == 1 { -1.0 } else { 1.0 };
        let proj = DenseMatrix::identity(32)
            .add(&g.to_dense::<f64>().scale(Complex::new(sign, 0.0)))
            .scale(Complex::new(0.5, 0.0));
        op = proj.matmul(&op);
    }
    op = code.pure_error(s).to_dense::<f64>().matmul(&op);
    let basis = [
        ch.logical_zero().amplitudes().to_vec(),
        ch.logical_one().amplitudes().to_vec(),
    ];
    let mut a = DenseMatrix::<f64>::zeros(2);
    for (l, bra) in basis.iter().enumerate() {
        for (lp, ket) in basis.iter().enumerate() {
            let v = op.apply(ket);
            a.set(l, lp, bra.iter().zip(&v).map(|(x, y)| x.conj() * y).sum());
        }
    }
    let ps = [gates::i::<f64>(), gates::x(), gates::y(), gates::z()];
    let norm = a.matmul(&a.adjoint()).trace().re;
    if norm < 1e-12 {
        return None;
    }
    let mut entries = [[0.0; 4]; 4];
    for i in 0..4 {
        for j in 0..4 {
            entries[i][j] = a
                .matmul(&ps[i])
                .matmul(&a.adjoint())
                .matmul(&ps[j])
                .trace()
                .re
                / norm;
        }
    }
    Some(ProcessMatrix { entries })
}

#[test]
fn choi_route_matches_direct_logical_action() {
    let ch = CodeChannel::<f64>::new(build_five_qubit_code());
    let group = CliffordGroup::get();
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for _ in 0..30 {
        let cs: Vec<CliffordGate1> = (0..5)
            .map(|_| group.element(rng.random_range(0..GROUP_ORDER)))
            .collect();
        let err = PhysicalError::Transversal(cs.clone());
        let probs = ch.syndrome_distribution(&err).unwrap();
        for (s, &p) in probs.iter().enumerate() {
            let direct = direct_process(&ch, &cs, s as u64);
            if p < 1e-12 {
                assert!(direct.is_none());
                continue;
            }
            let m = ch.effective_process_matrix(&err, s as u64).unwrap();
            assert!(m.max_abs_diff(&direct.unwrap()) < 1e-10);
        }
    }
}

#[test]
fn theorem_holds_for_random_transversal_errors() {
    let ch = CodeChannel::<f64>::new(build_five_qubit_code());
    let report = ch
        .verify_random_errors(
            ErrorClass::Transversal,
            100,
            3,
            1e-9,
            &Executor::with_threads(4),
        )
        .unwrap();
    assert!(report.all_pass);
    for e in &report.errors {
        assert!((e.probability_sum - 1.0).abs() <= PROBABILITY_SUM_TOL);
        assert!(e
            .outcomes
            .iter()
            .all(|o| o.logical_clifford.is_some_and(|c| c < GROUP_ORDER)));
    }
    let again = ch
        .verify_random_errors(
            ErrorClass::Transversal,
            100,
            3,
            1e-9,
            &Executor::with_threads(1),
        )
        .unwrap();
    assert_eq!(report, again);
}

/// Pulls an unsigned Pauli back through a Clifford circuit, `E†·P·E`, by the
/// bit rules of `H`, `S` and CNOT (signs dropped).
fn pull_back(p: &PauliOperator, gates: &[Gate]) -> PauliOperator {
    let (mut x, mut z) = (p.x_bits(), p.z_bits());
    for g in gates.iter().rev() {
        match *g {
            Gate::H(q) => {
                let (bx, bz) = (x >> q & 1, z >> q & 1);
                x = x & !(1 << q) | bz << q;
                z = z & !(1 << q) | bx << q;
            }
            Gate::S(q) | Gate::Sdg(q) => z ^= (x >> q & 1) << q,
            Gate::Cnot(c, t) => {
                x ^= (x >> c & 1) << t;
                z ^= (z >> t & 1) << c;
            }
            _ => {}
        }
    }
    PauliOperator::from_bits(p.num_qubits(), x, z, 0).unwrap()
}

/// Whether measuring the stabilizers after `E` measures a logical operator of
/// the input, i.e. some stabilizer product pulls back to a nontrivial logical.
fn measures_logical(code: &StabilizerCode, gates: &[Gate]) -> bool {
    (1u32..1 << code.generators().len()).any(|mask| {
        let g = code
            .generators()
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .fold(PauliOperator::identity(code.num_qubits()), |acc, (_, g)| {
                acc * *g
            });
        let back = pull_back(&g, gates);
        code.syndrome(&back) == 0
            && !(back.commutes_with(&code.logical_x()) && back.commutes_with(&code.logical_z()))
    })
}

#[test]
fn entangling_errors_fail_exactly_when_a_logical_is_measured() {
    // Entangling Cliffords can map a logical operator into the stabilizer
    // group; the syndrome measurement then collapses the logical qubit and the
    // channel is not unitary. Transversal errors never do this.
    let ch = CodeChannel::<f64>::new(build_five_qubit_code());
    let class = ErrorClass::Entangling { gates: 30 };
    let report = ch
        .verify_random_errors(class, 40, 9, 1e-9, &Executor::with_threads(4))
        .unwrap();
    let mut failures = 0;
    for e in &report.errors {
        assert!((e.probability_sum - 1.0).abs() <= PROBABILITY_SUM_TOL);
        let PhysicalError::Circuit(c) = ch.random_error(class, &mut trial_rng(9, 0, e.index))
        else {
            unreachable!()
        };
        assert_eq!(
            !e.pass,
            measures_logical(ch.code(), c.gates()),
            "error {}",
            e.index
        );
        failures += usize::from(!e.pass);
    }
    assert!(failures > 0 && failures < report.errors.len());
}

#[test]
fn single_precision_instantiation() {
    let ch = CodeChannel::<f32>::new(build_five_qubit_code());
    let m: ProcessMatrix32 = ch
        .effective_process_matrix(&PhysicalError::Transversal(vec![CliffordGate1::x(); 5]), 0)
        .unwrap();
    assert_eq!(
        m.is_signed_permutation(1e-4).clifford(),
        Some(CliffordGate1::x())
    );
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn pauli_errors_give_their_logical_part(kinds in proptest::collection::vec(0usize..4, 5)) {
        let ch = CodeChannel::<f64>::new(build_five_qubit_code());
        let e = PauliOperator::from_kinds(&kinds.iter().map(|&k| PauliKind::ALL[k]).collect::<Vec<_>>());
        let s = ch.code().syndrome(&e);
        let probs = ch.syndrome_distribution(&PhysicalError::Pauli(e)).unwrap();
        prop_assert!((probs[s as usize] - 1.0).abs() < 1e-12);
        let m = ch.effective_process_matrix(&PhysicalError::Pauli(e), s).unwrap();
        let c = m.is_signed_permutation(1e-9).clifford();
        prop_assert!(c.is_some_and(|c| c.is_pauli()));
        let d = ch.code().decompose_recovery(&(e * ch.code().pure_error(s))).unwrap();
        let expected = CliffordGate1::pauli(PauliKind::from_bits(d.logical_bits.0, d.logical_bits.1));
        prop_assert_eq!(c, Some(expected));
    }
}
