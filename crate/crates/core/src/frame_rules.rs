// Copyright 2026 The framekit Authors
// SPDX-License-Identifier: Apache-2.0

//! Propagation rules for Clifford frames through CNOT and T gates.
//!
//! A single-qubit Clifford frame pair `(C1, C2)` sitting in front of a CNOT is
//! *good* when `CNOT·(C1⊗C2)·CNOT†` is again a product of single-qubit
//! Cliffords, so it can be pushed through without two-qubit corrections. A
//! single-qubit frame `C` in front of a `T` gate is in `C−` when `T·C·T†` is
//! still Clifford, and in `C+` otherwise.

use std::sync::OnceLock;

use num_complex::Complex;
use serde::Serialize;
use thiserror::Error;

use crate::clifford::{tensor, CliffordGate1, CliffordGroup, CliffordTableau2, GROUP_ORDER};
use crate::dense::{controlled_u_matrix, gates, DenseMatrix};
use crate::pauli::{PauliKind, PauliOperator};
use crate::scalar::Scalar;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FrameError {
    #[error("{0} is in C+: T·C·T† is not a Clifford")]
    NotCMinus(CliffordGate1),
    #[error("expected a single-qubit Pauli, got {0}")]
    NotSingleQubitPauli(PauliOperator),
}

/// Outcome of pushing a Clifford pair through a CNOT.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CnotClass {
    /// `CNOT·(c1⊗c2)·CNOT† = out1⊗out2`.
    Good {
        out1: CliffordGate1,
        out2: CliffordGate1,
    },
    Bad,
}

impl CnotClass {
    pub fn is_good(&self) -> bool {
        matches!(self, CnotClass::Good { .. })
    }
}

/// Classifies `(c1, c2)` (control first) by tableau conjugation.
pub fn classify_cnot_pair(c1: &CliffordGate1, c2: &CliffordGate1) -> CnotClass {
    let cnot = CliffordTableau2::cnot();
    let conjugated = cnot.compose(&tensor(c1, c2)).compose(&cnot);
    match conjugated.factor_tensor() {
        Some((out1, out2)) => CnotClass::Good { out1, out2 },
        None => CnotClass::Bad,
    }
}

/// Precomputed CNOT classification over canonical Clifford indices.
pub struct CnotTable {
    entries: [[Option<(u8, u8)>; GROUP_ORDER]; GROUP_ORDER],
}

static CNOT_TABLE: OnceLock<CnotTable> = OnceLock::new();

impl CnotTable {
    pub fn get() -> &'static CnotTable {
        CNOT_TABLE.get_or_init(|| {
            let group = CliffordGroup::get();
            let mut entries = [[None; GROUP_ORDER]; GROUP_ORDER];
            for (a, ca) in group.elements().iter().enumerate() {
                for (b, cb) in group.elements().iter().enumerate() {
                    if let CnotClass::Good { out1, out2 } = classify_cnot_pair(ca, cb) {
                        entries[a][b] = Some((out1.index() as u8, out2.index() as u8));
                    }
                }
            }
            CnotTable { entries }
        })
    }

    pub fn is_good(&self, a: usize, b: usize) -> bool {
        self.entries[a][b].is_some()
    }

    /// Output indices for a good pair.
    pub fn output(&self, a: usize, b: usize) -> Option<(usize, usize)> {
        self.entries[a][b].map(|(x, y)| (x as usize, y as usize))
    }
}

/// All good `(control, target)` index pairs in canonical order.
pub fn good_pairs() -> Vec<(usize, usize)> {
    let table = CnotTable::get();
    (0..GROUP_ORDER)
        .flat_map(|a| (0..GROUP_ORDER).map(move |b| (a, b)))
        .filter(|&(a, b)| table.is_good(a, b))
        .collect()
}

/// Number of good pairs among all `24²` ordered inputs, classified afresh.
pub fn count_good_pairs() -> usize {
    let group = CliffordGroup::get();
    let mut good = 0;
    for a in group.elements() {
        for b in group.elements() {
            if classify_cnot_pair(a, b).is_good() {
                good += 1;
            }
        }
    }
    good
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum TClass {
    CMinus,
    CPlus,
}

struct TTable {
    class: [TClass; GROUP_ORDER],
    conjugated: [Option<u8>; GROUP_ORDER],
}

static T_TABLE: OnceLock<TTable> = OnceLock::new();

fn t_table() -> &'static TTable {
    T_TABLE.get_or_init(|| {
        let group = CliffordGroup::get();
        // Closure of {S, X} by repeated left multiplication.
        let mut member = [false; GROUP_ORDER];
        member[0] = true;
        let gens = [CliffordGate1::s().index(), CliffordGate1::x().index()];
        let mut stack = vec![0usize];
        while let Some(a) = stack.pop() {
            for &g in &gens {
                let b = group.product_index(g, a);
                if !member[b] {
                    member[b] = true;
                    stack.push(b);
                }
            }
        }
        let class = member.map(|m| if m { TClass::CMinus } else { TClass::CPlus });
        let mut conjugated = [None; GROUP_ORDER];
        for (i, slot) in conjugated.iter_mut().enumerate() {
            if member[i] {
                let c = t_conjugate_dense::<f64>(&group.element(i), 1e-10)
                    .expect("C− stays Clifford under T");
                *slot = Some(c.index() as u8);
            }
        }
        TTable { class, conjugated }
    })
}

fn t_conjugate_dense<T: Scalar>(c: &CliffordGate1, tol: T) -> Option<CliffordGate1> {
    let t = gates::t::<T>();
    CliffordGate1::from_unitary(&t.matmul(&c.to_dense()).matmul(&t.adjoint()), tol)
}

/// Membership test against the group `⟨S, X⟩` (table lookup).
pub fn classify_t_input(c: &CliffordGate1) -> TClass {
    t_table().class[c.index()]
}

/// Same classification from the dense Clifford test on `T·c·T†`.
pub fn classify_t_input_dense<T: Scalar>(c: &CliffordGate1) -> TClass {
    let t = gates::t::<T>();
    let m = t.matmul(&c.to_dense()).matmul(&t.adjoint());
    if m.is_clifford(T::default_tol()).expect("2×2 unitary") {
        TClass::CMinus
    } else {
        TClass::CPlus
    }
}

/// `T·c·T†` for `c ∈ C−`.
pub fn conjugate_by_t(c: &CliffordGate1) -> Result<CliffordGate1, FrameError> {
    t_table().conjugated[c.index()]
        .map(|i| CliffordGroup::get().element(i as usize))
        .ok_or(FrameError::NotCMinus(*c))
}

/// Which diagonal non-Clifford gate a Pauli frame is pushed through.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Rotation {
    T,
    Tdg,
}

impl Rotation {
    pub fn matrix<T: Scalar>(self) -> DenseMatrix<T> {
        match self {
            Rotation::T => gates::t(),
            Rotation::Tdg => gates::tdg(),
        }
    }
}

fn pauli_through_dense(rotation: Rotation, kind: PauliKind) -> (CliffordGate1, PauliOperator) {
    // R·P = (R·P·R†·P†)·P·R, and R·P·R†·P† is a Clifford for every Pauli P.
    let r = rotation.matrix::<f64>();
    let p = PauliOperator::from_kinds(&[kind]).to_dense::<f64>();
    let c = r.matmul(&p).matmul(&r.adjoint()).matmul(&p.adjoint());
    let c = CliffordGate1::from_unitary(&c, 1e-10).expect("R·P·R†·P† is Clifford");
    (c, PauliOperator::from_kinds(&[kind]))
}

static THROUGH: OnceLock<[[(CliffordGate1, PauliOperator); 4]; 2]> = OnceLock::new();

/// Pushes a Pauli frame through `rotation`: returns `(C, P₂)` with
/// `R·P ∝ C·P₂·R`. `C` is `S` (or `S†`) when `P` has an `X` component.
pub fn pauli_through_rotation(
    rotation: Rotation,
    p: &PauliOperator,
) -> Result<(CliffordGate1, PauliOperator), FrameError> {
    if p.num_qubits() != 1 {
        return Err(FrameError::NotSingleQubitPauli(*p));
    }
    let table = THROUGH.get_or_init(|| {
        [Rotation::T, Rotation::Tdg].map(|r| PauliKind::ALL.map(|k| pauli_through_dense(r, k)))
    });
    let (c, p2) = table[rotation as usize][p.kind_at(0).basis_index()];
    // Keep the caller's sign/phase on the Pauli part.
    let p2 = p2.times_phase((4 + p.phase() - p2.phase()) & 3);
    Ok((c, p2))
}

pub fn pauli_through_t_then_ec(
    p: &PauliOperator,
) -> Result<(CliffordGate1, PauliOperator), FrameError> {
    pauli_through_rotation(Rotation::T, p)
}

/// One checked identity between two-qubit unitaries.
#[derive(Debug, Clone, Serialize)]
pub struct RelationCheck {
    pub name: &'static str,
    pub statement: &'static str,
    pub holds: bool,
    /// Max-entry deviation after removing the best global phase.
    pub deviation: f64,
}

#[derive(Debug, Clone, Serialize)]
pub struct RelationReport {
    pub tolerance: f64,
    pub checks: Vec<RelationCheck>,
}

impl RelationReport {
    pub fn all_hold(&self) -> bool {
        self.checks.iter().all(|c| c.holds)
    }
}

fn phase_deviation<T: Scalar>(a: &DenseMatrix<T>, b: &DenseMatrix<T>) -> T {
    let (k, _) = b
        .entries()
        .iter()
        .enumerate()
        .fold((0, T::zero()), |(bk, bv), (i, v)| {
            if v.norm() > bv {
                (i, v.norm())
            } else {
                (bk, bv)
            }
        });
    let ratio = a.entries()[k] / b.entries()[k];
    let phase = if ratio.norm() > T::zero() {
        ratio / ratio.norm()
    } else {
        Complex::new(T::one(), T::zero())
    };
    a.sub(&b.scale(phase)).max_abs()
}

/// Verifies the CNOT propagation relations by dense matrix products.
pub fn verify_relations_with<T: Scalar>(tol: T) -> RelationReport {
    let half = Complex::new(T::lit(0.5), T::zero());
    let i2 = gates::i::<T>();
    let (x, y, z, h, s) = (
        gates::x::<T>(),
        gates::y::<T>(),
        gates::z::<T>(),
        gates::h::<T>(),
        gates::s::<T>(),
    );
    let cu = |u: &DenseMatrix<T>| controlled_u_matrix(u).expect("unitary");
    let (cx, cy, cz) = (cu(&x), cu(&y), cu(&z));
    let iy = y.scale(Complex::new(T::zero(), T::one()));
    let ux = i2
        .add(&x)
        .scale(half)
        .kron(&i2)
        .add(&i2.sub(&x).scale(half).kron(&x));
    let uf = i2
        .add(&iy)
        .scale(half)
        .kron(&i2)
        .add(&i2.sub(&iy).scale(half).kron(&x));
    let si = s.kron(&i2);
    let is = i2.kron(&s);
    let ih = i2.kron(&h);
    let hi = h.kron(&i2);

    let cases: Vec<(&'static str, &'static str, DenseMatrix<T>, DenseMatrix<T>)> = vec![
        (
            "phase-control",
            "(S⊗I)·CX = CX·(S⊗I)",
            si.matmul(&cx),
            cx.matmul(&si),
        ),
        (
            "phase-target",
            "(I⊗S)·CX = CY·(I⊗S)",
            is.matmul(&cx),
            cy.matmul(&is),
        ),
        (
            "hadamard-target",
            "(I⊗H)·CX = CZ·(I⊗H)",
            ih.matmul(&cx),
            cz.matmul(&ih),
        ),
        (
            "hadamard-control",
            "(H⊗I)·CX = U_X·(H⊗I)",
            hi.matmul(&cx),
            ux.matmul(&hi),
        ),
        (
            "hadamard-control-propagation",
            "CX·(H⊗I)·CX = U_f·(H⊗I)",
            cx.matmul(&hi).matmul(&cx),
            uf.matmul(&hi),
        ),
        (
            "phase-target-sandwich",
            "CX·(I⊗S)·CX = (S⊗S)·CZ",
            cx.matmul(&is).matmul(&cx),
            s.kron(&s).matmul(&cz),
        ),
    ];
    let mut checks: Vec<RelationCheck> = cases
        .into_iter()
        .map(|(name, statement, lhs, rhs)| {
            let deviation = phase_deviation(&lhs, &rhs);
            RelationCheck {
                name,
                statement,
                holds: deviation <= tol,
                deviation: deviation.to_f64().unwrap_or(f64::NAN),
            }
        })
        .collect();
    for (name, statement, u) in [
        ("u_x-unitary", "U_X·U_X† = I", &ux),
        ("u_f-unitary", "U_f·U_f† = I", &uf),
    ] {
        let deviation = u.unitarity_defect();
        checks.push(RelationCheck {
            name,
            statement,
            holds: deviation <= tol,
            deviation: deviation.to_f64().unwrap_or(f64::NAN),
        });
    }
    RelationReport {
        tolerance: tol.to_f64().unwrap_or(f64::NAN),
        checks,
    }
}

pub fn verify_relations() -> RelationReport {
    verify_relations_with::<f64>(1e-10)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::clifford::enumerate_cliffords1;

    fn p(s: &str) -> PauliOperator {
        s.parse().unwrap()
    }

    #[test]
    fn cnot_examples() {
        let (i, s, x, z) = (
            CliffordGate1::identity(),
            CliffordGate1::s(),
            CliffordGate1::x(),
            CliffordGate1::z(),
        );
        assert_eq!(
            classify_cnot_pair(&s, &i),
            CnotClass::Good { out1: s, out2: i }
        );
        assert_eq!(classify_cnot_pair(&i, &s), CnotClass::Bad);
        assert!(classify_cnot_pair(&x, &z).is_good());
        assert_eq!(count_good_pairs(), 64);
        assert_eq!(good_pairs().len(), 64);
    }

    #[test]
    fn t_classes() {
        let all = enumerate_cliffords1();
        let minus = all
            .iter()
            .filter(|c| classify_t_input(c) == TClass::CMinus)
            .count();
        assert_eq!(minus, 8);
        for c in &all {
            assert_eq!(
                classify_t_input(c),
                classify_t_input_dense::<f64>(c),
                "{c:?}"
            );
        }
        assert_eq!(classify_t_input(&CliffordGate1::h()), TClass::CPlus);
        assert_eq!(classify_t_input(&CliffordGate1::z()), TClass::CMinus);
    }

    #[test]
    fn t_conjugation() {
        let (s, x, z) = (CliffordGate1::s(), CliffordGate1::x(), CliffordGate1::z());
        assert_eq!(conjugate_by_t(&s).unwrap(), s);
        assert_eq!(conjugate_by_t(&z).unwrap(), z);
        assert_eq!(conjugate_by_t(&x).unwrap(), s.compose(&x));
        assert!(conjugate_by_t(&CliffordGate1::h()).is_err());
    }

    #[test]
    fn pauli_through_t() {
        let (s, i) = (CliffordGate1::s(), CliffordGate1::identity());
        assert_eq!(pauli_through_t_then_ec(&p("I")).unwrap(), (i, p("I")));
        assert_eq!(pauli_through_t_then_ec(&p("Z")).unwrap(), (i, p("Z")));
        assert_eq!(pauli_through_t_then_ec(&p("X")).unwrap(), (s, p("X")));
        assert_eq!(pauli_through_t_then_ec(&p("-Y")).unwrap(), (s, p("-Y")));
        let (c, _) = pauli_through_rotation(Rotation::Tdg, &p("X")).unwrap();
        assert_eq!(c, CliffordGate1::sdg());
        assert!(pauli_through_t_then_ec(&p("XX")).is_err());
    }

    #[test]
    fn relations_hold() {
        let report = verify_relations();
        for c in &report.checks {
            assert!(c.holds, "{} failed with deviation {}", c.name, c.deviation);
        }
    }

    #[test]
    fn wrong_relation_is_detected() {
        // Swapping U_X for CX in the hadamard-control relation must fail.
        let h = gates::h::<f64>().kron(&gates::i());
        let cx = gates::cnot::<f64>();
        assert!(phase_deviation(&h.matmul(&cx), &cx.matmul(&h)) > 0.1);
    }
}
