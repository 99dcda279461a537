// Copyright 2026 The framekit Authors
// SPDX-License-Identifier: Apache-2.0

use serde::Serialize;

use super::gf2;
use super::StabilizerError;
use crate::pauli::PauliOperator;

/// `[[n, 1]]` stabilizer code with logical operators and a pure-error table.
///
/// Syndrome bit `i` is set when a Pauli anticommutes with generator `i`; the
/// table is indexed by the syndrome read as an integer.
#[derive(Debug, Clone)]
pub struct StabilizerCode {
    n: usize,
    generators: Vec<PauliOperator>,
    logical_x: PauliOperator,
    logical_z: PauliOperator,
    pure_errors: Vec<PauliOperator>,
}

/// `r ∝ L·T·G` with `L` a logical Pauli, `T` a pure error and `G` a stabilizer.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RecoveryDecomposition {
    pub logical: PauliOperator,
    /// Whether `L` contains `X̄` and `Z̄` respectively.
    pub logical_bits: (bool, bool),
    pub pure_error: PauliOperator,
    pub stabilizer: PauliOperator,
    /// Generators multiplied into `G`, as a bit mask.
    pub generator_mask: u64,
}

/// Symplectic form as a dot product: `⟨a, v⟩ = popcount(swap(a) & v)`.
fn swapped(p: &PauliOperator) -> u128 {
    let n = p.num_qubits();
    (p.z_bits() as u128) | (p.x_bits() as u128) << n
}

impl StabilizerCode {
    /// Builds the code and solves for pure errors; fails if the inputs violate
    /// the stabilizer-code conditions.
    pub fn new(
        generators: Vec<PauliOperator>,
        logical_x: PauliOperator,
        logical_z: PauliOperator,
    ) -> Result<Self, StabilizerError> {
        let n = logical_x.num_qubits();
        if generators.len() + 1 != n
            || generators
                .iter()
                .chain([&logical_z])
                .any(|g| g.num_qubits() != n)
        {
            return Err(StabilizerError::InvalidCode(format!(
                "expected {} generators on {n} qubits for one logical qubit",
                n.saturating_sub(1)
            )));
        }
        if gf2::rank(
            &generators
                .iter()
                .map(|g| g.symplectic())
                .collect::<Vec<_>>(),
        ) != generators.len()
        {
            return Err(StabilizerError::InvalidCode(
                "generators are not independent".into(),
            ));
        }
        // Unit-syndrome pure errors; the rest follow by multiplication.
        let mut rows: Vec<u128> = generators.iter().map(swapped).collect();
        rows.push(swapped(&logical_x));
        rows.push(swapped(&logical_z));
        let mut units = Vec::with_capacity(generators.len());
        for i in 0..generators.len() {
            let rhs: Vec<bool> = (0..rows.len()).map(|k| k == i).collect();
            let v = gf2::solve_linear(&rows, &rhs).ok_or_else(|| {
                StabilizerError::InvalidCode(format!("no pure error for generator {i}"))
            })?;
            units.push(PauliOperator::from_symplectic(n, v));
        }
        let pure_errors = (0..1usize << generators.len())
            .map(|s| {
                units
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| s >> i & 1 == 1)
                    .fold(PauliOperator::identity(n), |acc, (_, u)| {
                        (acc * *u).unsigned()
                    })
            })
            .collect();
        let code = Self {
            n,
            generators,
            logical_x,
            logical_z,
            pure_errors,
        };
        code.validate()?;
        Ok(code)
    }

    /// Checks commutation of generators and logicals and the pure-error table.
    pub fn validate(&self) -> Result<(), StabilizerError> {
        let bad = |msg: String| Err(StabilizerError::InvalidCode(msg));
        for (i, a) in self.generators.iter().enumerate() {
            if a.sign() != Some(1) {
                return bad(format!("generator {a} is not a +1 Hermitian Pauli"));
            }
            for b in &self.generators[i + 1..] {
                if !a.commutes_with(b) {
                    return bad(format!("generators {a} and {b} anticommute"));
                }
            }
            for l in [&self.logical_x, &self.logical_z] {
                if !a.commutes_with(l) {
                    return bad(format!("logical {l} anticommutes with generator {a}"));
                }
            }
        }
        if self.logical_x.commutes_with(&self.logical_z) {
            return bad("logical X and Z commute".into());
        }
        for (s, t) in self.pure_errors.iter().enumerate() {
            if self.syndrome(t) != s as u64 {
                return bad(format!(
                    "pure error {t} has syndrome {} instead of {s}",
                    self.syndrome(t)
                ));
            }
            if !t.commutes_with(&self.logical_x) || !t.commutes_with(&self.logical_z) {
                return bad(format!("pure error {t} does not commute with the logicals"));
            }
        }
        Ok(())
    }

    pub fn num_qubits(&self) -> usize {
        self.n
    }

    pub fn generators(&self) -> &[PauliOperator] {
        &self.generators
    }

    pub fn logical_x(&self) -> PauliOperator {
        self.logical_x
    }

    pub fn logical_z(&self) -> PauliOperator {
        self.logical_z
    }

    pub fn num_syndromes(&self) -> usize {
        self.pure_errors.len()
    }

    pub fn pure_error(&self, syndrome: u64) -> PauliOperator {
        self.pure_errors[syndrome as usize]
    }

    pub fn syndrome(&self, p: &PauliOperator) -> u64 {
        self.generators
            .iter()
            .enumerate()
            .filter(|(_, g)| !g.commutes_with(p))
            .fold(0, |s, (i, _)| s | 1 << i)
    }

    /// Syndrome bits, generator 0 first.
    pub fn syndrome_label(&self, syndrome: u64) -> String {
        (0..self.generators.len())
            .map(|i| if syndrome >> i & 1 == 1 { '1' } else { '0' })
            .collect()
    }

    /// Writes a Pauli as logical × pure error × stabilizer.
    pub fn decompose_recovery(
        &self,
        r: &PauliOperator,
    ) -> Result<RecoveryDecomposition, StabilizerError> {
        if r.num_qubits() != self.n {
            return Err(StabilizerError::DimensionMismatch(r.num_qubits(), self.n));
        }
        let pure_error = self.pure_error(self.syndrome(r));
        let rest = *r * pure_error;
        let has_x = !rest.commutes_with(&self.logical_z);
        let has_z = !rest.commutes_with(&self.logical_x);
        let mut logical = PauliOperator::identity(self.n);
        if has_x {
            logical = logical * self.logical_x;
        }
        if has_z {
            logical = logical * self.logical_z;
        }
        let stab = rest * logical;
        let vectors: Vec<u128> = self.generators.iter().map(|g| g.symplectic()).collect();
        let mask = gf2::solve_combination(&vectors, stab.symplectic()).ok_or_else(|| {
            StabilizerError::InvalidCode(format!("{stab} is not in the stabilizer group"))
        })?;
        let stabilizer = self
            .generators
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .fold(PauliOperator::identity(self.n), |acc, (_, g)| acc * *g);
        Ok(RecoveryDecomposition {
            logical: logical.unsigned(),
            logical_bits: (has_x, has_z),
            pure_error,
            stabilizer,
            generator_mask: mask as u64,
        })
    }
}

/// The five-qubit code: generators `XZZXI` and its cyclic shifts, `X̄ = X⊗5`,
/// `Z̄ = Z⊗5`.
pub fn build_five_qubit_code() -> StabilizerCode {
    let p = |s: &str| s.parse::<PauliOperator>().expect("literal");
    StabilizerCode::new(
        vec![p("XZZXI"), p("IXZZX"), p("XIXZZ"), p("ZXIXZ")],
        p("XXXXX"),
        p("ZZZZZ"),
    )
    .expect("five-qubit code is valid")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> PauliOperator {
        s.parse().unwrap()
    }

    #[test]
    fn five_qubit_structure() {
        let code = build_five_qubit_code();
        assert_eq!(code.generators().len(), 4);
        assert_eq!(code.num_syndromes(), 16);
        assert!(code.pure_error(0).is_identity_up_to_phase());
        // X on qubit 0 anticommutes with the generators holding Z there.
        let e = p("XIIII");
        let expected = code
            .generators()
            .iter()
            .enumerate()
            .filter(|(_, g)| g.kind_at(0) == crate::pauli::PauliKind::Z)
            .fold(0, |s, (i, _)| s | 1 << i);
        assert_eq!(code.syndrome(&e), expected);
        assert_eq!(code.syndrome_label(0b0101), "1010");
    }

    #[test]
    fn rejects_invalid_codes() {
        let r = StabilizerCode::new(vec![p("XZ")], p("XX"), p("ZI"));
        assert!(r.is_err());
        let r = StabilizerCode::new(vec![p("ZZ")], p("XX"), p("XX"));
        assert!(r.is_err());
    }

    #[test]
    fn decomposition_examples() {
        let code = build_five_qubit_code();
        let d = code
            .decompose_recovery(&PauliOperator::identity(5))
            .unwrap();
        assert!(d.logical.is_identity_up_to_phase() && d.pure_error.is_identity_up_to_phase());
        assert!(d.stabilizer.is_identity_up_to_phase());
        let g = code.generators()[2];
        let d = code.decompose_recovery(&g).unwrap();
        assert_eq!(d.stabilizer, g);
        assert_eq!(d.generator_mask, 0b100);
        let d = code.decompose_recovery(&p("YYYYY")).unwrap();
        assert_eq!(d.logical_bits, (true, true));
    }
}
