// Copyright 2026 The framekit Authors
// SPDX-License-Identifier: Apache-2.0

//! Logical circuits and their text format.
//!
//! One gate per line as `NAME q` or `CNOT control target`; `#` starts a
//! comment and blank lines are ignored. An optional `qubits N` line fixes the
//! register size, otherwise it is the largest index plus one.

use std::fmt;

use rand::Rng;
use thiserror::Error;

use crate::clifford::CliffordGate1;
use crate::frame_rules::Rotation;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Gate {
    I(usize),
    X(usize),
    Y(usize),
    Z(usize),
    H(usize),
    S(usize),
    Sdg(usize),
    T(usize),
    Tdg(usize),
    Cnot(usize, usize),
}

impl Gate {
    pub fn name(&self) -> &'static str {
        match self {
            Gate::I(_) => "I",
            Gate::X(_) => "X",
            Gate::Y(_) => "Y",
            Gate::Z(_) => "Z",
            Gate::H(_) => "H",
            Gate::S(_) => "S",
            Gate::Sdg(_) => "SDG",
            Gate::T(_) => "T",
            Gate::Tdg(_) => "TDG",
            Gate::Cnot(..) => "CNOT",
        }
    }

    pub fn qubits(&self) -> Vec<usize> {
        match *self {
            Gate::Cnot(c, t) => vec![c, t],
            Gate::I(q)
            | Gate::X(q)
            | Gate::Y(q)
            | Gate::Z(q)
            | Gate::H(q)
            | Gate::S(q)
            | Gate::Sdg(q)
            | Gate::T(q)
            | Gate::Tdg(q) => vec![q],
        }
    }

    /// The single-qubit Clifford this gate applies, if it is one.
    pub fn clifford(&self) -> Option<(usize, CliffordGate1)> {
        let c = match *self {
            Gate::I(q) => (q, CliffordGate1::identity()),
            Gate::X(q) => (q, CliffordGate1::x()),
            Gate::Y(q) => (q, CliffordGate1::y()),
            Gate::Z(q) => (q, CliffordGate1::z()),
            Gate::H(q) => (q, CliffordGate1::h()),
            Gate::S(q) => (q, CliffordGate1::s()),
            Gate::Sdg(q) => (q, CliffordGate1::sdg()),
            _ => return None,
        };
        Some(c)
    }

    pub fn rotation(&self) -> Option<(usize, Rotation)> {
        match *self {
            Gate::T(q) => Some((q, Rotation::T)),
            Gate::Tdg(q) => Some((q, Rotation::Tdg)),
            _ => None,
        }
    }
}

impl fmt::Display for Gate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Gate::Cnot(c, t) => write!(f, "CNOT {c} {t}"),
            g => write!(f, "{} {}", g.name(), g.qubits()[0]),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CircuitError {
    #[error("line {line}, column {column}: unknown gate {name:?}")]
    UnknownGate {
        line: usize,
        column: usize,
        name: String,
    },
    #[error("line {line}, column {column}: expected {expected} qubit index(es) for {name}")]
    Arity {
        line: usize,
        column: usize,
        name: String,
        expected: usize,
    },
    #[error("line {line}, column {column}: invalid qubit index {token:?}")]
    BadIndex {
        line: usize,
        column: usize,
        token: String,
    },
    #[error("line {line}, column {column}: qubit {index} out of range for {n} qubits")]
    OutOfRange {
        line: usize,
        column: usize,
        index: usize,
        n: usize,
    },
    #[error("line {line}, column {column}: CNOT control and target are both {index}")]
    SameQubit {
        line: usize,
        column: usize,
        index: usize,
    },
    #[error("line {line}: `qubits` header must come before any gate")]
    LateHeader { line: usize },
    #[error("gate {gate} touches qubit {index} outside a {n}-qubit register")]
    Invalid {
        gate: String,
        index: usize,
        n: usize,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LogicalCircuit {
    num_qubits: usize,
    gates: Vec<Gate>,
}

impl LogicalCircuit {
    pub fn new(num_qubits: usize, gates: Vec<Gate>) -> Result<Self, CircuitError> {
        for g in &gates {
            for &q in &g.qubits() {
                if q >= num_qubits {
                    return Err(CircuitError::Invalid {
                        gate: g.to_string(),
                        index: q,
                        n: num_qubits,
                    });
                }
            }
            if let Gate::Cnot(c, t) = *g {
                if c == t {
                    return Err(CircuitError::Invalid {
                        gate: g.to_string(),
                        index: c,
                        n: num_qubits,
                    });
                }
            }
        }
        Ok(Self { num_qubits, gates })
    }

    pub fn num_qubits(&self) -> usize {
        self.num_qubits
    }

    pub fn gates(&self) -> &[Gate] {
        &self.gates
    }

    pub fn t_count(&self) -> usize {
        self.gates.iter().filter(|g| g.rotation().is_some()).count()
    }

    /// Random circuit over `{H, S, X, Z, T, CNOT}`; each gate is a `T` with
    /// probability `t_fraction`, a CNOT with probability `cnot_fraction` (needs
    /// at least two qubits) and a uniformly chosen single-qubit Clifford otherwise.
    pub fn random<R: Rng + ?Sized>(
        rng: &mut R,
        num_qubits: usize,
        len: usize,
        t_fraction: f64,
        cnot_fraction: f64,
    ) -> Self {
        assert!(num_qubits > 0, "need at least one qubit");
        let mut gates = Vec::with_capacity(len);
        for _ in 0..len {
            let u: f64 = rng.random();
            let q = rng.random_range(0..num_qubits);
            let g = if u < t_fraction {
                Gate::T(q)
            } else if u < t_fraction + cnot_fraction && num_qubits > 1 {
                let mut t = rng.random_range(0..num_qubits - 1);
                if t >= q {
                    t += 1;
                }
                Gate::Cnot(q, t)
            } else {
                match rng.random_range(0..4) {
                    0 => Gate::H(q),
                    1 => Gate::S(q),
                    2 => Gate::X(q),
                    _ => Gate::Z(q),
                }
            };
            gates.push(g);
        }
        Self { num_qubits, gates }
    }
}

impl fmt::Display for LogicalCircuit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "qubits {}", self.num_qubits)?;
        for g in &self.gates {
            writeln!(f, "{g}")?;
        }
        Ok(())
    }
}

/// Parses the circuit text format.
pub fn parse_circuit(text: &str) -> Result<LogicalCircuit, CircuitError> {
    let mut declared: Option<usize> = None;
    let mut gates: Vec<(Gate, usize, Vec<usize>)> = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let content = raw.split('#').next().unwrap_or("");
        // (column, token) with 1-based columns.
        let mut tokens = Vec::new();
        let mut start = None;
        for (i, ch) in content
            .char_indices()
            .chain(std::iter::once((content.len(), ' ')))
        {
            match (ch.is_whitespace(), start) {
                (false, None) => start = Some(i),
                (true, Some(s)) => {
                    tokens.push((s + 1, &content[s..i]));
                    start = None;
                }
                _ => {}
            }
        }
        let Some(&(name_col, name)) = tokens.first() else {
            continue;
        };
        let upper = name.to_ascii_uppercase();
        let args = &tokens[1..];
        let parse_index = |(col, tok): (usize, &str)| {
            tok.parse::<usize>().map_err(|_| CircuitError::BadIndex {
                line,
                column: col,
                token: tok.to_string(),
            })
        };
        if upper == "QUBITS" {
            if !gates.is_empty() {
                return Err(CircuitError::LateHeader { line });
            }
            if args.len() != 1 {
                return Err(CircuitError::Arity {
                    line,
                    column: name_col,
                    name: name.to_string(),
                    expected: 1,
                });
            }
            declared = Some(parse_index(args[0])?);
            continue;
        }
        let arity = match upper.as_str() {
            "CNOT" | "CX" => 2,
            "I" | "X" | "Y" | "Z" | "H" | "S" | "SDG" | "T" | "TDG" => 1,
            _ => {
                return Err(CircuitError::UnknownGate {
                    line,
                    column: name_col,
                    name: name.to_string(),
                })
            }
        };
        if args.len() != arity {
            return Err(CircuitError::Arity {
                line,
                column: name_col,
                name: name.to_string(),
                expected: arity,
            });
        }
        let idx: Vec<usize> = args
            .iter()
            .map(|&a| parse_index(a))
            .collect::<Result<_, _>>()?;
        let cols: Vec<usize> = args.iter().map(|a| a.0).collect();
        let q = idx[0];
        let gate = match upper.as_str() {
            "CNOT" | "CX" => {
                if idx[0] == idx[1] {
                    return Err(CircuitError::SameQubit {
                        line,
                        column: cols[1],
                        index: idx[0],
                    });
                }
                Gate::Cnot(idx[0], idx[1])
            }
            "I" => Gate::I(q),
            "X" => Gate::X(q),
            "Y" => Gate::Y(q),
            "Z" => Gate::Z(q),
            "H" => Gate::H(q),
            "S" => Gate::S(q),
            "SDG" => Gate::Sdg(q),
            "T" => Gate::T(q),
            _ => Gate::Tdg(q),
        };
        if let Some(n) = declared {
            for (&i, &c) in idx.iter().zip(&cols) {
                if i >= n {
                    return Err(CircuitError::OutOfRange {
                        line,
                        column: c,
                        index: i,
                        n,
                    });
                }
            }
        }
        gates.push((gate, line, cols));
    }
    let n = declared.unwrap_or_else(|| {
        gates
            .iter()
            .flat_map(|(g, ..)| g.qubits())
            .max()
            .map_or(0, |m| m + 1)
    });
    LogicalCircuit::new(n, gates.into_iter().map(|(g, ..)| g).collect())
}
