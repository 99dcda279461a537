// Copyright 2026 The framekit Authors
// SPDX-License-Identifier: Apache-2.0

use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use rand::Rng;
use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::clifford::{CliffordGroup, GROUP_ORDER};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ModelError {
    #[error("bias {0} outside [0, 1]")]
    InvalidBias(f64),
    #[error("latency_rounds must be at least 1")]
    ZeroLatency,
    #[error("unknown buffer model {0:?} (expected uniform, biased:EPS or pauli:EPS)")]
    Parse(String),
}

/// Distribution of the net Clifford correction a buffer reveals.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum BufferDistribution {
    /// Uniform over the 24 single-qubit Cliffords.
    Uniform24,
    /// Identity with probability `1−ε`, otherwise uniform over non-identity elements.
    Biased { epsilon: f64 },
    /// Pauli with probability `1−ε`, otherwise uniform over non-Pauli elements.
    PauliBiased { epsilon: f64 },
}

/// Buffer statistics plus the number of EC rounds each buffer lasts.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BufferModel {
    pub distribution: BufferDistribution,
    pub latency_rounds: u32,
    /// Whether CNOT retries are compiled with the inverse of the known frame.
    /// `None` picks the per-distribution default (on only for `PauliBiased`).
    pub pre_correction: Option<bool>,
}

struct Split {
    paulis: Vec<usize>,
    others: Vec<usize>,
    /// Ordered pairs with at least one non-Pauli factor.
    mixed_pairs: Vec<(usize, usize)>,
}

static SPLIT: OnceLock<Split> = OnceLock::new();

/// Canonical indices of the four Paulis and of the other twenty Cliffords.
fn split() -> &'static Split {
    SPLIT.get_or_init(|| {
        let group = CliffordGroup::get();
        let (paulis, others): (Vec<usize>, Vec<usize>) =
            (0..GROUP_ORDER).partition(|&i| group.element(i).is_pauli());
        let mixed_pairs = (0..GROUP_ORDER)
            .flat_map(|a| (0..GROUP_ORDER).map(move |b| (a, b)))
            .filter(|&(a, b)| !(paulis.contains(&a) && paulis.contains(&b)))
            .collect();
        Split {
            paulis,
            others,
            mixed_pairs,
        }
    })
}

impl BufferModel {
    pub fn new(distribution: BufferDistribution, latency_rounds: u32) -> Result<Self, ModelError> {
        match distribution {
            BufferDistribution::Biased { epsilon }
            | BufferDistribution::PauliBiased { epsilon }
                if !(0.0..=1.0).contains(&epsilon) =>
            {
                return Err(ModelError::InvalidBias(epsilon));
            }
            _ => {}
        }
        if latency_rounds == 0 {
            return Err(ModelError::ZeroLatency);
        }
        Ok(Self {
            distribution,
            latency_rounds,
            pre_correction: None,
        })
    }

    pub fn uniform() -> Self {
        Self::new(BufferDistribution::Uniform24, 1).expect("valid")
    }

    pub fn with_pre_correction(mut self, on: bool) -> Self {
        self.pre_correction = Some(on);
        self
    }

    pub fn pre_correction(&self) -> bool {
        self.pre_correction.unwrap_or(matches!(
            self.distribution,
            BufferDistribution::PauliBiased { .. }
        ))
    }

    /// Canonical index of one buffer Clifford.
    pub fn sample_single<R: Rng + ?Sized>(&self, rng: &mut R) -> usize {
        match self.distribution {
            BufferDistribution::Uniform24 => rng.random_range(0..GROUP_ORDER),
            BufferDistribution::Biased { epsilon } => {
                if rng.random::<f64>() < epsilon {
                    rng.random_range(1..GROUP_ORDER)
                } else {
                    0
                }
            }
            BufferDistribution::PauliBiased { epsilon } => {
                let sp = split();
                if rng.random::<f64>() < epsilon {
                    sp.others[rng.random_range(0..sp.others.len())]
                } else {
                    sp.paulis[rng.random_range(0..sp.paulis.len())]
                }
            }
        }
    }

    /// Canonical indices of a buffer pair `(C3, C4)` for the two CNOT qubits.
    ///
    /// The bias applies to the pair as a whole: `Biased` yields `I⊗I` with
    /// probability `1−ε` and otherwise one of the 575 other pairs; `PauliBiased`
    /// yields a Pauli⊗Pauli pair with probability `1−ε` and otherwise one of the
    /// 560 pairs with a non-Pauli factor.
    pub fn sample_pair<R: Rng + ?Sized>(&self, rng: &mut R) -> (usize, usize) {
        let n = GROUP_ORDER;
        match self.distribution {
            BufferDistribution::Uniform24 => (rng.random_range(0..n), rng.random_range(0..n)),
            BufferDistribution::Biased { epsilon } => {
                if rng.random::<f64>() < epsilon {
                    let k = rng.random_range(1..n * n);
                    (k / n, k % n)
                } else {
                    (0, 0)
                }
            }
            BufferDistribution::PauliBiased { epsilon } => {
                let sp = split();
                if rng.random::<f64>() < epsilon {
                    sp.mixed_pairs[rng.random_range(0..sp.mixed_pairs.len())]
                } else {
                    (
                        sp.paulis[rng.random_range(0..4)],
                        sp.paulis[rng.random_range(0..4)],
                    )
                }
            }
        }
    }

    /// One buffer Pauli (as a Clifford index) for the Pauli-frame protocol,
    /// which only tracks Pauli corrections: `Uniform24` and `PauliBiased` draw a
    /// uniform Pauli, `Biased` draws the identity with probability `1−ε`.
    pub fn sample_pauli<R: Rng + ?Sized>(&self, rng: &mut R) -> usize {
        let paulis = &split().paulis;
        match self.distribution {
            BufferDistribution::Biased { epsilon } => {
                if rng.random::<f64>() < epsilon {
                    paulis[rng.random_range(1..4)]
                } else {
                    paulis[0]
                }
            }
            _ => paulis[rng.random_range(0..4)],
        }
    }
}

impl fmt::Display for BufferDistribution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BufferDistribution::Uniform24 => write!(f, "uniform"),
            BufferDistribution::Biased { epsilon } => write!(f, "biased:{epsilon}"),
            BufferDistribution::PauliBiased { epsilon } => write!(f, "pauli:{epsilon}"),
        }
    }
}

impl FromStr for BufferDistribution {
    type Err = ModelError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bias = |v: &str| -> Result<f64, ModelError> {
            let e: f64 = v.parse().map_err(|_| ModelError::Parse(s.to_string()))?;
            if (0.0..=1.0).contains(&e) {
                Ok(e)
            } else {
                Err(ModelError::InvalidBias(e))
            }
        };
        match s.split_once(':') {
            None if s == "uniform" => Ok(BufferDistribution::Uniform24),
            Some(("biased", v)) => Ok(BufferDistribution::Biased { epsilon: bias(v)? }),
            Some(("pauli", v)) => Ok(BufferDistribution::PauliBiased { epsilon: bias(v)? }),
            _ => Err(ModelError::Parse(s.to_string())),
        }
    }
}

impl Serialize for BufferDistribution {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl Serialize for BufferModel {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = serializer.serialize_struct("BufferModel", 3)?;
        st.serialize_field("distribution", &self.distribution)?;
        st.serialize_field("latency_rounds", &self.latency_rounds)?;
        st.serialize_field("pre_correction", &self.pre_correction())?;
        st.end()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::protocol::rng::trial_rng;

    #[test]
    fn parse_round_trip() {
        for s in ["uniform", "biased:0.1", "pauli:0.25"] {
            let d: BufferDistribution = s.parse().unwrap();
            assert_eq!(d.to_string(), s);
        }
        assert!("pauli:1.5".parse::<BufferDistribution>().is_err());
        assert!("gauss:0.1".parse::<BufferDistribution>().is_err());
        assert!(BufferModel::new(BufferDistribution::Uniform24, 0).is_err());
    }

    #[test]
    fn pauli_biased_pair_support() {
        let group = CliffordGroup::get();
        let model = BufferModel::new(BufferDistribution::PauliBiased { epsilon: 1.0 }, 1).unwrap();
        let mut rng = trial_rng(1, 0, 0);
        let mut seen = std::collections::HashSet::new();
        for _ in 0..50_000 {
            let (a, b) = model.sample_pair(&mut rng);
            assert!(!(group.element(a).is_pauli() && group.element(b).is_pauli()));
            seen.insert((a, b));
        }
        assert_eq!(seen.len(), 560);
    }

    #[test]
    fn defaults() {
        assert!(!BufferModel::uniform().pre_correction());
        let m = BufferModel::new(BufferDistribution::PauliBiased { epsilon: 0.1 }, 2).unwrap();
        assert!(m.pre_correction());
        assert!(!m.with_pre_correction(false).pre_correction());
    }
}
