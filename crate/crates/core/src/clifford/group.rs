// Copyright 2026 The framekit Authors
// SPDX-License-Identifier: Apache-2.0

use std::collections::HashSet;
use std::sync::OnceLock;

use super::single::CliffordGate1;

/// Order of the single-qubit Clifford group modulo global phase.
pub const GROUP_ORDER: usize = 24;

/// The 24 single-qubit Cliffords in canonical order, with precomputed
/// multiplication and inverse tables.
///
/// Canonical order: breadth-first closure from the identity under left
/// multiplication by `H` then `S`; each BFS layer is sorted by
/// [`CliffordGate1::encoding`].
pub struct CliffordGroup {
    elements: Vec<CliffordGate1>,
    words: Vec<String>,
    by_encoding: [u8; 64],
    product: [[u8; GROUP_ORDER]; GROUP_ORDER],
    inverse: [u8; GROUP_ORDER],
}

static GROUP: OnceLock<CliffordGroup> = OnceLock::new();

impl CliffordGroup {
    pub fn get() -> &'static CliffordGroup {
        GROUP.get_or_init(Self::build)
    }

    fn build() -> Self {
        let generators = [('H', CliffordGate1::h()), ('S', CliffordGate1::s())];
        let mut elements = vec![CliffordGate1::identity()];
        let mut words = vec![String::new()];
        let mut seen: HashSet<u8> = HashSet::from([CliffordGate1::identity().encoding()]);
        let mut frontier = vec![0usize];
        while !frontier.is_empty() {
            let mut layer: Vec<(CliffordGate1, String)> = Vec::new();
            for &idx in &frontier {
                for (letter, g) in &generators {
                    let next = g.compose(&elements[idx]);
                    if seen.insert(next.encoding()) {
                        layer.push((next, format!("{letter}{}", words[idx])));
                    }
                }
            }
            layer.sort_by_key(|(c, _)| c.encoding());
            frontier = (elements.len()..elements.len() + layer.len()).collect();
            for (c, w) in layer {
                elements.push(c);
                words.push(w);
            }
        }
        assert_eq!(
            elements.len(),
            GROUP_ORDER,
            "closure of {{H, S}} must have 24 elements"
        );
        words[0] = "I".to_string();

        let mut by_encoding = [u8::MAX; 64];
        for (i, c) in elements.iter().enumerate() {
            by_encoding[c.encoding() as usize] = i as u8;
        }
        let mut product = [[0u8; GROUP_ORDER]; GROUP_ORDER];
        let mut inverse = [0u8; GROUP_ORDER];
        for (a, ca) in elements.iter().enumerate() {
            for (b, cb) in elements.iter().enumerate() {
                let idx = by_encoding[ca.compose(cb).encoding() as usize];
                assert_ne!(idx, u8::MAX, "group not closed");
                product[a][b] = idx;
                if idx == 0 {
                    inverse[a] = b as u8;
                }
            }
        }
        Self {
            elements,
            words,
            by_encoding,
            product,
            inverse,
        }
    }

    pub fn elements(&self) -> &[CliffordGate1] {
        &self.elements
    }

    pub fn element(&self, index: usize) -> CliffordGate1 {
        self.elements[index]
    }

    pub fn index_of(&self, c: &CliffordGate1) -> usize {
        let idx = self.by_encoding[c.encoding() as usize];
        debug_assert_ne!(idx, u8::MAX);
        idx as usize
    }

    pub fn word(&self, index: usize) -> &str {
        &self.words[index]
    }

    /// Index of `elements[a] · elements[b]`.
    pub fn product_index(&self, a: usize, b: usize) -> usize {
        self.product[a][b] as usize
    }

    pub fn inverse_index(&self, a: usize) -> usize {
        self.inverse[a] as usize
    }

    pub fn inverse(&self, c: &CliffordGate1) -> CliffordGate1 {
        self.elements[self.inverse_index(self.index_of(c))]
    }
}

/// All 24 single-qubit Cliffords in canonical order.
pub fn enumerate_cliffords1() -> Vec<CliffordGate1> {
    CliffordGroup::get().elements().to_vec()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_order_is_stable() {
        let g = CliffordGroup::get();
        assert_eq!(g.element(0), CliffordGate1::identity());
        assert_eq!(g.word(0), "I");
        // First BFS layer: H and S, sorted by encoding (S maps X to Y, H maps X to Z).
        assert_eq!(g.element(1), CliffordGate1::s());
        assert_eq!(g.element(2), CliffordGate1::h());
        assert_eq!(g.word(1), "S");
        assert_eq!(g.word(2), "H");
    }

    #[test]
    fn contains_paulis_and_is_closed() {
        let g = CliffordGroup::get();
        let all = enumerate_cliffords1();
        assert_eq!(all.len(), GROUP_ORDER);
        for p in [
            CliffordGate1::identity(),
            CliffordGate1::x(),
            CliffordGate1::y(),
            CliffordGate1::z(),
        ] {
            assert!(all.contains(&p));
        }
        for a in 0..GROUP_ORDER {
            assert_eq!(g.product_index(a, g.inverse_index(a)), 0);
            assert_eq!(g.product_index(g.inverse_index(a), a), 0);
        }
    }
}
