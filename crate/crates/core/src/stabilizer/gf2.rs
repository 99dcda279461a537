// Copyright 2026 The framekit Authors
// SPDX-License-Identifier: Apache-2.0

//! Linear algebra over GF(2) on `u128` bit vectors.

/// Finds `v` with `popcount(rows[i] & v) ≡ rhs[i] (mod 2)` for every `i`.
pub fn solve_linear(rows: &[u128], rhs: &[bool]) -> Option<u128> {
    assert_eq!(rows.len(), rhs.len());
    // Augmented rows: bit 127 of the pair holds the right-hand side.
    let mut sys: Vec<(u128, bool)> = rows.iter().copied().zip(rhs.iter().copied()).collect();
    let mut pivots: Vec<(usize, u32)> = Vec::new();
    let mut r = 0;
    for col in 0..128u32 {
        let bit = 1u128 << col;
        let Some(k) = (r..sys.len()).find(|&k| sys[k].0 & bit != 0) else {
            continue;
        };
        sys.swap(r, k);
        let (prow, prhs) = sys[r];
        for (i, row) in sys.iter_mut().enumerate() {
            if i != r && row.0 & bit != 0 {
                row.0 ^= prow;
                row.1 ^= prhs;
            }
        }
        pivots.push((r, col));
        r += 1;
        if r == sys.len() {
            break;
        }
    }
    if sys[r..].iter().any(|&(row, b)| row == 0 && b) {
        return None;
    }
    let mut v = 0u128;
    for &(row, col) in &pivots {
        if sys[row].1 {
            v |= 1 << col;
        }
    }
    Some(v)
}

/// Finds a subset of `vectors` (as a bit mask over their indices) whose XOR is `target`.
pub fn solve_combination(vectors: &[u128], target: u128) -> Option<u128> {
    assert!(vectors.len() <= 128);
    // Row c of the transposed system: bit j set iff vectors[j] has bit c.
    let rows: Vec<u128> = (0..128)
        .map(|c| {
            vectors.iter().enumerate().fold(
                0u128,
                |acc, (j, v)| if v >> c & 1 == 1 { acc | 1 << j } else { acc },
            )
        })
        .collect();
    let rhs: Vec<bool> = (0..128).map(|c| target >> c & 1 == 1).collect();
    solve_linear(&rows, &rhs)
}

/// Rank of a set of vectors.
pub fn rank(vectors: &[u128]) -> usize {
    let mut basis: Vec<u128> = Vec::new();
    for &v in vectors {
        let mut x = v;
        for &b in &basis {
            x = x.min(x ^ b);
        }
        if x != 0 {
            basis.push(x);
            basis.sort_unstable_by(|a, b| b.cmp(a));
        }
    }
    basis.len()
}
