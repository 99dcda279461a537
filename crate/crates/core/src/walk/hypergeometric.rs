// Copyright 2026 The framekit Authors
// SPDX-License-Identifier: Apache-2.0

//! `₂F₁(1, 3/2+n; 3+n; z)` on `0 ≤ z ≤ 1`.

use crate::scalar::Scalar;

/// Upper limit on series terms before the caller falls back to another route.
pub const MAX_SERIES_TERMS: usize = 1_000_000;

/// Sums the series by forward term recurrence.
///
/// Terms satisfy `t_{k+1} = t_k · (3/2+n+k)/(3+n+k) · z`, so every later ratio
/// is below `z` and the remaining tail is at most `t_k·z/(1−z)`. Summation stops
/// once that bound drops below machine epsilon times the partial sum. Returns
/// `None` if the bound is not met within [`MAX_SERIES_TERMS`].
///
/// At `z = 1` the series converges too slowly to sum; Gauss's theorem gives
/// `Γ(3+n)Γ(1/2)/(Γ(2+n)Γ(3/2)) = 2(n+2)` instead.
pub fn hyp2f1_series<T: Scalar>(n: u64, z: T) -> Option<T> {
    if z == T::one() {
        return Some(T::lit(2.0) * (T::from_u64(n)? + T::lit(2.0)));
    }
    let b = T::lit(1.5) + T::from_u64(n)?;
    let c = T::lit(3.0) + T::from_u64(n)?;
    let eps = T::epsilon();
    let mut term = T::one();
    let mut sum = T::one();
    for k in 0..MAX_SERIES_TERMS {
        let kf = T::from_usize(k)?;
        term = term * (b + kf) / (c + kf) * z;
        sum = sum + term;
        if term * z / (T::one() - z) < eps * sum {
            return Some(sum);
        }
    }
    None
}
