// Copyright 2026 The framekit Authors
// SPDX-License-Identifier: Apache-2.0

//! Analytics for the T-gate correction random walk.
//!
//! After a logical `T`, each buffer Clifford lands in `C+` with probability `p`
//! (one level up) or in `C−` with probability `1−p` (one level down). The walk
//! succeeds when it steps below level 0, which takes an odd number `2j+1` of
//! steps and happens along `K_j` (Catalan) paths.

mod fig6;
mod hypergeometric;

use serde::Serialize;
use thiserror::Error;

use crate::scalar::Scalar;

pub use fig6::{default_fig6_grid, fig6_curve, Fig6Point, FIG6_TARGETS};
pub use hypergeometric::{hyp2f1_series, MAX_SERIES_TERMS};

/// Largest `j` for which [`return_probability`] uses the exact Catalan number.
pub const EXACT_CATALAN_LIMIT: u64 = 30;

/// Largest cutoff evaluated by direct products; beyond it products are taken in log space.
pub const DIRECT_PRODUCT_LIMIT: u64 = 100;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum WalkError {
    #[error("Catalan number K_{0} does not fit in 128 bits")]
    CatalanOverflow(u64),
    #[error("probability {0} outside [0, 1]")]
    InvalidProbability(f64),
    #[error("target probability {0} outside (0, 1)")]
    InvalidTarget(f64),
    #[error("hypergeometric argument {0} outside [0, 1]")]
    ArgumentOutOfRange(f64),
}

/// Walk parameters: up-step probability `p`, cutoff `n` and target `q = 1 − ε`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct WalkParameters {
    pub p: f64,
    pub n: u64,
    pub q: f64,
}

impl WalkParameters {
    pub fn new(p: f64, n: u64, q: f64) -> Result<Self, WalkError> {
        check_probability(p)?;
        if !(q > 0.0 && q < 1.0) {
            return Err(WalkError::InvalidTarget(q));
        }
        Ok(Self { p, n, q })
    }

    pub fn epsilon(&self) -> f64 {
        1.0 - self.q
    }
}

pub fn check_probability(p: f64) -> Result<(), WalkError> {
    if (0.0..=1.0).contains(&p) {
        Ok(())
    } else {
        Err(WalkError::InvalidProbability(p))
    }
}

/// Exact Catalan number `K_j = C(2j, j)/(j+1)`.
pub fn catalan(j: u64) -> Result<u128, WalkError> {
    let mut k: u128 = 1;
    for i in 0..j {
        // K_{i+1} = K_i · 2(2i+1)/(i+2), exact at every step.
        k = k
            .checked_mul(2 * (2 * i as u128 + 1))
            .map(|v| v / (i as u128 + 2))
            .ok_or(WalkError::CatalanOverflow(j))?;
    }
    Ok(k)
}

/// `ln C(2m, m)`: a log-sum for small `m`, a Stirling series above.
pub fn ln_central_binomial(m: u64) -> f64 {
    if m <= DIRECT_PRODUCT_LIMIT {
        (1..=m).map(|i| ((m + i) as f64 / i as f64).ln()).sum()
    } else {
        let x = m as f64;
        let x3 = x * x * x;
        2.0 * x * std::f64::consts::LN_2 - 0.5 * (std::f64::consts::PI * x).ln() - 1.0 / (8.0 * x)
            + 1.0 / (192.0 * x3)
            + 1.0 / (640.0 * x3 * x * x)
    }
}

/// First-return probability after `2j+1` steps: `K_j p^j (1−p)^{j+1}`.
pub fn return_probability<T: Scalar>(p: T, j: u64) -> T {
    let q = T::one() - p;
    if j <= EXACT_CATALAN_LIMIT {
        let k = T::from_u128(catalan(j).expect("K_30 fits in u128")).expect("finite");
        return k * p.powi(j as i32) * q.powi(j as i32 + 1);
    }
    if p <= T::zero() || q <= T::zero() {
        return T::zero();
    }
    let ln_k = ln_central_binomial(j) - ((j + 1) as f64).ln();
    let jt = T::from_u64(j).expect("finite");
    (T::lit(ln_k) + jt * p.ln() + (jt + T::one()) * q.ln()).exp()
}

/// First-return probabilities for `j = 0..=n`.
pub fn return_probabilities<T: Scalar>(p: T, n: u64) -> Vec<T> {
    (0..=n).map(|j| return_probability(p, j)).collect()
}

/// Probability that the walk ever terminates: `min{(1−p)/p, 1}`.
pub fn termination_probability<T: Scalar>(p: T) -> T {
    if p <= T::lit(0.5) {
        T::one()
    } else {
        (T::one() - p) / p
    }
}

/// `Σ_{k=0}^{n} P_{2k+1}`, by the ratio `P_{k+1}/P_k = 2(2k+1)/(k+2)·p(1−p)`.
pub fn partial_sum<T: Scalar>(p: T, n: u64) -> T {
    let x = p * (T::one() - p);
    let mut term = T::one() - p;
    let mut sum = term;
    for k in 0..n {
        let kt = T::from_u64(k).expect("finite");
        term = term * T::lit(2.0) * (T::lit(2.0) * kt + T::one()) / (kt + T::lit(2.0)) * x;
        if term == T::zero() {
            break;
        }
        sum = sum + term;
    }
    sum
}

/// `(1−p)/(n+2) · C(2(n+1), n+1) · [p(1−p)]^{n+1}`.
fn tail_prefactor<T: Scalar>(p: T, n: u64) -> T {
    let q = T::one() - p;
    let x = p * q;
    if x <= T::zero() {
        return T::zero();
    }
    let m = n + 1;
    let nt = T::from_u64(n).expect("finite");
    if n <= DIRECT_PRODUCT_LIMIT {
        // Interleave the binomial with powers of x so no factor overflows.
        let mut acc = q / (nt + T::lit(2.0));
        for i in 1..=m {
            let ratio = T::from_u64(m + i).expect("finite") / T::from_u64(i).expect("finite");
            acc = acc * ratio * x;
        }
        acc
    } else {
        let mt = T::from_u64(m).expect("finite");
        (q.ln() - (nt + T::lit(2.0)).ln() + T::lit(ln_central_binomial(m)) + mt * x.ln()).exp()
    }
}

/// `₂F₁(1, 3/2+n; 3+n; z)` for `0 ≤ z ≤ 1`.
///
/// Uses [`hyp2f1_series`]; when the series needs more than
/// [`MAX_SERIES_TERMS`] terms, recovers the value from the partial-sum identity
/// with `p = (1 − √(1−z))/2`.
pub fn hyp2f1_special<T: Scalar>(n: u64, z: T) -> Result<T, WalkError> {
    if !(z >= T::zero() && z <= T::one()) {
        return Err(WalkError::ArgumentOutOfRange(
            z.to_f64().unwrap_or(f64::NAN),
        ));
    }
    if let Some(v) = hyp2f1_series(n, z) {
        return Ok(v);
    }
    let p = (T::one() - (T::one() - z).sqrt()) / T::lit(2.0);
    Ok((T::one() - partial_sum(p, n)) / tail_prefactor(p, n))
}

/// `f(p, n)`: the prefactor times `₂F₁(1, 3/2+n; 3+n; 4p(1−p))`.
///
/// Equals `Σ_{k>n} P_{2k+1}`, the mass of walks that terminate after the cutoff.
pub fn tail_probability<T: Scalar>(p: T, n: u64) -> T {
    let pre = tail_prefactor(p, n);
    if pre == T::zero() {
        return T::zero();
    }
    let z = T::lit(4.0) * p * (T::one() - p);
    match hyp2f1_series(n, z.min(T::one())) {
        Some(h) => pre * h,
        None => termination_probability(p) - partial_sum(p, n),
    }
}

/// `F(p, n)`: probability of success within `2n+1` steps.
///
/// Computed as `termination_probability(p) − f(p, n)`, which is the partial sum
/// for every `p`; `1 − f` only agrees with it when `p ≤ 1/2`.
pub fn cutoff_probability<T: Scalar>(p: T, n: u64) -> T {
    termination_probability(p) - tail_probability(p, n)
}

/// Result of [`min_steps_for_target`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum MinSteps {
    Steps(u64),
    /// `q` is at or above the termination probability.
    Unattainable,
}

/// Largest cutoff the search will consider.
pub const MAX_CUTOFF: u64 = 1 << 40;

/// Smallest `n` with `F(p, n) > q`.
pub fn min_steps_for_target(p: f64, q: f64) -> Result<MinSteps, WalkError> {
    check_probability(p)?;
    if !(q > 0.0 && q < 1.0) {
        return Err(WalkError::InvalidTarget(q));
    }
    if q >= termination_probability(p) {
        return Ok(MinSteps::Unattainable);
    }
    let reached = |n: u64| cutoff_probability(p, n) > q;
    if reached(0) {
        return Ok(MinSteps::Steps(0));
    }
    let (mut lo, mut hi) = (0u64, 1u64);
    while !reached(hi) {
        if hi >= MAX_CUTOFF {
            return Ok(MinSteps::Unattainable);
        }
        lo = hi;
        hi *= 2;
    }
    while hi - lo > 1 {
        let mid = lo + (hi - lo) / 2;
        if reached(mid) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    Ok(MinSteps::Steps(hi))
}

/// Outcome of checking the closed-form upper bound on `F(p, n)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct BoundCheck {
    pub p: f64,
    pub n: u64,
    pub cutoff: f64,
    /// `1 − (1−p)(2p+1)/(n+2)·[2p(1−p)]^{n+1}`.
    pub upper_bound: f64,
    pub upper_holds: bool,
    /// `C(2(n+1), n+1) ≥ 2^{n+1}`.
    pub binomial_holds: bool,
}

impl BoundCheck {
    pub fn holds(&self) -> bool {
        self.upper_holds && self.binomial_holds
    }
}

/// `C(2m, m) ≥ 2^m`, exactly while the binomial fits in 128 bits.
pub fn binomial_bound_holds(m: u64) -> bool {
    let mut c: Option<u128> = Some(1);
    for i in 1..=m {
        c = c
            .and_then(|v| v.checked_mul((m + i) as u128))
            .map(|v| v / i as u128);
    }
    match (c, 1u128.checked_shl(m as u32).filter(|_| m < 128)) {
        (Some(c), Some(pow)) => c >= pow,
        _ => ln_central_binomial(m) >= m as f64 * std::f64::consts::LN_2,
    }
}

/// Checks `F(p, n)` against the closed-form upper bound and the binomial bound.
pub fn upper_bound_check(p: f64, n: u64) -> BoundCheck {
    let cutoff = cutoff_probability(p, n);
    let gap =
        (1.0 - p) * (2.0 * p + 1.0) / (n as f64 + 2.0) * (2.0 * p * (1.0 - p)).powi(n as i32 + 1);
    // Compare 1 − F against the gap directly to avoid cancellation near 1.
    let one_minus_f = (1.0 - termination_probability(p)) + tail_probability(p, n);
    BoundCheck {
        p,
        n,
        cutoff,
        upper_bound: 1.0 - gap,
        upper_holds: one_minus_f >= gap,
        binomial_holds: binomial_bound_holds(n + 1),
    }
}

/// Whether `₂F₁(1, 3/2+n; 3+n; 4p(1−p)) ≥ 2p+1`.
pub fn hyp2f1_lower_bound_holds(p: f64, n: u64) -> Result<bool, WalkError> {
    check_probability(p)?;
    Ok(hyp2f1_special(n, 4.0 * p * (1.0 - p))? >= 2.0 * p + 1.0)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn catalan_values() {
        let expected = [1u128, 1, 2, 5, 14, 42, 132, 429, 1430, 4862];
        for (j, &k) in expected.iter().enumerate() {
            assert_eq!(catalan(j as u64).unwrap(), k);
        }
        assert!(catalan(60).is_ok());
        assert!(catalan(200).is_err());
    }

    #[test]
    fn return_probabilities_small_j() {
        let p = 0.3f64;
        assert_eq!(return_probability(p, 0), 1.0 - p);
        assert!((return_probability(p, 1) - p * (1.0 - p).powi(2)).abs() < 1e-15);
        assert_eq!(return_probability(0.0f64, 4), 0.0);
        assert_eq!(return_probability(0.0f64, 40), 0.0);
    }

    #[test]
    fn log_space_matches_direct_at_switch() {
        for &p in &[0.1f64, 0.45, 0.7] {
            let direct = catalan(31).unwrap() as f64 * p.powi(31) * (1.0 - p).powi(32);
            let v = return_probability(p, 31);
            assert!((v - direct).abs() < 1e-12 * direct, "{v} vs {direct}");
        }
    }

    #[test]
    fn stirling_matches_log_sum() {
        let m = 101u64;
        let exact: f64 = (1..=m).map(|i| ((m + i) as f64 / i as f64).ln()).sum();
        assert!((ln_central_binomial(m) - exact).abs() < 1e-11);
    }

    #[test]
    fn termination() {
        assert_eq!(termination_probability(0.5f64), 1.0);
        assert!((termination_probability(2.0f64 / 3.0) - 0.5).abs() < 1e-15);
        assert_eq!(termination_probability(0.0f64), 1.0);
    }

    #[test]
    fn cutoff_matches_partial_sum() {
        for &p in &[0.0f64, 0.1, 0.3, 0.5, 0.6, 2.0 / 3.0, 0.9, 1.0] {
            for n in [0u64, 1, 5, 20, 99, 150] {
                let a = cutoff_probability(p, n);
                let b = partial_sum(p, n);
                assert!((a - b).abs() < 1e-9, "p={p} n={n}: {a} vs {b}");
            }
        }
        assert_eq!(cutoff_probability(0.0f64, 0), 1.0);
    }

    #[test]
    fn f32_instantiation() {
        let a = cutoff_probability(0.3f32, 10);
        let b = partial_sum(0.3f32, 10);
        assert!((a - b).abs() < 1e-5);
    }

    #[test]
    fn min_steps_basics() {
        assert_eq!(min_steps_for_target(0.2, 0.5).unwrap(), MinSteps::Steps(0));
        assert_eq!(
            min_steps_for_target(0.7, 0.5).unwrap(),
            MinSteps::Unattainable
        );
        let MinSteps::Steps(n) = min_steps_for_target(0.3, 0.999).unwrap() else {
            panic!()
        };
        assert!(cutoff_probability(0.3, n) > 0.999);
        assert!(cutoff_probability(0.3, n - 1) <= 0.999);
        assert!(min_steps_for_target(1.5, 0.9).is_err());
        assert!(min_steps_for_target(0.3, 1.0).is_err());
    }

    #[test]
    fn bounds_on_small_grid() {
        for n in 1..10 {
            for &p in &[0.05, 0.25, 0.5, 0.75] {
                assert!(upper_bound_check(p, n).holds(), "p={p} n={n}");
            }
        }
        assert!(binomial_bound_holds(2));
        assert!(binomial_bound_holds(500));
    }

    #[test]
    fn hyp2f1_domain() {
        assert_eq!(hyp2f1_special(2, 0.0f64).unwrap(), 1.0);
        assert!(hyp2f1_special(2, 1.5f64).is_err());
        assert!(hyp2f1_special(2, -0.1f64).is_err());
        // Fallback route near z = 1.
        let z: f64 = 1.0 - 1e-13;
        let v = hyp2f1_special(3, z).unwrap();
        assert!((v - 10.0).abs() < 1e-2, "{v}");
    }
}
