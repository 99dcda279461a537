// Copyright 2026 The framekit Authors
// SPDX-License-Identifier: Apache-2.0

use std::fmt::{Debug, Display};

use num_traits::{Float, FloatConst, FromPrimitive};

/// Real scalar used by the dense oracle, the analytics and the channel code.
pub trait Scalar:
    Float + FloatConst + FromPrimitive + Debug + Display + Default + Send + Sync + 'static
{
    /// Tolerance used for equality of matrices whose entries are exact sums of
    /// `{±1, ±i, ±1/√2, …}`.
    fn default_tol() -> Self;

    fn lit(v: f64) -> Self {
        Self::from_f64(v).expect("literal representable in scalar type")
    }
}

impl Scalar for f64 {
    fn default_tol() -> Self {
        1e-10
    }
}

impl Scalar for f32 {
    fn default_tol() -> Self {
        1e-5
    }
}
