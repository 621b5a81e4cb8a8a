//! Scalar types used for vote shares, quotas and thresholds.
//!
//! Vote counts are always exact integers. Everything fractional (shares,
//! margins, quotas, thresholds) is expressed through [`Scalar`], which is
//! implemented for `f32`, `f64` and the exact [`Rational`] type.

use std::fmt::Debug;

use num_rational::Ratio;
use num_traits::{Num, ToPrimitive};

/// Exact rational scalar. Counts up to `u64::MAX` fit without loss.
pub type Rational = Ratio<i128>;

pub trait Scalar: Num + Copy + PartialOrd + Debug + Send + Sync + 'static {
    /// Slack applied when a share is compared against a fractional threshold.
    fn tolerance() -> Self;

    /// `num / den`; `den` must be nonzero.
    fn from_counts(num: u64, den: u64) -> Self;

    fn to_f64(self) -> f64;

    /// Nearest nonnegative integer, halves rounded away from zero.
    fn round_to_u64(self) -> u64;

    fn half() -> Self {
        Self::from_counts(1, 2)
    }

    /// `self >= bound` up to [`Scalar::tolerance`].
    fn at_least(self, bound: Self) -> bool {
        self >= bound - Self::tolerance()
    }

    /// `|self - other| <= tolerance`.
    fn approx_eq(self, other: Self) -> bool {
        let diff = if self > other {
            self - other
        } else {
            other - self
        };
        diff <= Self::tolerance()
    }
}

impl Scalar for f64 {
    fn tolerance() -> Self {
        1e-12
    }

    fn from_counts(num: u64, den: u64) -> Self {
        num as f64 / den as f64
    }

    fn to_f64(self) -> f64 {
        self
    }

    fn round_to_u64(self) -> u64 {
        self.max(0.0).round() as u64
    }
}

impl Scalar for f32 {
    fn tolerance() -> Self {
        1e-6
    }

    fn from_counts(num: u64, den: u64) -> Self {
        (num as f64 / den as f64) as f32
    }

    fn to_f64(self) -> f64 {
        self as f64
    }

    fn round_to_u64(self) -> u64 {
        self.max(0.0).round() as u64
    }
}

impl Scalar for Rational {
    fn tolerance() -> Self {
        Ratio::from_integer(0)
    }

    fn from_counts(num: u64, den: u64) -> Self {
        Ratio::new(num as i128, den as i128)
    }

    fn to_f64(self) -> f64 {
        ToPrimitive::to_f64(&self).unwrap_or(f64::NAN)
    }

    fn round_to_u64(self) -> u64 {
        let r = self.round().to_integer();
        r.clamp(0, u64::MAX as i128) as u64
    }
}
