//! Scalars, exact number fields and dense linear algebra.
//!
//! Everything above this module is written against the [`Scalar`] trait.
//! Three implementations are provided: [`FieldElement`] (exact, in a real
//! number field), [`BigRational`] (exact, simply-laced diagrams only) and
//! `f64` (approximate, tolerance-based signs; useful as a cross-check and
//! for display).

mod field;
mod matrix;
pub mod poly;

pub use field::{FieldElement, NumberField};
pub use matrix::{Matrix, Vector};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::fmt::Debug;
use std::hash::Hash;
use std::ops::{Add, Div, Mul, Neg, Sub};

/// A real scalar with a decidable sign.
///
/// `sign` is the only zero test generic code may use: for `f64` it applies a
/// tolerance, for the exact types it is exact.
pub trait Scalar:
    Clone
    + Debug
    + PartialEq
    + Zero
    + One
    + Neg<Output = Self>
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
{
    /// Hashable, totally ordered canonical form used for deduplication.
    type Key: Clone + Debug + Eq + Hash + Ord;

    /// Whether `sign` is exact.
    const EXACT: bool;

    fn sign(&self) -> i8;

    fn key(&self) -> Self::Key;

    /// Floating approximation, for display and pivot choice only.
    fn approx(&self) -> f64;

    fn from_ratio(r: &BigRational) -> Self;

    fn from_int(n: i64) -> Self {
        Self::from_ratio(&BigRational::from_integer(BigInt::from(n)))
    }

    fn is_zero_exact(&self) -> bool {
        self.sign() == 0
    }

    fn abs_value(&self) -> Self {
        if self.sign() < 0 {
            -self.clone()
        } else {
            self.clone()
        }
    }
}

impl Scalar for BigRational {
    type Key = BigRational;
    const EXACT: bool = true;

    fn sign(&self) -> i8 {
        if self.is_zero() {
            0
        } else if self.is_positive() {
            1
        } else {
            -1
        }
    }

    fn key(&self) -> BigRational {
        self.clone()
    }

    fn is_zero_exact(&self) -> bool {
        self.is_zero()
    }

    fn approx(&self) -> f64 {
        ToPrimitive::to_f64(self).unwrap_or(f64::NAN)
    }

    fn from_ratio(r: &BigRational) -> Self {
        r.clone()
    }
}

/// Absolute tolerance used by the `f64` scalar for sign decisions.
pub const F64_TOLERANCE: f64 = 1e-9;

impl Scalar for f64 {
    type Key = i64;
    const EXACT: bool = false;

    fn sign(&self) -> i8 {
        if self.abs() <= F64_TOLERANCE {
            0
        } else if *self > 0.0 {
            1
        } else {
            -1
        }
    }

    fn key(&self) -> i64 {
        // 1e-7 grid; values closer than the grid collapse to one key
        (self * 1e7).round() as i64
    }

    fn approx(&self) -> f64 {
        *self
    }

    fn from_ratio(r: &BigRational) -> Self {
        ToPrimitive::to_f64(r).unwrap_or(f64::NAN)
    }
}

pub(crate) fn ratio(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}
