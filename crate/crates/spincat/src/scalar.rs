//! Scalar abstraction: all core math is generic over the working float.

use num_complex::Complex;
use num_traits::{Float, FloatConst, FromPrimitive, NumAssign};
use std::fmt::{Debug, Display, LowerExp};
use std::iter::Sum;

/// Complex number over the working scalar.
pub type C<T> = Complex<T>;

/// Floating-point scalar used throughout the crate.
///
/// Implemented for `f32` and `f64`. The paper-level tolerances in the test
/// suites assume `f64`; `f32` builds are supported for cheap exploratory runs.
pub trait Real:
    'static
    + Send
    + Sync
    + Float
    + FloatConst
    + NumAssign
    + FromPrimitive
    + Sum
    + Default
    + Debug
    + Display
    + LowerExp
{
    /// Convert an `f64` literal (tolerances, physical constants) into `Self`.
    #[inline]
    fn of(x: f64) -> Self {
        Self::from_f64(x).expect("finite literal")
    }

    /// Convert a `usize` count into `Self`.
    #[inline]
    fn of_usize(n: usize) -> Self {
        Self::from_usize(n).expect("count fits in scalar")
    }

    /// Lossy view as `f64` (used at sampling and formatting boundaries).
    #[inline]
    fn as_f64(self) -> f64 {
        self.to_f64().expect("scalar fits in f64")
    }
}

impl Real for f32 {}
impl Real for f64 {}

/// `exp(i phi)` as a unit complex number.
#[inline]
pub fn expi<T: Real>(phi: T) -> C<T> {
    C::new(phi.cos(), phi.sin())
}

/// Purely real complex value.
#[inline]
pub fn cr<T: Real>(x: T) -> C<T> {
    C::new(x, T::zero())
}
