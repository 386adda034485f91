//! Scalar abstraction: the crate's math is written once against `Real`
//! and instantiated at `f32` or `f64` (crate-root aliases use `f64`).

use std::fmt::{Debug, Display};
use std::iter::Sum;
use std::ops::{AddAssign, DivAssign, MulAssign, SubAssign};

/// Floating-point scalar usable in every information measure.
pub trait Real:
    num_traits::Float
    + num_traits::FromPrimitive
    + num_traits::ToPrimitive
    + Sum<Self>
    + AddAssign
    + SubAssign
    + MulAssign
    + DivAssign
    + Default
    + Display
    + Debug
    + Send
    + Sync
    + 'static
{
    /// Lift an `f64` literal into the scalar type.
    #[inline]
    fn lit(v: f64) -> Self {
        Self::from_f64(v).expect("literal representable in scalar type")
    }

    /// Widen to `f64` (exact for `f32` and `f64`).
    #[inline]
    fn widen(self) -> f64 {
        self.to_f64().expect("scalar convertible to f64")
    }
}

impl<T> Real for T where
    T: num_traits::Float
        + num_traits::FromPrimitive
        + num_traits::ToPrimitive
        + Sum<Self>
        + AddAssign
        + SubAssign
        + MulAssign
        + DivAssign
        + Default
        + Display
        + Debug
        + Send
        + Sync
        + 'static
{
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sum_generic<T: Real>(xs: &[T]) -> T {
        xs.iter().copied().sum()
    }

    #[test]
    fn both_widths_implement_real() {
        assert_eq!(sum_generic(&[1.0f32, 2.0, 3.0]), 6.0f32);
        assert_eq!(sum_generic(&[1.0f64, 2.0, 3.0]), 6.0f64);
        assert_eq!(f32::lit(0.5).widen(), 0.5);
    }
}
