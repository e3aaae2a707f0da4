//! The scalar abstraction shared by the polynomial and matrix types.
//!
//! Core arithmetic is generic over any signed commutative scalar
//! (`BigRational`, `BigInt`, `f64`, `f32`, ...). Decision procedures that
//! must be exact are pinned to the rational/integer instantiations at the
//! crate root; the float instantiations exist for sampling-style numeric
//! checks only.

use num_traits::{FromPrimitive, NumAssign, Signed, ToPrimitive};
use std::fmt;

use crate::{Int, Rational};

/// Everything polynomial and matrix arithmetic needs from a coefficient.
pub trait Coeff:
    NumAssign + Signed + Clone + FromPrimitive + PartialOrd + fmt::Debug + fmt::Display
{
}

impl<T> Coeff for T where
    T: NumAssign + Signed + Clone + FromPrimitive + PartialOrd + fmt::Debug + fmt::Display
{
}

/// Shorthand for an exact rational from an integer pair. Panics on a zero
/// denominator, mirroring `BigRational::new`.
pub fn rat(numer: i64, denom: i64) -> Rational {
    Rational::new(Int::from(numer), Int::from(denom))
}

/// Shorthand for an exact rational from an integer.
pub fn rat_int(n: i64) -> Rational {
    Rational::from_integer(Int::from(n))
}

/// Lossy conversion for float-side checks.
pub fn rat_to_f64(r: &Rational) -> f64 {
    r.to_f64()
        .unwrap_or_else(|| r.numer().to_f64().unwrap() / r.denom().to_f64().unwrap())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rat_normalizes() {
        assert_eq!(rat(2, 4), rat(1, 2));
        assert_eq!(rat(1, -2), rat(-1, 2));
        assert_eq!(rat(0, 7), rat_int(0));
    }

    #[test]
    fn rat_to_f64_is_close() {
        assert!((rat_to_f64(&rat(1, 3)) - 1.0 / 3.0).abs() < 1e-15);
    }
}
