//! Exact comparisons against square roots of rationals. No floating point:
//! everything reduces to integer comparisons of squares.

use std::cmp::Ordering;

use num_integer::Integer;
use num_traits::Signed;

use crate::error::{Error, Result};
use crate::{Int, Rational};

/// The least integer t with t ≥ m·√c, decided by exact comparison of t²
/// against m²·c.
pub fn ceil_of_scaled_sqrt(c: &Rational, m: &Int) -> Result<Int> {
    if c.is_negative() {
        return Err(Error::NegativeValue);
    }
    if !m.is_positive() {
        return Err(Error::NegativeValue);
    }
    // m²·c = p/q with p ≥ 0, q > 0
    let scaled = Rational::from_integer(m * m) * c;
    let p = scaled.numer().clone();
    let q = scaled.denom().clone();
    let mut t = p.div_floor(&q).sqrt();
    // t = isqrt(⌊p/q⌋) satisfies t ≤ √(p/q) < t + 2; settle exactly
    while &t * &t * &q < p {
        t += 1;
    }
    while t.is_positive() && (&t - 1) * (&t - 1) * &q >= p {
        t -= 1;
    }
    Ok(t)
}

/// The sign of r − √c, by case analysis on the sign of r and exact
/// comparison of r² with c.
pub fn compare_to_sqrt(r: &Rational, c: &Rational) -> Result<Ordering> {
    if c.is_negative() {
        return Err(Error::NegativeValue);
    }
    if r.is_negative() {
        return Ok(Ordering::Less);
    }
    let r2 = r * r;
    Ok(r2.cmp(c))
}
