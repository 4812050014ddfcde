//! Scalar fields underneath all matrix algebra.
//!
//! Three backends implement [`Scalar`]:
//!
//! * [`GaussianRational`]: exact arithmetic in Q(i), the default for verification.
//! * [`ComplexFloat`]: binary64 complex numbers, compared with a tolerance.
//! * [`Dual`]: `value + deriv·ε` with `ε² = 0` over any other backend, used for
//!   exact forward-mode Jacobians.

mod dual;
mod float;
mod gaussian;

use std::fmt::{Debug, Display};
use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex64;

use crate::error::{Error, Result};

pub use dual::{derivative_of, Dual};
pub use float::ComplexFloat;
pub use gaussian::GaussianRational;

/// Relative tolerance used for float comparisons unless overridden.
pub const DEFAULT_TOL: f64 = 1e-9;

/// A field element.
///
/// Exact backends ignore the `tol` argument of [`Scalar::approx_eq`].
pub trait Scalar:
    Clone
    + Debug
    + Display
    + PartialEq
    + Send
    + Sync
    + 'static
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    /// Whether arithmetic is exact (no rounding).
    const EXACT: bool;

    fn zero() -> Self;
    fn one() -> Self;
    /// The imaginary unit `i`.
    fn imag_unit() -> Self;
    fn from_i64(n: i64) -> Self;
    fn from_gaussian(q: &GaussianRational) -> Self;

    /// For duals this looks at the value part only: a dual is "zero" when it
    /// cannot be inverted.
    fn is_zero(&self) -> bool;

    fn inv(&self) -> Result<Self>;

    fn checked_div(&self, rhs: &Self) -> Result<Self> {
        Ok(self.clone() * rhs.inv()?)
    }

    /// Principal square root. Exact backends do not support it.
    fn sqrt(&self) -> Result<Self> {
        Err(Error::Unsupported("square root over an exact field"))
    }

    fn approx_eq(&self, other: &Self, tol: f64) -> bool;

    /// Best complex approximation (value part for duals).
    fn to_complex(&self) -> Complex64;

    fn from_parts_i64(re: i64, im: i64) -> Self {
        Self::from_i64(re) + Self::from_i64(im) * Self::imag_unit()
    }

    fn square(&self) -> Self {
        self.clone() * self.clone()
    }
}

/// Scalars that can host constants from a base field `S`.
///
/// Maps store their parameters over `S` and evaluate over any `T: Over<S>`,
/// which is how the same code runs on plain values and on dual numbers.
pub trait Over<S: Scalar>: Scalar {
    fn lift(s: &S) -> Self;
}

impl<S: Scalar> Over<S> for S {
    fn lift(s: &S) -> Self {
        s.clone()
    }
}

impl<S: Scalar> Over<S> for Dual<S> {
    fn lift(s: &S) -> Self {
        Dual::constant(s.clone())
    }
}

/// `|a - b| <= tol * max(1, |a|, |b|)`.
pub(crate) fn close_complex(a: Complex64, b: Complex64, tol: f64) -> bool {
    let scale = 1f64.max(a.norm()).max(b.norm());
    (a - b).norm() <= tol * scale
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(s: &str) -> GaussianRational {
        s.parse().unwrap()
    }

    #[test]
    fn rational_sum() {
        assert_eq!(q("1/2") + q("1/3"), q("5/6"));
    }

    #[test]
    fn i_squared_is_minus_one() {
        let i = GaussianRational::imag_unit();
        assert_eq!(i.clone() * i, GaussianRational::from_i64(-1));
        let j = ComplexFloat::imag_unit();
        assert!((j * j).approx_eq(&ComplexFloat::from_i64(-1), 0.0));
    }

    #[test]
    fn dual_product_rule() {
        let a = Dual::new(q("2"), q("3"));
        let b = Dual::new(q("5"), q("7"));
        // (2 + 3e)(5 + 7e) = 10 + (14 + 15)e
        assert_eq!(a * b, Dual::new(q("10"), q("29")));
    }

    #[test]
    fn lift_into_dual() {
        let d: Dual<GaussianRational> = Over::lift(&q("3/4"));
        assert_eq!(d.value, q("3/4"));
        assert!(d.deriv.is_zero());
    }

    #[test]
    fn division_by_zero() {
        assert_eq!(GaussianRational::zero().inv(), Err(Error::DivisionByZero));
        assert_eq!(ComplexFloat::zero().inv(), Err(Error::DivisionByZero));
        let d = Dual::new(q("0"), q("1"));
        assert_eq!(d.inv(), Err(Error::DivisionByZero));
    }
}
