use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex64;

use super::{GaussianRational, Scalar};
use crate::error::Result;

/// `value + deriv·ε` with `ε² = 0`.
///
/// Equality compares both parts; [`Scalar::is_zero`] looks only at the value,
/// since that decides invertibility.
#[derive(Clone, Debug, PartialEq, Default)]
pub struct Dual<S> {
    pub value: S,
    pub deriv: S,
}

impl<S: Scalar> Dual<S> {
    pub fn new(value: S, deriv: S) -> Self {
        Self { value, deriv }
    }

    pub fn constant(value: S) -> Self {
        Self {
            value,
            deriv: S::zero(),
        }
    }

    /// The independent variable at `value` (derivative seed 1).
    pub fn variable(value: S) -> Self {
        Self {
            value,
            deriv: S::one(),
        }
    }
}

impl<S: Scalar> Add for Dual<S> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Self::new(self.value + rhs.value, self.deriv + rhs.deriv)
    }
}

impl<S: Scalar> Sub for Dual<S> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Self::new(self.value - rhs.value, self.deriv - rhs.deriv)
    }
}

impl<S: Scalar> Mul for Dual<S> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        let deriv = self.value.clone() * rhs.deriv + self.deriv * rhs.value.clone();
        Self::new(self.value * rhs.value, deriv)
    }
}

impl<S: Scalar> Neg for Dual<S> {
    type Output = Self;
    fn neg(self) -> Self {
        Self::new(-self.value, -self.deriv)
    }
}

impl<S: Scalar> Scalar for Dual<S> {
    const EXACT: bool = S::EXACT;

    fn zero() -> Self {
        Self::constant(S::zero())
    }

    fn one() -> Self {
        Self::constant(S::one())
    }

    fn imag_unit() -> Self {
        Self::constant(S::imag_unit())
    }

    fn from_i64(n: i64) -> Self {
        Self::constant(S::from_i64(n))
    }

    fn from_gaussian(q: &GaussianRational) -> Self {
        Self::constant(S::from_gaussian(q))
    }

    fn is_zero(&self) -> bool {
        self.value.is_zero()
    }

    fn inv(&self) -> Result<Self> {
        let r = self.value.inv()?;
        let deriv = -(self.deriv.clone() * r.square());
        Ok(Self::new(r, deriv))
    }

    fn sqrt(&self) -> Result<Self> {
        let s = self.value.sqrt()?;
        let two_s = s.clone() + s.clone();
        let deriv = self.deriv.checked_div(&two_s)?;
        Ok(Self::new(s, deriv))
    }

    fn approx_eq(&self, other: &Self, tol: f64) -> bool {
        self.value.approx_eq(&other.value, tol) && self.deriv.approx_eq(&other.deriv, tol)
    }

    fn to_complex(&self) -> Complex64 {
        self.value.to_complex()
    }
}

impl<S: Scalar> fmt::Display for Dual<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}) + ({})ε", self.value, self.deriv)
    }
}

/// Derivative of `f` at `x0` from a single evaluation of `f(x0 + ε)`.
pub fn derivative_of<S, F>(f: F, x0: &S) -> Result<S>
where
    S: Scalar,
    F: FnOnce(Dual<S>) -> Result<Dual<S>>,
{
    Ok(f(Dual::variable(x0.clone()))?.deriv)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mat2::Mat2;
    use crate::scalar::ComplexFloat;

    type Q = GaussianRational;

    #[test]
    fn power_rule() {
        let d = derivative_of(|x: Dual<Q>| Ok(x.clone() * x), &Q::from_i64(3)).unwrap();
        assert_eq!(d, Q::from_i64(6));
    }

    #[test]
    fn derivative_of_determinant() {
        let f = |x: Dual<Q>| Ok(Mat2::new(x.clone(), Dual::one(), Dual::one(), x).det());
        assert_eq!(derivative_of(f, &Q::from_i64(2)).unwrap(), Q::from_i64(4));

        // same value from a central difference on the float backend
        let g = |x: f64| x * x - 1.0;
        let h = 1e-6;
        let fd = (g(2.0 + h) - g(2.0 - h)) / (2.0 * h);
        assert!((fd - 4.0).abs() < 1e-6);
    }

    #[test]
    fn constant_has_zero_derivative() {
        let c = Q::from_ratio(7, 3);
        let d = derivative_of(|_x: Dual<Q>| Ok(Dual::constant(c.clone())), &Q::one()).unwrap();
        assert!(d.is_zero());
    }

    #[test]
    fn derivative_at_pole_is_domain_error() {
        let f = |x: Dual<ComplexFloat>| x.inv();
        assert!(derivative_of(f, &ComplexFloat::zero())
            .unwrap_err()
            .is_domain());
    }

    #[test]
    fn quotient_rule() {
        // d/dx 1/x at x = 2 is -1/4
        let d = derivative_of(|x: Dual<Q>| x.inv(), &Q::from_i64(2)).unwrap();
        assert_eq!(d, Q::from_ratio(-1, 4));
    }
}
