use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex64;
use num_traits::ToPrimitive;

use super::{close_complex, GaussianRational, Scalar};
use crate::error::{Error, Result};

/// binary64 complex scalar.
#[derive(Clone, Copy, Debug, PartialEq, Default)]
pub struct ComplexFloat(pub Complex64);

impl ComplexFloat {
    pub fn new(re: f64, im: f64) -> Self {
        Self(Complex64::new(re, im))
    }

    pub fn real(re: f64) -> Self {
        Self::new(re, 0.0)
    }

    pub fn re(&self) -> f64 {
        self.0.re
    }

    pub fn im(&self) -> f64 {
        self.0.im
    }

    pub fn abs(&self) -> f64 {
        self.0.norm()
    }
}

impl From<f64> for ComplexFloat {
    fn from(x: f64) -> Self {
        Self::real(x)
    }
}

impl Add for ComplexFloat {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Self(self.0 + rhs.0)
    }
}

impl Sub for ComplexFloat {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Self(self.0 - rhs.0)
    }
}

impl Mul for ComplexFloat {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        Self(self.0 * rhs.0)
    }
}

impl Neg for ComplexFloat {
    type Output = Self;
    fn neg(self) -> Self {
        Self(-self.0)
    }
}

impl Scalar for ComplexFloat {
    const EXACT: bool = false;

    fn zero() -> Self {
        Self::default()
    }

    fn one() -> Self {
        Self::real(1.0)
    }

    fn imag_unit() -> Self {
        Self::new(0.0, 1.0)
    }

    fn from_i64(n: i64) -> Self {
        Self::real(n as f64)
    }

    fn from_gaussian(q: &GaussianRational) -> Self {
        Self::new(
            q.re.to_f64().unwrap_or(f64::NAN),
            q.im.to_f64().unwrap_or(f64::NAN),
        )
    }

    fn is_zero(&self) -> bool {
        self.0.re == 0.0 && self.0.im == 0.0
    }

    fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let r = self.0.inv();
        if !r.re.is_finite() || !r.im.is_finite() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self(r))
    }

    fn sqrt(&self) -> Result<Self> {
        Ok(Self(self.0.sqrt()))
    }

    fn approx_eq(&self, other: &Self, tol: f64) -> bool {
        close_complex(self.0, other.0, tol)
    }

    fn to_complex(&self) -> Complex64 {
        self.0
    }
}

impl fmt::Display for ComplexFloat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sign = if self.0.im.is_sign_negative() {
            '-'
        } else {
            '+'
        };
        write!(f, "{:e}{}{:e}i", self.0.re, sign, self.0.im.abs())
    }
}
