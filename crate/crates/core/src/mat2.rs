//! 2×2 matrices over a [`Scalar`].
//!
//! Entries are labelled `a1..a4` row by row, `[[a1, a2], [a3, a4]]`. The
//! Sklyanin structure matrix indexes entries in exactly this order, and so do
//! the index arguments taken by [`Mat2::entry`].

use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::scalar::{Over, Scalar};

#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Mat2<S> {
    pub a1: S,
    pub a2: S,
    pub a3: S,
    pub a4: S,
}

impl<S: Scalar> Mat2<S> {
    pub fn new(a1: S, a2: S, a3: S, a4: S) -> Self {
        Self { a1, a2, a3, a4 }
    }

    pub fn from_i64(e: [[i64; 2]; 2]) -> Self {
        Self::new(
            S::from_i64(e[0][0]),
            S::from_i64(e[0][1]),
            S::from_i64(e[1][0]),
            S::from_i64(e[1][1]),
        )
    }

    pub fn from_entries(e: [S; 4]) -> Self {
        let [a1, a2, a3, a4] = e;
        Self { a1, a2, a3, a4 }
    }

    pub fn identity() -> Self {
        Self::scalar(S::one())
    }

    pub fn zero() -> Self {
        Self::scalar(S::zero())
    }

    pub fn scalar(s: S) -> Self {
        Self::new(s.clone(), S::zero(), S::zero(), s)
    }

    pub fn diag(d1: S, d2: S) -> Self {
        Self::new(d1, S::zero(), S::zero(), d2)
    }

    pub fn entries(&self) -> [S; 4] {
        [
            self.a1.clone(),
            self.a2.clone(),
            self.a3.clone(),
            self.a4.clone(),
        ]
    }

    /// Entry by zero-based index in `a1..a4` order.
    pub fn entry(&self, k: usize) -> &S {
        match k {
            0 => &self.a1,
            1 => &self.a2,
            2 => &self.a3,
            3 => &self.a4,
            _ => panic!("Mat2 entry index {k} out of range"),
        }
    }

    pub fn entry_mut(&mut self, k: usize) -> &mut S {
        match k {
            0 => &mut self.a1,
            1 => &mut self.a2,
            2 => &mut self.a3,
            3 => &mut self.a4,
            _ => panic!("Mat2 entry index {k} out of range"),
        }
    }

    pub fn map<T, F: Fn(&S) -> T>(&self, f: F) -> Mat2<T> {
        Mat2 {
            a1: f(&self.a1),
            a2: f(&self.a2),
            a3: f(&self.a3),
            a4: f(&self.a4),
        }
    }

    /// Embed into a larger scalar type (e.g. constants into duals).
    pub fn lift<T: Over<S>>(&self) -> Mat2<T> {
        self.map(T::lift)
    }

    pub fn det(&self) -> S {
        self.a1.clone() * self.a4.clone() - self.a2.clone() * self.a3.clone()
    }

    pub fn trace(&self) -> S {
        self.a1.clone() + self.a4.clone()
    }

    pub fn transpose(&self) -> Self {
        Self::new(
            self.a1.clone(),
            self.a3.clone(),
            self.a2.clone(),
            self.a4.clone(),
        )
    }

    /// Adjugate, `A · adj(A) = det(A) · I`.
    pub fn adj(&self) -> Self {
        Self::new(
            self.a4.clone(),
            -self.a2.clone(),
            -self.a3.clone(),
            self.a1.clone(),
        )
    }

    pub fn scale(&self, s: &S) -> Self {
        self.map(|x| x.clone() * s.clone())
    }

    /// Inverse through the adjugate.
    pub fn inverse(&self) -> Result<Self> {
        let d = self.det();
        if d.is_zero() {
            return Err(Error::SingularMatrix);
        }
        Ok(self.adj().scale(&d.inv()?))
    }

    /// `P · A · P⁻¹`.
    pub fn conjugate(p: &Self, a: &Self) -> Result<Self> {
        Ok(p.clone() * a.clone() * p.inverse()?)
    }

    pub fn approx_eq(&self, other: &Self, tol: f64) -> bool {
        self.a1.approx_eq(&other.a1, tol)
            && self.a2.approx_eq(&other.a2, tol)
            && self.a3.approx_eq(&other.a3, tol)
            && self.a4.approx_eq(&other.a4, tol)
    }

    pub fn is_zero(&self) -> bool {
        self.a1.is_zero() && self.a2.is_zero() && self.a3.is_zero() && self.a4.is_zero()
    }
}

impl<S: Scalar> Add for Mat2<S> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Self::new(
            self.a1 + rhs.a1,
            self.a2 + rhs.a2,
            self.a3 + rhs.a3,
            self.a4 + rhs.a4,
        )
    }
}

impl<S: Scalar> Sub for Mat2<S> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Self::new(
            self.a1 - rhs.a1,
            self.a2 - rhs.a2,
            self.a3 - rhs.a3,
            self.a4 - rhs.a4,
        )
    }
}

impl<S: Scalar> Neg for Mat2<S> {
    type Output = Self;
    fn neg(self) -> Self {
        Self::new(-self.a1, -self.a2, -self.a3, -self.a4)
    }
}

impl<S: Scalar> Mul for Mat2<S> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        &self * &rhs
    }
}

impl<S: Scalar> Mul for &Mat2<S> {
    type Output = Mat2<S>;
    fn mul(self, rhs: &Mat2<S>) -> Mat2<S> {
        let (a, b) = (self, rhs);
        Mat2::new(
            a.a1.clone() * b.a1.clone() + a.a2.clone() * b.a3.clone(),
            a.a1.clone() * b.a2.clone() + a.a2.clone() * b.a4.clone(),
            a.a3.clone() * b.a1.clone() + a.a4.clone() * b.a3.clone(),
            a.a3.clone() * b.a2.clone() + a.a4.clone() * b.a4.clone(),
        )
    }
}

impl<S: Scalar> std::fmt::Display for Mat2<S> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "[[{}, {}], [{}, {}]]",
            self.a1, self.a2, self.a3, self.a4
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::GaussianRational;

    type Q = GaussianRational;
    type M = Mat2<Q>;

    fn m(e: [[i64; 2]; 2]) -> M {
        M::from_i64(e)
    }

    #[test]
    fn identity_is_neutral() {
        let a = m([[2, 3], [5, 7]]);
        assert_eq!(M::identity() * a.clone(), a);
    }

    #[test]
    fn hand_product() {
        assert_eq!(
            m([[1, 1], [0, 1]]) * m([[1, 0], [1, 1]]),
            m([[2, 1], [1, 1]])
        );
    }

    #[test]
    fn adjugate_identity() {
        let a = m([[2, 3], [5, 7]]);
        assert_eq!(a.clone() * a.adj(), M::scalar(a.det()));
    }

    #[test]
    fn inverses() {
        assert_eq!(m([[0, 1], [1, 0]]).inverse().unwrap(), m([[0, 1], [1, 0]]));
        let a = m([[0, 3], [2, 2]]);
        let expected = M::new(
            Q::from_ratio(-1, 3),
            Q::from_ratio(1, 2),
            Q::from_ratio(1, 3),
            Q::zero(),
        );
        let inv = a.inverse().unwrap();
        assert_eq!(inv, expected);
        assert_eq!(a * inv, M::identity());
        assert_eq!(m([[1, 2], [2, 4]]).inverse(), Err(Error::SingularMatrix));
    }

    #[test]
    fn conjugation_by_identity() {
        let a = m([[2, 3], [5, 7]]);
        assert_eq!(M::conjugate(&M::identity(), &a).unwrap(), a);
        assert_eq!(
            M::conjugate(&m([[1, 2], [2, 4]]), &a),
            Err(Error::SingularMatrix)
        );
    }
}
