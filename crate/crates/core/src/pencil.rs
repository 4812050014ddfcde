//! First-degree matrix polynomials `L(ζ) = A - ζB`.

use crate::mat2::Mat2;
use crate::scalar::Scalar;

/// `L(ζ) = A - ζ·B`.
#[derive(Clone, Debug, PartialEq)]
pub struct MatrixPencil<S> {
    pub a: Mat2<S>,
    pub b: Mat2<S>,
}

/// Coefficients of `det(A - ζB) = f2·ζ² - f1·ζ + f0`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PencilInvariants<S> {
    pub f0: S,
    pub f1: S,
    pub f2: S,
}

impl<S: Scalar> MatrixPencil<S> {
    pub fn new(a: Mat2<S>, b: Mat2<S>) -> Self {
        Self { a, b }
    }

    pub fn eval(&self, zeta: &S) -> Mat2<S> {
        self.a.clone() - self.b.scale(zeta)
    }

    pub fn invariants(&self) -> PencilInvariants<S> {
        invariants(&self.a, &self.b)
    }

    /// Coefficient matrices `[C0, C1, C2]` of `L1(ζ)·L2(ζ) = C0 + ζC1 + ζ²C2`.
    pub fn product_coefficients(&self, rhs: &Self) -> [Mat2<S>; 3] {
        [
            &self.a * &rhs.a,
            -(&self.a * &rhs.b + &self.b * &rhs.a),
            &self.b * &rhs.b,
        ]
    }
}

impl<S: Scalar> PencilInvariants<S> {
    /// `p_A(ζ) = f2·ζ² - f1·ζ + f0`.
    pub fn eval(&self, zeta: &S) -> S {
        self.f2.clone() * zeta.square() - self.f1.clone() * zeta.clone() + self.f0.clone()
    }

    pub fn approx_eq(&self, other: &Self, tol: f64) -> bool {
        self.f0.approx_eq(&other.f0, tol)
            && self.f1.approx_eq(&other.f1, tol)
            && self.f2.approx_eq(&other.f2, tol)
    }
}

/// `f1(A) = a1·b4 + a4·b1 - a3·b2 - a2·b3`, the bilinear coefficient of `ζ`
/// in `det(A - ζB)` (sign flipped). Valid for singular `B`.
pub fn f1<S: Scalar>(a: &Mat2<S>, b: &Mat2<S>) -> S {
    a.a1.clone() * b.a4.clone() + a.a4.clone() * b.a1.clone()
        - a.a3.clone() * b.a2.clone()
        - a.a2.clone() * b.a3.clone()
}

pub fn invariants<S: Scalar>(a: &Mat2<S>, b: &Mat2<S>) -> PencilInvariants<S> {
    PencilInvariants {
        f0: a.det(),
        f1: f1(a, b),
        f2: b.det(),
    }
}

/// `det B · tr(A B⁻¹)`, the trace form of `f1` (only for invertible `B`).
pub fn f1_trace_form<S: Scalar>(a: &Mat2<S>, b: &Mat2<S>) -> crate::Result<S> {
    Ok(b.det() * (a * &b.inverse()?).trace())
}

/// Whether `L1(ζ)L2(ζ) = L3(ζ)L4(ζ)` as polynomials in `ζ`, by comparing the
/// three matrix coefficients.
pub fn pencil_product_equal<S: Scalar>(
    l1: &MatrixPencil<S>,
    l2: &MatrixPencil<S>,
    l3: &MatrixPencil<S>,
    l4: &MatrixPencil<S>,
    tol: f64,
) -> bool {
    let lhs = l1.product_coefficients(l2);
    let rhs = l3.product_coefficients(l4);
    lhs.iter().zip(rhs.iter()).all(|(p, q)| p.approx_eq(q, tol))
}

/// The coefficients `K = XYZ`, `L = XYB + XBZ + BYZ`, `M = XB² + BYB + B²Z` of
/// `(X - ζB)(Y - ζB)(Z - ζB) = K - ζL + ζ²M - ζ³B³`.
pub fn triple_products<S: Scalar>(
    x: &Mat2<S>,
    y: &Mat2<S>,
    z: &Mat2<S>,
    b: &Mat2<S>,
) -> (Mat2<S>, Mat2<S>, Mat2<S>) {
    let xy = x * y;
    let k = &xy * z;
    let l = &xy * b + &(x * b) * z + &(b * y) * z;
    let b2 = b * b;
    let m = x * &b2 + &(b * y) * b + &b2 * z;
    (k, l, m)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{ComplexFloat, GaussianRational};

    type Q = GaussianRational;
    type M = Mat2<Q>;

    fn m(e: [[i64; 2]; 2]) -> M {
        M::from_i64(e)
    }

    #[test]
    fn invariants_identity_leading_term() {
        let inv = invariants(&m([[2, 1], [1, 1]]), &M::identity());
        assert_eq!(
            inv,
            PencilInvariants {
                f0: Q::from_i64(1),
                f1: Q::from_i64(3),
                f2: Q::from_i64(1)
            }
        );
    }

    #[test]
    fn f1_for_jordan_block_leading_term() {
        // B = [[e, 1], [0, e]] gives f1 = e(a11 + a22) - a21
        let eps = Q::from_ratio(1, 7);
        let b = M::new(eps.clone(), Q::one(), Q::zero(), eps.clone());
        let a = m([[2, 3], [5, 11]]);
        let expected = eps * Q::from_i64(13) - Q::from_i64(5);
        assert_eq!(f1(&a, &b), expected);
    }

    #[test]
    fn f2_for_diag_leading_term() {
        let eps = ComplexFloat::real(1e-3);
        let b = Mat2::diag(ComplexFloat::one(), eps);
        let a = Mat2::<ComplexFloat>::from_i64([[1, 2], [3, 4]]);
        assert_eq!(invariants(&a, &b).f2, eps);
    }

    #[test]
    fn singular_b_is_supported() {
        let b = m([[1, 0], [0, 0]]);
        let a = m([[2, 3], [5, 7]]);
        let inv = invariants(&a, &b);
        assert_eq!(inv.f2, Q::zero());
        assert_eq!(inv.f1, Q::from_i64(7));
        assert!(f1_trace_form(&a, &b).is_err());
    }

    #[test]
    fn triple_products_worked_example() {
        let (k, l, mm) = triple_products(
            &m([[2, 1], [1, 1]]),
            &m([[1, 0], [0, 2]]),
            &m([[1, 1], [0, 1]]),
            &M::identity(),
        );
        assert_eq!(k, m([[2, 4], [1, 3]]));
        assert_eq!(l, m([[5, 6], [2, 6]]));
        assert_eq!(mm, m([[4, 2], [1, 4]]));
    }

    #[test]
    fn triple_products_degenerate() {
        let z = M::zero();
        let b = m([[1, 2], [3, 4]]);
        assert_eq!(
            triple_products(&z, &z, &z, &b),
            (z.clone(), z.clone(), z.clone())
        );
        let (x, y, w) = (
            m([[1, 2], [0, 1]]),
            m([[3, 0], [1, 1]]),
            m([[2, 1], [1, 2]]),
        );
        let (k, l, mm) = triple_products(&x, &y, &w, &z);
        assert_eq!(k, x * y * w);
        assert!(l.is_zero() && mm.is_zero());
    }

    #[test]
    fn equal_products_trivially() {
        let b = M::identity();
        let p = |a: M| MatrixPencil::new(a, b.clone());
        let (x, y) = (p(m([[2, 1], [1, 1]])), p(m([[1, 0], [0, 2]])));
        assert!(pencil_product_equal(&x, &y, &x, &y, 0.0));
        assert!(!pencil_product_equal(&x, &y, &y, &x, 0.0));
    }
}
