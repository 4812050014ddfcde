//! The general Yang–Baxter map `R_B` obtained by re-factorizing
//! `(Y - ζB)(X - ζB) = (U - ζB)(V - ζB)`.
//!
//! Besides the trivial solution `(U, V) = (Y, X)` there is exactly one
//! solution with `det(U - Y) ≠ 0`:
//!
//! ```text
//! P1 = f2(X)(YB + BX) - f1(X)B²
//! P2 = f2(X)YX - f0(X)B²
//! U  = P2 · P1⁻¹ · B
//! V  = B⁻¹(YB + BX - UB)
//! ```
//!
//! It is defined on the open dense set `det P1 ≠ 0`; outside it the functions
//! here return [`Error::SingularP1`] instead of falling back to the trivial
//! branch.

use crate::error::{Error, Result};
use crate::mat2::Mat2;
use crate::pencil::{invariants, triple_products, PencilInvariants};
use crate::scalar::Scalar;

#[derive(Clone, Debug, PartialEq)]
pub struct RefactorResult<S> {
    pub u: Mat2<S>,
    pub v: Mat2<S>,
    /// Invariants of `X` and `Y`.
    pub invariants_in: (PencilInvariants<S>, PencilInvariants<S>),
    /// Invariants of `U` and `V`.
    pub invariants_out: (PencilInvariants<S>, PencilInvariants<S>),
}

impl<S: Scalar> RefactorResult<S> {
    /// `f_i(U) = f_i(X)` and `f_i(V) = f_i(Y)` for `i = 0, 1, 2`.
    pub fn invariants_transferred(&self, tol: f64) -> bool {
        self.invariants_in.0.approx_eq(&self.invariants_out.0, tol)
            && self.invariants_in.1.approx_eq(&self.invariants_out.1, tol)
    }
}

/// `(P1, P2)` for the pair `(X, Y)`.
pub fn characteristic_combinations<S: Scalar>(
    x: &Mat2<S>,
    y: &Mat2<S>,
    b: &Mat2<S>,
) -> (Mat2<S>, Mat2<S>) {
    let f = invariants(x, b);
    let b2 = b * b;
    let p1 = (y * b + b * x).scale(&f.f2) - b2.scale(&f.f1);
    let p2 = (y * x).scale(&f.f2) - b2.scale(&f.f0);
    (p1, p2)
}

/// Just `(U, V)` without the invariant bookkeeping.
pub fn refactor_pair<S: Scalar>(
    x: &Mat2<S>,
    y: &Mat2<S>,
    b: &Mat2<S>,
) -> Result<(Mat2<S>, Mat2<S>)> {
    let b_inv = b.inverse().map_err(|_| Error::SingularB)?;
    let (p1, p2) = characteristic_combinations(x, y, b);
    let p1_inv = p1.inverse().map_err(|_| Error::SingularP1)?;
    let u = &(&p2 * &p1_inv) * b;
    let v = &b_inv * &(y * b + b * x - &u * b);
    Ok((u, v))
}

pub fn refactor<S: Scalar>(x: &Mat2<S>, y: &Mat2<S>, b: &Mat2<S>) -> Result<RefactorResult<S>> {
    let (u, v) = refactor_pair(x, y, b)?;
    Ok(RefactorResult {
        invariants_in: (invariants(x, b), invariants(y, b)),
        invariants_out: (invariants(&u, b), invariants(&v, b)),
        u,
        v,
    })
}

pub fn trivial_branch<S: Scalar>(x: &Mat2<S>, y: &Mat2<S>) -> (Mat2<S>, Mat2<S>) {
    (y.clone(), x.clone())
}

/// Recovers `(X, V)` from `(U, Y)`:
/// `XB⁻¹ = (Y - U)⁻¹ UB⁻¹ (Y - U)` and `VB⁻¹ = (U - Y)⁻¹ YB⁻¹ (U - Y)`.
pub fn inverse_refactor<S: Scalar>(
    u: &Mat2<S>,
    y: &Mat2<S>,
    b: &Mat2<S>,
) -> Result<(Mat2<S>, Mat2<S>)> {
    let b_inv = b.inverse().map_err(|_| Error::SingularB)?;
    let d = u.clone() - y.clone();
    let d_inv = d.inverse().map_err(|_| Error::SingularDifference)?;
    // (Y - U)⁻¹ = -(U - Y)⁻¹ and the two signs cancel.
    let x = &(&(&(&d_inv * u) * &b_inv) * &d) * b;
    let v = &(&(&(&d_inv * y) * &b_inv) * &d) * b;
    Ok((x, v))
}

/// The matrix `N = f2²L - f2f1M + (f1² - f2f0)B³` whose invertibility makes
/// the first factor of a triple product unique.
pub fn uniqueness_matrix<S: Scalar>(x: &Mat2<S>, y: &Mat2<S>, z: &Mat2<S>, b: &Mat2<S>) -> Mat2<S> {
    let f = invariants(x, b);
    let (_, l, m) = triple_products(x, y, z, b);
    let b3 = &(b * b) * b;
    let f2f2 = f.f2.square();
    l.scale(&f2f2) - m.scale(&(f.f2.clone() * f.f1.clone()))
        + b3.scale(&(f.f1.square() - f.f2 * f.f0))
}

/// Rebuilds `X` from the triple product `(X - ζB)(Y - ζB)(Z - ζB)` and the
/// determinant polynomial of `X - ζB` alone:
/// `X' = (f2²K - f2f0M + f1f0B³) · N⁻¹ · B`.
///
/// For generic triples (`det N ≠ 0`) the result equals `X`.
pub fn reconstruct_first_factor<S: Scalar>(
    x: &Mat2<S>,
    y: &Mat2<S>,
    z: &Mat2<S>,
    b: &Mat2<S>,
) -> Result<Mat2<S>> {
    if b.det().is_zero() {
        return Err(Error::SingularB);
    }
    let f = invariants(x, b);
    let (k, _, m) = triple_products(x, y, z, b);
    let n = uniqueness_matrix(x, y, z, b);
    let n_inv = n.inverse().map_err(|_| Error::NonGenericTriple)?;
    let b3 = &(b * b) * b;
    let rhs = k.scale(&f.f2.square()) - m.scale(&(f.f2.clone() * f.f0.clone()))
        + b3.scale(&(f.f1 * f.f0));
    Ok(&(&rhs * &n_inv) * b)
}
