//! Non-quadrirational maps as `ε → 0` limits of quadrirational ones.
//!
//! Two families with `det B(ε) → 0`, both on the leaf `f0 = α`, `f1 = 1`:
//!
//! * `B = diag(1, ε)`, coordinates `(a12, a21)`. Solving for `a11` needs a
//!   square root, so this family runs on the float backend only. Its limit is
//!   the Adler–Yamilov map.
//! * `B = [[ε, 1], [0, ε]]`, coordinates `(a11, a22)`. The limit is a lift of
//!   the KdV quad-graph equation.

use crate::error::{Error, Result};
use crate::leaf::{reduced_map, LeafChart, ParamPoint};
use crate::mat2::Mat2;
use crate::pencil::{pencil_product_equal, MatrixPencil};
use crate::refactor::refactor_pair;
use crate::scalar::{ComplexFloat, GaussianRational, Scalar};

pub type Pair<S> = [S; 2];

/// The `ε`-dependent families.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    /// `B = diag(1, ε)`
    AdlerYamilov,
    /// `B = [[ε, 1], [0, ε]]`
    Kdv,
}

impl Family {
    pub fn leading_term<S: Scalar>(&self, eps: &S) -> Mat2<S> {
        match self {
            Family::AdlerYamilov => Mat2::diag(S::one(), eps.clone()),
            Family::Kdv => Mat2::new(eps.clone(), S::one(), S::zero(), eps.clone()),
        }
    }

    /// Float evaluation near the limit.
    ///
    /// `det B = O(ε)` or `O(ε²)`, so the refactorization loses about
    /// `log10(1/det B)` digits in plain float arithmetic. Inputs are therefore
    /// taken at their exact binary values and the rational part of the map is
    /// evaluated in Gaussian rationals. Only the square roots of the
    /// `diag(1, ε)` chart are taken in floats.
    pub fn eval(
        &self,
        x: &Pair<ComplexFloat>,
        y: &Pair<ComplexFloat>,
        alpha: &ComplexFloat,
        beta: &ComplexFloat,
        eps: f64,
    ) -> Result<(Pair<ComplexFloat>, Pair<ComplexFloat>)> {
        let exact = |z: &ComplexFloat| {
            GaussianRational::from_complex64(z.0)
                .ok_or_else(|| Error::InvalidInput(format!("non-finite value {z}")))
        };
        let exact_pair = |p: &Pair<ComplexFloat>| -> Result<Pair<GaussianRational>> {
            Ok([exact(&p[0])?, exact(&p[1])?])
        };
        let eps_f = ComplexFloat::real(eps);
        let eps_q = exact(&eps_f)?;
        let (u, v) = match self {
            Family::AdlerYamilov => {
                let xm = ay_lax_entries(x, alpha, &eps_f)?;
                let ym = ay_lax_entries(y, beta, &eps_f)?;
                let to_exact = |m: Mat2<ComplexFloat>| -> Result<Mat2<GaussianRational>> {
                    Ok(Mat2::new(
                        exact(&m.a1)?,
                        exact(&m.a2)?,
                        exact(&m.a3)?,
                        exact(&m.a4)?,
                    ))
                };
                let (xm, ym) = (to_exact(xm)?, to_exact(ym)?);
                let (u, v) = refactor_pair(&xm, &ym, &self.leading_term(&eps_q))?;
                ([u.a2, u.a3], [v.a2, v.a3])
            }
            Family::Kdv => kdv_family_map(
                &exact_pair(x)?,
                &exact_pair(y)?,
                &exact(alpha)?,
                &exact(beta)?,
                &eps_q,
            )?,
        };
        let back = |p: Pair<GaussianRational>| p.map(|z| ComplexFloat(z.to_complex()));
        Ok((back(u), back(v)))
    }

    pub fn closed_form<S: Scalar>(
        &self,
        x: &Pair<S>,
        y: &Pair<S>,
        alpha: &S,
        beta: &S,
    ) -> Result<(Pair<S>, Pair<S>)> {
        match self {
            Family::AdlerYamilov => adler_yamilov_map(x, y, alpha, beta),
            Family::Kdv => kdv_lift_map(x, y, alpha, beta),
        }
    }
}

/// `A` on the `diag(1, ε)` leaf with `a12 = p[0]`, `a21 = p[1]`:
///
/// ```text
/// a11 = (1 - √(1 - 4ε(c + a12 a21))) / 2ε,   a22 = (1 + √(1 - 4ε(c + a12 a21))) / 2
/// ```
///
/// `a11` is evaluated as `2w / (1 + √ρ)` with `w = c + a12 a21`, the same
/// branch without the cancellation at small `ε`.
pub fn ay_lax_entries<S: Scalar>(p: &Pair<S>, c: &S, eps: &S) -> Result<Mat2<S>> {
    let w = c.clone() + p[0].clone() * p[1].clone();
    let four = S::from_i64(4);
    let rho = S::one() - four * eps.clone() * w.clone();
    let rc = rho.to_complex();
    if rho.is_zero() || (rc.im == 0.0 && rc.re < 0.0) {
        return Err(Error::BranchCut);
    }
    let root = rho.sqrt()?;
    let two = S::from_i64(2);
    let a11 = (two.clone() * w).checked_div(&(S::one() + root.clone()))?;
    let a22 = (S::one() + root).checked_div(&two)?;
    Ok(Mat2::new(a11, p[0].clone(), p[1].clone(), a22))
}

/// Quadrirational map of the `diag(1, ε)` family (float backend).
pub fn ay_family_map<S: Scalar>(
    x: &Pair<S>,
    y: &Pair<S>,
    alpha: &S,
    beta: &S,
    eps: &S,
) -> Result<(Pair<S>, Pair<S>)> {
    if eps.is_zero() {
        return Err(Error::SingularB);
    }
    let b = Family::AdlerYamilov.leading_term(eps);
    let xm = ay_lax_entries(x, alpha, eps)?;
    let ym = ay_lax_entries(y, beta, eps)?;
    let (u, v) = refactor_pair(&xm, &ym, &b)?;
    Ok(([u.a2, u.a3], [v.a2, v.a3]))
}

/// Quadrirational map of the `[[ε, 1], [0, ε]]` family, through the Jordan
/// chart with levels `(α, 1)`.
pub fn kdv_family_map<S: Scalar>(
    x: &Pair<S>,
    y: &Pair<S>,
    alpha: &S,
    beta: &S,
    eps: &S,
) -> Result<(Pair<S>, Pair<S>)> {
    if eps.is_zero() {
        return Err(Error::SingularB);
    }
    let chart = LeafChart::jordan("kdv-family", eps.clone())?;
    let px = ParamPoint::new(x.to_vec(), vec![alpha.clone(), S::one()]);
    let py = ParamPoint::new(y.to_vec(), vec![beta.clone(), S::one()]);
    let (u, v) = reduced_map::<S, S>(&chart, &px, &py)?;
    Ok((pair(u.coords), pair(v.coords)))
}

fn pair<S: Clone>(v: Vec<S>) -> Pair<S> {
    [v[0].clone(), v[1].clone()]
}

/// `u = (y1 - (α-β)x1/(1 + x1y2), y2)`, `v = (x1, x2 + (α-β)y2/(1 + x1y2))`.
pub fn adler_yamilov_map<S: Scalar>(
    x: &Pair<S>,
    y: &Pair<S>,
    alpha: &S,
    beta: &S,
) -> Result<(Pair<S>, Pair<S>)> {
    let d = S::one() + x[0].clone() * y[1].clone();
    if d.is_zero() {
        return Err(Error::PoleEncountered("1 + x1 y2 = 0"));
    }
    let k = (alpha.clone() - beta.clone()).checked_div(&d)?;
    Ok((
        [y[0].clone() - k.clone() * x[0].clone(), y[1].clone()],
        [x[0].clone(), x[1].clone() + k * y[1].clone()],
    ))
}

/// `u = (y1 + (α-β)/(x1 + y2), y2)`, `v = (x1, x2 - (α-β)/(x1 + y2))`.
pub fn kdv_lift_map<S: Scalar>(
    x: &Pair<S>,
    y: &Pair<S>,
    alpha: &S,
    beta: &S,
) -> Result<(Pair<S>, Pair<S>)> {
    let d = x[0].clone() + y[1].clone();
    if d.is_zero() {
        return Err(Error::PoleEncountered("x1 + y2 = 0"));
    }
    let k = (alpha.clone() - beta.clone()).checked_div(&d)?;
    Ok((
        [y[0].clone() + k.clone(), y[1].clone()],
        [x[0].clone(), x[1].clone() - k],
    ))
}

#[derive(Clone, Debug)]
pub struct LimitReport {
    pub schedule: Vec<f64>,
    /// Max-abs distance between family and closed form, per `ε`.
    pub errors: Vec<f64>,
    /// Least-squares slope of `log error` against `log ε`.
    pub order: Option<f64>,
    pub monotone: bool,
    pub passed: bool,
}

/// Minimum empirical order accepted by [`limit_convergence_check`].
pub const MIN_ORDER: f64 = 0.8;

/// Compares `family(ε)` with `closed_form` along a strictly decreasing
/// schedule. Passes when errors do not increase, the fitted order is at least
/// [`MIN_ORDER`] and the last error is within `tol`. An all-zero error
/// sequence passes outright.
pub fn limit_convergence_check<F>(
    family: F,
    closed_form: &(Pair<ComplexFloat>, Pair<ComplexFloat>),
    schedule: &[f64],
    tol: f64,
) -> Result<LimitReport>
where
    F: Fn(f64) -> Result<(Pair<ComplexFloat>, Pair<ComplexFloat>)>,
{
    if schedule.is_empty()
        || schedule.windows(2).any(|w| w[1] >= w[0])
        || schedule.iter().any(|&e| !e.is_finite() || e <= 0.0)
    {
        return Err(Error::InvalidInput(
            "schedule must be strictly decreasing and positive".into(),
        ));
    }
    let (cu, cv) = closed_form;
    let mut errors = Vec::with_capacity(schedule.len());
    for &eps in schedule {
        let (u, v) = family(eps)?;
        let err = u
            .iter()
            .chain(&v)
            .zip(cu.iter().chain(cv))
            .map(|(a, b)| (a.0 - b.0).norm())
            .fold(0.0, f64::max);
        errors.push(err);
    }
    let monotone = errors.windows(2).all(|w| w[1] <= w[0]);
    let order = if errors.iter().all(|&e| e > 0.0) && errors.len() > 1 {
        let pts: Vec<(f64, f64)> = schedule
            .iter()
            .zip(&errors)
            .map(|(e, r)| (e.ln(), r.ln()))
            .collect();
        let n = pts.len() as f64;
        let mx = pts.iter().map(|p| p.0).sum::<f64>() / n;
        let my = pts.iter().map(|p| p.1).sum::<f64>() / n;
        let sxy: f64 = pts.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
        let sxx: f64 = pts.iter().map(|p| (p.0 - mx).powi(2)).sum();
        Some(sxy / sxx)
    } else {
        None
    };
    let last = *errors.last().expect("non-empty schedule");
    let passed = if errors.iter().all(|&e| e == 0.0) {
        true
    } else {
        monotone && order.is_some_and(|o| o >= MIN_ORDER) && last <= tol
    };
    Ok(LimitReport {
        schedule: schedule.to_vec(),
        errors,
        order,
        monotone,
        passed,
    })
}

/// The KdV quad-graph labelling of one squeezed map application.
#[derive(Clone, Debug, PartialEq)]
pub struct QuadGraphSqueeze<S> {
    pub f: S,
    pub f1: S,
    pub f2: S,
    pub f12: S,
    /// `(f12 - f)(f1 - f2) - (α - β)`
    pub residual: S,
}

/// Applies the lifted KdV map after `x2 ↦ -x2`, `y2 ↦ -y2` (and back on the
/// image). Under `y1 = x2` both `u1` and `v2` equal `f12` in
/// `(f12 - f)(f1 - f2) = α - β`.
pub fn kdv_quadgraph_reduce<S: Scalar>(
    x: &Pair<S>,
    y: &Pair<S>,
    alpha: &S,
    beta: &S,
    tol: f64,
) -> Result<QuadGraphSqueeze<S>> {
    if !y[0].approx_eq(&x[1], tol) {
        return Err(Error::SqueezeViolated);
    }
    let xs = [x[0].clone(), -x[1].clone()];
    let ys = [y[0].clone(), -y[1].clone()];
    let (u, v) = kdv_lift_map(&xs, &ys, alpha, beta)?;
    let (u1, v2) = (u[0].clone(), -v[1].clone());
    if !u1.approx_eq(&v2, tol) {
        return Err(Error::IdentityViolated("u1 = v2 under the squeeze".into()));
    }
    let (f, f1, f2) = (y[0].clone(), x[0].clone(), y[1].clone());
    let residual =
        (u1.clone() - f.clone()) * (f1.clone() - f2.clone()) - (alpha.clone() - beta.clone());
    Ok(QuadGraphSqueeze {
        f,
        f1,
        f2,
        f12: u1,
        residual,
    })
}

/// The `ε → 0` limits of the two families' Lax matrices.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DegenerateLax {
    /// `[[a1a2 + c - ζ, a1], [a2, 1]]`
    L1,
    /// `[[a1, c - a1a2 - ζ], [-1, a2]]`
    L2,
}

impl DegenerateLax {
    pub fn pencil<S: Scalar>(&self, p: &Pair<S>, c: &S) -> MatrixPencil<S> {
        let (a1, a2) = (p[0].clone(), p[1].clone());
        match self {
            DegenerateLax::L1 => MatrixPencil::new(
                Mat2::new(a1.clone() * a2.clone() + c.clone(), a1, a2, S::one()),
                Mat2::new(S::one(), S::zero(), S::zero(), S::zero()),
            ),
            DegenerateLax::L2 => MatrixPencil::new(
                Mat2::new(a1.clone(), c.clone() - a1 * a2.clone(), -S::one(), a2),
                Mat2::new(S::zero(), S::one(), S::zero(), S::zero()),
            ),
        }
    }

    /// `L(u; α) L(v; β) = L(y; β) L(x; α)`.
    pub fn lax_holds<S: Scalar>(
        &self,
        (x, y): (&Pair<S>, &Pair<S>),
        (u, v): (&Pair<S>, &Pair<S>),
        alpha: &S,
        beta: &S,
        tol: f64,
    ) -> bool {
        pencil_product_equal(
            &self.pencil(u, alpha),
            &self.pencil(v, beta),
            &self.pencil(y, beta),
            &self.pencil(x, alpha),
            tol,
        )
    }
}

#[derive(Clone, Debug)]
pub struct DegenerateLaxReport<S> {
    pub image: (Pair<S>, Pair<S>),
    /// The closed-form map satisfies the Lax equation.
    pub map_satisfies: bool,
    /// A second solution of the Lax equation, when the equation admits one.
    pub alternative: Option<(Pair<S>, Pair<S>)>,
    pub alternative_satisfies: bool,
    /// Whether the alternative differs from the image.
    pub distinct: bool,
    /// Whether the plain exchange `(u, v) = (y, x)` solves the equation.
    pub swap_satisfies: bool,
}

/// Checks the Lax equation of the limiting matrices against the closed-form
/// maps (Adler–Yamilov for `L1`, lifted KdV for `L2`).
///
/// For `L2` the solutions form the line `v1 = x1 + t`, `u2 = y2 - t` with `u1`
/// and `v2` as in the lifted KdV map; the witness uses `t = α - β`, which is a
/// different solution exactly when `α ≠ β`.
pub fn degenerate_lax_check<S: Scalar>(
    which: DegenerateLax,
    x: &Pair<S>,
    y: &Pair<S>,
    alpha: &S,
    beta: &S,
    tol: f64,
) -> Result<DegenerateLaxReport<S>> {
    let (u, v) = match which {
        DegenerateLax::L1 => adler_yamilov_map(x, y, alpha, beta)?,
        DegenerateLax::L2 => kdv_lift_map(x, y, alpha, beta)?,
    };
    let map_satisfies = which.lax_holds((x, y), (&u, &v), alpha, beta, tol);
    let swap_satisfies = which.lax_holds((x, y), (y, x), alpha, beta, tol);
    let alternative = match which {
        DegenerateLax::L1 => None,
        DegenerateLax::L2 => {
            let t = alpha.clone() - beta.clone();
            Some((
                [u[0].clone(), u[1].clone() - t.clone()],
                [v[0].clone() + t, v[1].clone()],
            ))
        }
    };
    let (alternative_satisfies, distinct) = match &alternative {
        Some((ua, va)) => {
            let same = ua
                .iter()
                .chain(va)
                .zip(u.iter().chain(&v))
                .all(|(a, b)| a.approx_eq(b, tol));
            (which.lax_holds((x, y), (ua, va), alpha, beta, tol), !same)
        }
        None => (false, false),
    };
    Ok(DegenerateLaxReport {
        image: (u, v),
        map_satisfies,
        alternative,
        alternative_satisfies,
        distinct,
        swap_satisfies,
    })
}
