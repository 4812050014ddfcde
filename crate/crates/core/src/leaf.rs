//! Casimir level sets, their charts, and the reduced parametric maps.
//!
//! A chart fixes `B`, picks one or two *pivot* entries of `A`, and solves the
//! level equations `f0(A) = c1` and/or `f1(A) = c2` for them. The remaining
//! entries are the chart coordinates and the level values ride along as the
//! parameters of a parametric Yang–Baxter map:
//!
//! * one-Casimir charts give Poisson maps on `C³ × C³`,
//! * two-Casimir charts give symplectic maps on `C² × C²`.
//!
//! All charts here are rational in the coordinates: `f0` is affine in each
//! entry and in any pair of entries not sharing a determinant term, and `f1`
//! is affine in everything. Pivot pairs on a determinant diagonal are accepted
//! only when `f1` does not involve one of them.
//!
//! A chart may carry a conjugation frame `P`: its leading term is then
//! `P B0 P⁻¹` and coordinates are read off `P⁻¹ A P`.

use crate::dense::DenseMatrix;
use crate::error::{Error, Result};
use crate::mat2::Mat2;
use crate::pencil::{invariants, pencil_product_equal, MatrixPencil};
use crate::refactor::refactor_pair;
use crate::scalar::{Over, Scalar};
use crate::sklyanin::{grad_f1, structure_matrix};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Casimir {
    /// `f0 = det A`
    F0,
    /// `f1 = a1b4 + a4b1 - a3b2 - a2b3`
    F1,
}

#[derive(Clone, Debug, PartialEq)]
pub enum ChartKind<S> {
    /// One level equation, one pivot; three coordinates, one parameter.
    Level { casimir: Casimir, pivot: usize },
    /// Both level equations. With `fixed_f0` set the `f0` level is pinned and
    /// only the `f1` level is a parameter.
    Leaf {
        pivots: [usize; 2],
        fixed_f0: Option<S>,
    },
}

/// A point of a reduced map: chart coordinates plus level values.
#[derive(Clone, Debug, PartialEq)]
pub struct ParamPoint<S> {
    pub coords: Vec<S>,
    pub params: Vec<S>,
}

impl<S: Scalar> ParamPoint<S> {
    pub fn new(coords: Vec<S>, params: Vec<S>) -> Self {
        Self { coords, params }
    }

    pub fn approx_eq(&self, other: &Self, tol: f64) -> bool {
        let close = |a: &[S], b: &[S]| {
            a.len() == b.len() && a.iter().zip(b).all(|(x, y)| x.approx_eq(y, tol))
        };
        close(&self.coords, &other.coords) && close(&self.params, &other.params)
    }

    pub fn lift<T: Over<S>>(&self) -> ParamPoint<T> {
        ParamPoint {
            coords: self.coords.iter().map(T::lift).collect(),
            params: self.params.iter().map(T::lift).collect(),
        }
    }
}

/// Index of the other entry in the same determinant term.
fn partner(k: usize) -> usize {
    3 - k
}

/// `∂ det A / ∂ a_k`.
fn cofactor<T: Scalar>(a: &Mat2<T>, k: usize) -> T {
    match k {
        0 => a.a4.clone(),
        1 => -a.a3.clone(),
        2 => -a.a2.clone(),
        _ => a.a1.clone(),
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct LeafChart<S> {
    name: String,
    /// Leading term `B = P B0 P⁻¹`.
    b: Mat2<S>,
    /// Leading term in the chart's own frame.
    base_b: Mat2<S>,
    /// `(P, P⁻¹)` when transported.
    frame: Option<(Mat2<S>, Mat2<S>)>,
    kind: ChartKind<S>,
}

impl<S: Scalar> LeafChart<S> {
    /// One-Casimir chart solving `casimir = c` for `pivot` (zero-based entry index).
    pub fn level(name: &str, b: Mat2<S>, casimir: Casimir, pivot: usize) -> Result<Self> {
        if pivot > 3 {
            return Err(Error::UnsupportedChart(format!("pivot index {pivot}")));
        }
        if casimir == Casimir::F1 && grad_f1(&b)[pivot].is_zero() {
            return Err(Error::UnsupportedChart(format!(
                "f1 does not depend on entry a{} for this B",
                pivot + 1
            )));
        }
        Ok(Self {
            name: name.to_string(),
            base_b: b.clone(),
            b,
            frame: None,
            kind: ChartKind::Level { casimir, pivot },
        })
    }

    /// Two-Casimir chart solving `f0 = c1`, `f1 = c2` for the two pivots.
    pub fn leaf(name: &str, b: Mat2<S>, pivots: [usize; 2]) -> Result<Self> {
        Self::leaf_with(name, b, pivots, None)
    }

    fn leaf_with(name: &str, b: Mat2<S>, pivots: [usize; 2], fixed_f0: Option<S>) -> Result<Self> {
        let [p, q] = pivots;
        if p > 3 || q > 3 || p == q {
            return Err(Error::UnsupportedChart(format!("pivots {pivots:?}")));
        }
        let mut pivots = pivots;
        if q == partner(p) {
            // Solve f1 for one pivot first; that needs f1 to miss the other.
            let g = grad_f1(&b);
            match (g[p].is_zero(), g[q].is_zero()) {
                (false, true) => {}
                (true, false) => pivots = [q, p],
                (false, false) => {
                    return Err(Error::UnsupportedChart(
                        "pivot pair needs a square root to resolve".into(),
                    ))
                }
                (true, true) => {
                    return Err(Error::UnsupportedChart(
                        "f1 is independent of both pivots".into(),
                    ))
                }
            }
        }
        Ok(Self {
            name: name.to_string(),
            base_b: b.clone(),
            b,
            frame: None,
            kind: ChartKind::Leaf { pivots, fixed_f0 },
        })
    }

    /// `B = λI`, pivots `a3, a4`.
    pub fn scalar(name: &str, lambda: S) -> Result<Self> {
        Self::leaf(name, Mat2::scalar(lambda), [2, 3])
    }

    /// `B = diag(λ1, λ2)`, pivots `a3, a4`.
    pub fn diag(name: &str, l1: S, l2: S) -> Result<Self> {
        Self::leaf(name, Mat2::diag(l1, l2), [2, 3])
    }

    /// `B = [[λ, 1], [0, λ]]`, pivots `a3, a2`; coordinates `(a1, a4)`.
    pub fn jordan(name: &str, lambda: S) -> Result<Self> {
        Self::leaf(
            name,
            Mat2::new(lambda.clone(), S::one(), S::zero(), lambda),
            [2, 1],
        )
    }

    /// `B = [[λ1, -λ2], [λ2, λ1]]`, pivots `a3, a4`.
    pub fn rotation(name: &str, l1: S, l2: S) -> Result<Self> {
        Self::leaf(name, Mat2::new(l1.clone(), -l2.clone(), l2, l1), [2, 3])
    }

    /// `B = I` restricted to `det A = 1`; the single parameter is the trace.
    pub fn sl2(name: &str) -> Result<Self> {
        Self::leaf_with(name, Mat2::identity(), [2, 3], Some(S::one()))
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn b(&self) -> &Mat2<S> {
        &self.b
    }

    pub fn kind(&self) -> &ChartKind<S> {
        &self.kind
    }

    pub fn is_two_casimir(&self) -> bool {
        matches!(self.kind, ChartKind::Leaf { .. })
    }

    pub fn pivots(&self) -> Vec<usize> {
        match &self.kind {
            ChartKind::Level { pivot, .. } => vec![*pivot],
            ChartKind::Leaf { pivots, .. } => pivots.to_vec(),
        }
    }

    /// Entry indices (zero-based, increasing) used as coordinates.
    pub fn coord_indices(&self) -> Vec<usize> {
        let piv = self.pivots();
        (0..4).filter(|k| !piv.contains(k)).collect()
    }

    pub fn coord_dim(&self) -> usize {
        self.coord_indices().len()
    }

    pub fn param_dim(&self) -> usize {
        match &self.kind {
            ChartKind::Level { .. } => 1,
            ChartKind::Leaf {
                fixed_f0: Some(_), ..
            } => 1,
            ChartKind::Leaf { fixed_f0: None, .. } => 2,
        }
    }

    /// Level values `(f0, f1)` a parameter vector prescribes; `None` when free.
    pub fn levels<T: Over<S>>(&self, params: &[T]) -> Result<(Option<T>, Option<T>)> {
        if params.len() != self.param_dim() {
            return Err(Error::InvalidInput(format!(
                "chart {} takes {} parameters, got {}",
                self.name,
                self.param_dim(),
                params.len()
            )));
        }
        Ok(match &self.kind {
            ChartKind::Level {
                casimir: Casimir::F0,
                ..
            } => (Some(params[0].clone()), None),
            ChartKind::Level {
                casimir: Casimir::F1,
                ..
            } => (None, Some(params[0].clone())),
            ChartKind::Leaf {
                fixed_f0: Some(c), ..
            } => (Some(T::lift(c)), Some(params[0].clone())),
            ChartKind::Leaf { fixed_f0: None, .. } => {
                (Some(params[0].clone()), Some(params[1].clone()))
            }
        })
    }

    /// Solve for the pivots in the chart's own frame.
    fn resolve<T: Over<S>>(&self, coords: &[T], params: &[T]) -> Result<Mat2<T>> {
        let idx = self.coord_indices();
        if coords.len() != idx.len() {
            return Err(Error::InvalidInput(format!(
                "chart {} takes {} coordinates, got {}",
                self.name,
                idx.len(),
                coords.len()
            )));
        }
        let (c0, c1) = self.levels(params)?;
        let mut a = Mat2::<T>::zero();
        for (k, x) in idx.iter().zip(coords) {
            *a.entry_mut(*k) = x.clone();
        }
        let g: [T; 4] = grad_f1(&self.base_b).map(|x| T::lift(&x));
        let singular = || Error::ChartSingular(self.name.clone());
        // f1 of `a` with the unknown entries still zero
        let f1_rest = |a: &Mat2<T>| crate::pencil::f1(a, &self.base_b.lift());
        let solve_f0 = |a: &mut Mat2<T>, k: usize, c: T| -> Result<()> {
            let cof = cofactor(a, k);
            let rest = a.det();
            *a.entry_mut(k) = (c - rest).checked_div(&cof).map_err(|_| singular())?;
            Ok(())
        };
        match &self.kind {
            ChartKind::Level {
                casimir: Casimir::F0,
                pivot,
            } => {
                solve_f0(&mut a, *pivot, c0.expect("f0 level"))?;
            }
            ChartKind::Level {
                casimir: Casimir::F1,
                pivot,
            } => {
                let rest = f1_rest(&a);
                *a.entry_mut(*pivot) = (c1.expect("f1 level") - rest)
                    .checked_div(&g[*pivot])
                    .map_err(|_| singular())?;
            }
            ChartKind::Leaf { pivots: [p, q], .. } => {
                let (c0, c1) = (c0.expect("f0 level"), c1.expect("f1 level"));
                let rhs1 = c1 - f1_rest(&a);
                if *q == partner(*p) {
                    // f1 misses q: solve it for p, then f0 for q
                    *a.entry_mut(*p) = rhs1.checked_div(&g[*p]).map_err(|_| singular())?;
                    solve_f0(&mut a, *q, c0)?;
                } else {
                    let (cp, cq) = (cofactor(&a, *p), cofactor(&a, *q));
                    let (gp, gq) = (g[*p].clone(), g[*q].clone());
                    let det = cp.clone() * gq.clone() - cq.clone() * gp.clone();
                    let det_inv = det.inv().map_err(|_| singular())?;
                    let xp = (c0.clone() * gq - cq * rhs1.clone()) * det_inv.clone();
                    let xq = (cp * rhs1 - gp * c0) * det_inv;
                    *a.entry_mut(*p) = xp;
                    *a.entry_mut(*q) = xq;
                }
            }
        }
        Ok(a)
    }

    /// Matrix `A` on the level set with the given coordinates.
    pub fn embed<T: Over<S>>(&self, p: &ParamPoint<T>) -> Result<Mat2<T>> {
        let a0 = self.resolve(&p.coords, &p.params)?;
        match &self.frame {
            None => Ok(a0),
            Some((pm, pm_inv)) => Ok(&(&pm.lift() * &a0) * &pm_inv.lift()),
        }
    }

    /// Coordinates of `A` (in the chart frame).
    pub fn project<T: Over<S>>(&self, a: &Mat2<T>) -> Vec<T> {
        let a0 = self.to_frame(a);
        self.coord_indices()
            .into_iter()
            .map(|k| a0.entry(k).clone())
            .collect()
    }

    fn to_frame<T: Over<S>>(&self, a: &Mat2<T>) -> Mat2<T> {
        match &self.frame {
            None => a.clone(),
            Some((pm, pm_inv)) => &(&pm_inv.lift() * a) * &pm.lift(),
        }
    }

    /// Lax matrix `L(x; α) = embed(x) - ζB` as a pencil.
    pub fn lax_pencil<T: Over<S>>(&self, p: &ParamPoint<T>) -> Result<MatrixPencil<T>> {
        Ok(MatrixPencil::new(self.embed(p)?, self.b.lift()))
    }

    /// `det ∂(f0, f1)/∂(pivots)` at `a` (two-Casimir charts), or the single
    /// partial derivative for one-Casimir charts.
    pub fn pivot_jacobian<T: Over<S>>(&self, a: &Mat2<T>) -> T {
        let a0 = self.to_frame(a);
        let g: [T; 4] = grad_f1(&self.base_b).map(|x| T::lift(&x));
        match &self.kind {
            ChartKind::Level {
                casimir: Casimir::F0,
                pivot,
            } => cofactor(&a0, *pivot),
            ChartKind::Level {
                casimir: Casimir::F1,
                pivot,
            } => g[*pivot].clone(),
            ChartKind::Leaf { pivots: [p, q], .. } => {
                cofactor(&a0, *p) * g[*q].clone() - cofactor(&a0, *q) * g[*p].clone()
            }
        }
    }

    /// Reduced bracket on the chart coordinates of one factor: the
    /// restriction of `J_B0` to the coordinate entries at the embedded point.
    pub fn reduced_bracket(&self, p: &ParamPoint<S>) -> Result<DenseMatrix<S>> {
        let a0 = self.resolve(&p.coords, &p.params)?;
        Ok(structure_matrix(&a0, &self.base_b).restrict(&self.coord_indices()))
    }

    /// Chart over `P B P⁻¹` with Lax matrix `P L P⁻¹`.
    pub fn conjugate_transport(&self, p: &Mat2<S>) -> Result<Self> {
        let p_inv = p.inverse()?;
        let frame = match &self.frame {
            None => (p.clone(), p_inv),
            Some((q, q_inv)) => (p * q, q_inv * &p_inv),
        };
        Ok(Self {
            name: format!("{}@conj", self.name),
            b: Mat2::conjugate(p, &self.b)?,
            base_b: self.base_b.clone(),
            frame: Some(frame),
            kind: self.kind.clone(),
        })
    }

    /// Whether `p` lies in the chart's domain (the pivot solve is nonsingular).
    pub fn contains<T: Over<S>>(&self, p: &ParamPoint<T>) -> bool {
        self.resolve(&p.coords, &p.params).is_ok()
    }
}

/// `(u, v) = project(R_B(embed(x), embed(y)))`; `u` keeps `x`'s parameters and
/// `v` keeps `y`'s.
pub fn reduced_map<S: Scalar, T: Over<S>>(
    chart: &LeafChart<S>,
    x: &ParamPoint<T>,
    y: &ParamPoint<T>,
) -> Result<(ParamPoint<T>, ParamPoint<T>)> {
    let xm = chart.embed(x)?;
    let ym = chart.embed(y)?;
    let (um, vm) = refactor_pair(&xm, &ym, &chart.b.lift())?;
    let u = ParamPoint::new(chart.project(&um), x.params.clone());
    let v = ParamPoint::new(chart.project(&vm), y.params.clone());
    if !chart.contains(&u) || !chart.contains(&v) {
        return Err(Error::ChartSingular(format!("{} (image)", chart.name)));
    }
    Ok((u, v))
}

/// Whether `L(u; α) L(v; β) = L(y; β) L(x; α)` holds as a polynomial in `ζ`.
pub fn lax_identity_holds<S: Scalar, T: Over<S>>(
    chart: &LeafChart<S>,
    x: &ParamPoint<T>,
    y: &ParamPoint<T>,
    u: &ParamPoint<T>,
    v: &ParamPoint<T>,
    tol: f64,
) -> Result<bool> {
    Ok(pencil_product_equal(
        &chart.lax_pencil(u)?,
        &chart.lax_pencil(v)?,
        &chart.lax_pencil(y)?,
        &chart.lax_pencil(x)?,
        tol,
    ))
}

/// The unique solution of the Lax equation with the invariants of each factor
/// fixed; identical to [`reduced_map`], re-verified against the Lax identity.
pub fn solve_lax_equation<S: Scalar, T: Over<S>>(
    chart: &LeafChart<S>,
    x: &ParamPoint<T>,
    y: &ParamPoint<T>,
    tol: f64,
) -> Result<(ParamPoint<T>, ParamPoint<T>)> {
    let (u, v) = reduced_map(chart, x, y)?;
    if !lax_identity_holds(chart, x, y, &u, &v, tol)? {
        return Err(Error::IdentityViolated(format!(
            "Lax equation on chart {}",
            chart.name
        )));
    }
    Ok((u, v))
}

/// Whether an embedded factor sits on the level set its parameters prescribe.
pub fn on_level_set<S: Scalar, T: Over<S>>(
    chart: &LeafChart<S>,
    p: &ParamPoint<T>,
    tol: f64,
) -> Result<bool> {
    let a = chart.embed(p)?;
    let f = invariants(&a, &chart.b.lift());
    let (c0, c1) = chart.levels(&p.params)?;
    Ok(c0.is_none_or(|c| f.f0.approx_eq(&c, tol)) && c1.is_none_or(|c| f.f1.approx_eq(&c, tol)))
}

/// Names of the catalogued leading terms, in catalog order.
pub const CATALOG_B_NAMES: [&str; 4] = ["identity", "diag", "jordan", "rotation"];

/// The catalogued leading terms: `I`, `diag(1, 2)`, `[[1, 1], [0, 1]]`,
/// `[[1, -1], [1, 1]]`.
pub fn catalog_b<S: Scalar>(name: &str) -> Option<Mat2<S>> {
    Some(match name {
        "identity" => Mat2::identity(),
        "diag" => Mat2::from_i64([[1, 0], [0, 2]]),
        "jordan" => Mat2::from_i64([[1, 1], [0, 1]]),
        "rotation" => Mat2::from_i64([[1, -1], [1, 1]]),
        _ => return None,
    })
}

/// Charts for each normal form of `B` plus the `SL2` restriction and two
/// one-Casimir charts over `B = I`.
pub fn normal_form_catalog<S: Scalar>() -> Vec<LeafChart<S>> {
    let n = S::from_i64;
    vec![
        LeafChart::scalar("identity", n(1)),
        LeafChart::diag("diag", n(1), n(2)),
        LeafChart::jordan("jordan", n(1)),
        LeafChart::rotation("rotation", n(1), n(1)),
        LeafChart::sl2("sl2"),
        LeafChart::level("identity-f0", Mat2::identity(), Casimir::F0, 3),
        LeafChart::level("identity-f1", Mat2::identity(), Casimir::F1, 3),
    ]
    .into_iter()
    .map(|c| c.expect("catalog charts are valid"))
    .collect()
}

pub fn catalog_chart<S: Scalar>(name: &str) -> Option<LeafChart<S>> {
    normal_form_catalog().into_iter().find(|c| c.name == name)
}
