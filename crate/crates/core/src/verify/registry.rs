//! The maps the verifier knows about.

use std::sync::Arc;

use rand::Rng;

use crate::dense::DenseMatrix;
use crate::error::{Error, Result};
use crate::leaf::catalog_b;
use crate::leaf::{normal_form_catalog, reduced_map, LeafChart, ParamPoint, CATALOG_B_NAMES};
use crate::limits::{adler_yamilov_map, ay_family_map, kdv_family_map, kdv_lift_map, Pair};
use crate::mat2::Mat2;
use crate::refactor::refactor_pair;
use crate::scalar::{Over, Scalar};
use crate::sklyanin::{structure_matrix, BlockFn, PointMap, ProductBracket};

use super::sample::gaussian_ints;

#[derive(Clone, Debug, PartialEq)]
pub enum MapKind<S> {
    /// `R_B` on full 2×2 matrices (four coordinates, no parameters).
    General {
        b: Mat2<S>,
    },
    /// `R_B` read through a chart.
    Reduced {
        chart: LeafChart<S>,
    },
    AdlerYamilov,
    KdvLift,
    /// `(u, v) = (y, x)` on points of the given dimension.
    Trivial {
        dim: usize,
    },
    /// `B = diag(1, ε)` family; needs square roots.
    AyFamily {
        eps: S,
    },
    /// `B = [[ε, 1], [0, ε]]` family.
    KdvFamily {
        eps: S,
    },
}

#[derive(Clone, Debug, PartialEq)]
pub struct RegisteredMap<S> {
    pub name: String,
    pub kind: MapKind<S>,
    /// Names of the suites that exercise this map.
    pub suites: Vec<String>,
}

fn as_pair<T: Clone>(v: &[T]) -> Result<Pair<T>> {
    match v {
        [a, b] => Ok([a.clone(), b.clone()]),
        _ => Err(Error::InvalidInput(format!(
            "expected 2 coordinates, got {}",
            v.len()
        ))),
    }
}

fn as_mat<T: Scalar>(v: &[T]) -> Result<Mat2<T>> {
    match v {
        [a, b, c, d] => Ok(Mat2::new(a.clone(), b.clone(), c.clone(), d.clone())),
        _ => Err(Error::InvalidInput(format!(
            "expected 4 coordinates, got {}",
            v.len()
        ))),
    }
}

fn one_param<T: Clone>(p: &ParamPoint<T>) -> Result<T> {
    match p.params.as_slice() {
        [a] => Ok(a.clone()),
        _ => Err(Error::InvalidInput(format!(
            "expected 1 parameter, got {}",
            p.params.len()
        ))),
    }
}

impl<S: Scalar> RegisteredMap<S> {
    pub fn new(name: impl Into<String>, kind: MapKind<S>) -> Self {
        Self {
            name: name.into(),
            kind,
            suites: Vec::new(),
        }
    }

    pub fn with_suites(mut self, suites: &[&str]) -> Self {
        self.suites = suites.iter().map(|s| s.to_string()).collect();
        self
    }

    pub fn coord_dim(&self) -> usize {
        match &self.kind {
            MapKind::General { .. } => 4,
            MapKind::Reduced { chart } => chart.coord_dim(),
            MapKind::Trivial { dim } => *dim,
            _ => 2,
        }
    }

    pub fn param_dim(&self) -> usize {
        match &self.kind {
            MapKind::General { .. } | MapKind::Trivial { .. } => 0,
            MapKind::Reduced { chart } => chart.param_dim(),
            _ => 1,
        }
    }

    pub fn supports_exact(&self) -> bool {
        !matches!(self.kind, MapKind::AyFamily { .. })
    }

    pub fn supports_float(&self) -> bool {
        true
    }

    fn check_shape<T>(&self, p: &ParamPoint<T>) -> Result<()> {
        if p.coords.len() != self.coord_dim() || p.params.len() != self.param_dim() {
            return Err(Error::InvalidInput(format!(
                "{} takes {} coordinates and {} parameters, got {} and {}",
                self.name,
                self.coord_dim(),
                self.param_dim(),
                p.coords.len(),
                p.params.len()
            )));
        }
        Ok(())
    }

    /// `(u, v) = R(x, y)`; `u` carries `x`'s parameters and `v` carries `y`'s.
    pub fn apply<T: Over<S>>(
        &self,
        x: &ParamPoint<T>,
        y: &ParamPoint<T>,
    ) -> Result<(ParamPoint<T>, ParamPoint<T>)> {
        self.check_shape(x)?;
        self.check_shape(y)?;
        let wrap = |(u, v): (Pair<T>, Pair<T>)| {
            (
                ParamPoint::new(u.to_vec(), x.params.clone()),
                ParamPoint::new(v.to_vec(), y.params.clone()),
            )
        };
        match &self.kind {
            MapKind::General { b } => {
                let (u, v) = refactor_pair(&as_mat(&x.coords)?, &as_mat(&y.coords)?, &b.lift())?;
                Ok((
                    ParamPoint::new(u.entries().to_vec(), Vec::new()),
                    ParamPoint::new(v.entries().to_vec(), Vec::new()),
                ))
            }
            MapKind::Reduced { chart } => reduced_map(chart, x, y),
            MapKind::Trivial { .. } => Ok((y.clone(), x.clone())),
            MapKind::AdlerYamilov => adler_yamilov_map(
                &as_pair(&x.coords)?,
                &as_pair(&y.coords)?,
                &one_param(x)?,
                &one_param(y)?,
            )
            .map(wrap),
            MapKind::KdvLift => kdv_lift_map(
                &as_pair(&x.coords)?,
                &as_pair(&y.coords)?,
                &one_param(x)?,
                &one_param(y)?,
            )
            .map(wrap),
            MapKind::AyFamily { eps } => ay_family_map(
                &as_pair(&x.coords)?,
                &as_pair(&y.coords)?,
                &one_param(x)?,
                &one_param(y)?,
                &T::lift(eps),
            )
            .map(wrap),
            MapKind::KdvFamily { eps } => kdv_family_map(
                &as_pair(&x.coords)?,
                &as_pair(&y.coords)?,
                &one_param(x)?,
                &one_param(y)?,
                &T::lift(eps),
            )
            .map(wrap),
        }
    }

    /// A random point with Gaussian-integer coordinates and parameters, in
    /// the chart's domain for reduced maps.
    pub fn sample_point(&self, rng: &mut impl Rng) -> Result<ParamPoint<S>> {
        super::sample::sample_until(rng, |r| {
            let p = ParamPoint::new(
                gaussian_ints(r, self.coord_dim()),
                gaussian_ints(r, self.param_dim()),
            );
            if let MapKind::Reduced { chart } = &self.kind {
                if !chart.contains(&p) {
                    return Err(Error::ChartSingular(chart.name().to_string()));
                }
            }
            Ok(p)
        })
    }

    /// The bracket block of one factor with the given parameters, when the
    /// map is known to be Poisson for it.
    pub fn bracket_block(&self, params: &[S]) -> Option<BlockFn<S>> {
        let params = params.to_vec();
        match &self.kind {
            MapKind::General { b } => {
                let b = b.clone();
                Some(Arc::new(move |c: &[S]| {
                    Ok(structure_matrix(&as_mat(c)?, &b))
                }))
            }
            MapKind::Reduced { chart } => Some(chart_block(chart.clone(), params)),
            MapKind::KdvFamily { eps } => Some(chart_block(
                LeafChart::jordan("kdv-family", eps.clone()).ok()?,
                vec![params.first()?.clone(), S::one()],
            )),
            MapKind::AdlerYamilov => Some(constant_block(S::one())),
            MapKind::KdvLift => Some(constant_block(-S::one())),
            MapKind::Trivial { .. } | MapKind::AyFamily { .. } => None,
        }
    }

    /// The product bracket on `(x, y)`; it is also the bracket on `(u, v)`
    /// because each image factor keeps its parameters.
    pub fn product_bracket(&self, x_params: &[S], y_params: &[S]) -> Option<ProductBracket<S>> {
        let d = self.coord_dim();
        Some(ProductBracket::new(vec![
            (d, self.bracket_block(x_params)?),
            (d, self.bracket_block(y_params)?),
        ]))
    }
}

fn chart_block<S: Scalar>(chart: LeafChart<S>, params: Vec<S>) -> BlockFn<S> {
    Arc::new(move |c: &[S]| chart.reduced_bracket(&ParamPoint::new(c.to_vec(), params.clone())))
}

fn constant_block<S: Scalar>(c: S) -> BlockFn<S> {
    Arc::new(move |_: &[S]| {
        let mut m = DenseMatrix::zeros(2, 2);
        m[(0, 1)] = c.clone();
        m[(1, 0)] = -c.clone();
        Ok(m)
    })
}

/// A map on concatenated coordinates `(x, y)` with parameters held fixed.
pub struct FlatMap<'a, S> {
    pub map: &'a RegisteredMap<S>,
    pub x_params: Vec<S>,
    pub y_params: Vec<S>,
}

impl<S: Scalar> PointMap<S> for FlatMap<'_, S> {
    fn dim(&self) -> usize {
        2 * self.map.coord_dim()
    }

    fn eval<T: Over<S>>(&self, p: &[T]) -> Result<Vec<T>> {
        let d = self.map.coord_dim();
        let lift = |v: &[S]| v.iter().map(T::lift).collect::<Vec<T>>();
        let x = ParamPoint::new(p[..d].to_vec(), lift(&self.x_params));
        let y = ParamPoint::new(p[d..].to_vec(), lift(&self.y_params));
        let (u, v) = self.map.apply(&x, &y)?;
        Ok(u.coords.into_iter().chain(v.coords).collect())
    }
}

/// General map over a catalogued `B`, e.g. `general-identity-B`.
pub fn general_map_name(b_name: &str) -> String {
    format!("general-{b_name}-B")
}

/// Every registered map, with `ε = 1/100` for the two families.
pub fn registry<S: Scalar>() -> Vec<RegisteredMap<S>> {
    let mut out = Vec::new();
    for name in CATALOG_B_NAMES {
        let b = catalog_b(name).expect("catalogued");
        out.push(
            RegisteredMap::new(general_map_name(name), MapKind::General { b }).with_suites(&[
                &format!("refactor/{name}-B"),
                &format!("roundtrip/{name}-B"),
                &format!("uniqueness/{name}-B"),
                &format!("yb-cube/general-{name}-B"),
                "poisson/general",
                "poisson-fd/general",
            ]),
        );
    }
    for chart in normal_form_catalog()
        .into_iter()
        .filter(|c| c.is_two_casimir())
    {
        let cube = format!("yb-cube/reduced-{}", chart.name());
        let poisson = format!("poisson/reduced-{}", chart.name());
        let name = format!("reduced-{}", chart.name());
        out.push(
            RegisteredMap::new(name, MapKind::Reduced { chart }).with_suites(&[&cube, &poisson]),
        );
    }
    for chart in normal_form_catalog()
        .into_iter()
        .filter(|c| !c.is_two_casimir())
    {
        let name = format!("reduced-{}", chart.name());
        out.push(RegisteredMap::new(name, MapKind::Reduced { chart }));
    }
    out.push(
        RegisteredMap::new("adler-yamilov", MapKind::AdlerYamilov).with_suites(&[
            "yb-cube/adler-yamilov",
            "poisson/adler-yamilov",
            "poisson-fd/adler-yamilov",
            "degenerate-lax",
        ]),
    );
    out.push(
        RegisteredMap::new("kdv-lift", MapKind::KdvLift).with_suites(&[
            "yb-cube/kdv-lift",
            "poisson/kdv-lift",
            "poisson-fd/kdv-lift",
            "kdv-squeeze",
            "degenerate-lax",
        ]),
    );
    out.push(
        RegisteredMap::new("trivial", MapKind::Trivial { dim: 4 })
            .with_suites(&["yb-cube/trivial"]),
    );
    let eps = S::from_i64(1)
        .checked_div(&S::from_i64(100))
        .expect("nonzero");
    out.push(
        RegisteredMap::new("ay-family", MapKind::AyFamily { eps: eps.clone() })
            .with_suites(&["limits/ay"]),
    );
    out.push(
        RegisteredMap::new("kdv-family", MapKind::KdvFamily { eps })
            .with_suites(&["limits/kdv", "poisson/kdv-family"]),
    );
    out
}

pub fn find_map<S: Scalar>(name: &str) -> Result<RegisteredMap<S>> {
    registry()
        .into_iter()
        .find(|m| m.name == name)
        .ok_or_else(|| Error::UnknownMap(name.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::GaussianRational;
    use crate::sklyanin::poisson_map_check;

    type Q = GaussianRational;

    fn q(n: i64) -> Q {
        Q::from_i64(n)
    }

    fn pt(c: &[i64], p: &[i64]) -> ParamPoint<Q> {
        ParamPoint::new(
            c.iter().map(|&n| q(n)).collect(),
            p.iter().map(|&n| q(n)).collect(),
        )
    }

    #[test]
    fn worked_examples_through_registry() {
        let ay = find_map::<Q>("adler-yamilov").unwrap();
        let (u, v) = ay.apply(&pt(&[1, 1], &[3]), &pt(&[1, 1], &[1])).unwrap();
        assert_eq!(u, pt(&[0, 1], &[3]));
        assert_eq!(v, pt(&[1, 2], &[1]));

        let g = find_map::<Q>("general-identity-B").unwrap();
        let (u, v) = g
            .apply(&pt(&[2, 1, 1, 1], &[]), &pt(&[1, 0, 0, 2], &[]))
            .unwrap();
        assert_eq!(u, pt(&[1, 1, 1, 2], &[]));
        assert_eq!(v, pt(&[2, 0, 0, 1], &[]));
    }

    #[test]
    fn shape_mismatch_is_reported() {
        let ay = find_map::<Q>("adler-yamilov").unwrap();
        assert!(matches!(
            ay.apply(&pt(&[1], &[3]), &pt(&[1, 1], &[1])),
            Err(Error::InvalidInput(_))
        ));
        assert!(matches!(find_map::<Q>("nope"), Err(Error::UnknownMap(_))));
    }

    #[test]
    fn names_are_unique_and_suites_declared() {
        let maps = registry::<Q>();
        let mut names: Vec<_> = maps.iter().map(|m| m.name.clone()).collect();
        names.sort();
        names.dedup();
        assert_eq!(names.len(), maps.len());
        for m in maps
            .iter()
            .filter(|m| !m.name.starts_with("reduced-identity-f"))
        {
            assert!(!m.suites.is_empty(), "{} declares no suites", m.name);
        }
    }

    #[test]
    fn kdv_family_bracket_matches_closed_form() {
        // {x1, x2} = -1 + ε(x1 + x2)
        let m = find_map::<Q>("kdv-family").unwrap();
        let eps = Q::from_ratio(1, 100);
        let block = m.bracket_block(&[q(2)]).unwrap();
        let j = block(&[q(3), q(-1)]).unwrap();
        assert_eq!(j[(0, 1)], -q(1) + eps * q(2));
        assert_eq!(j[(1, 0)], -j[(0, 1)].clone());
    }

    #[test]
    fn kdv_family_is_poisson() {
        let m = find_map::<Q>("kdv-family").unwrap();
        let (x, y) = (pt(&[1, 2], &[3]), pt(&[0, 1], &[1]));
        let flat = FlatMap {
            map: &m,
            x_params: x.params.clone(),
            y_params: y.params.clone(),
        };
        let br = m.product_bracket(&x.params, &y.params).unwrap();
        let p: Vec<Q> = x.coords.iter().chain(&y.coords).cloned().collect();
        assert!(poisson_map_check(&flat, &br, &br, &p, 0.0).unwrap());
    }
}
