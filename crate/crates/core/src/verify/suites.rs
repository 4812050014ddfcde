//! Named verification suites.
//!
//! A suite runs a fixed number of trials. Each trial draws its own inputs and
//! ends as a pass, a rejection (input outside the map's domain) or a failure
//! carrying a counterexample.

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use rayon::prelude::*;
use serde_json::{json, Value};

use crate::dense::DenseMatrix;
use crate::error::{Error, Result};
use crate::json::{mat_to_json, point_to_json, scalar_to_json, scalars_to_json};
use crate::leaf::{catalog_b, normal_form_catalog, ParamPoint, CATALOG_B_NAMES};
use crate::limits::{
    degenerate_lax_check, kdv_quadgraph_reduce, limit_convergence_check, DegenerateLax, Family,
};
use crate::mat2::Mat2;
use crate::refactor::{inverse_refactor, reconstruct_first_factor, refactor, refactor_pair};
use crate::scalar::{ComplexFloat, GaussianRational, Scalar};
use crate::sklyanin::{
    casimir_check, jacobi_check, poisson_map_compare, structure_matrix, LieStructure, PointMap,
};

use super::cube::yb_cube_sides;
use super::registry::{find_map, general_map_name, FlatMap, RegisteredMap};
use super::report::{Failure, TrialCounts, VerificationReport, SCHEMA_VERSION};
use super::sample::{
    gaussian_int, gaussian_mat, invertible_mat, sample_pair, sample_triple, sample_until,
    suite_seed, trial_rng, uniform, TrialRng,
};

/// Tolerance of the finite-difference cross-check, relative to the largest
/// entry of the target bracket matrix.
pub const FD_TOL: f64 = 1e-6;
/// Relative step of the central differences, about the cube root of the
/// float epsilon.
pub const FD_STEP: f64 = 1e-5;
/// Final-error bound of the limit suites.
pub const LIMIT_TOL: f64 = 1e-6;
/// `ε` schedule of the limit suites.
pub const LIMIT_SCHEDULE: [f64; 5] = [1e-3, 1e-4, 1e-5, 1e-6, 1e-7];
/// Random conjugates of each catalogued `B` in the refactor suites.
pub const CONJUGATES: usize = 3;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Field {
    GaussianRational,
    Complex64,
}

impl Field {
    pub fn name(&self) -> &'static str {
        match self {
            Field::GaussianRational => "gaussian-rational",
            Field::Complex64 => "complex64",
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Field {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "gaussian-rational" => Ok(Field::GaussianRational),
            "complex64" => Ok(Field::Complex64),
            _ => Err(Error::Parse(format!("unknown field {s}"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct SuiteConfig {
    pub seed: u64,
    /// Overrides every suite's default trial count.
    pub trials: Option<u64>,
    /// Comparison tolerance on the float backend.
    pub tol: f64,
    pub field: Field,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        Self {
            seed: 42,
            trials: None,
            tol: crate::scalar::DEFAULT_TOL,
            field: Field::GaussianRational,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteInfo {
    pub name: String,
    pub default_trials: u64,
    /// Runs on the float backend regardless of the requested field.
    pub float_only: bool,
}

fn info(name: impl Into<String>, default_trials: u64, float_only: bool) -> SuiteInfo {
    SuiteInfo {
        name: name.into(),
        default_trials,
        float_only,
    }
}

const POISSON_FD_MAPS: [&str; 4] = ["general", "reduced-identity", "adler-yamilov", "kdv-lift"];

fn two_casimir_chart_names() -> Vec<String> {
    normal_form_catalog::<GaussianRational>()
        .into_iter()
        .filter(|c| c.is_two_casimir())
        .map(|c| c.name().to_string())
        .collect()
}

/// Every suite in run order.
pub fn suite_catalog() -> Vec<SuiteInfo> {
    let mut out = Vec::new();
    for b in CATALOG_B_NAMES {
        out.push(info(format!("refactor/{b}-B"), 200, false));
    }
    for b in CATALOG_B_NAMES {
        out.push(info(format!("roundtrip/{b}-B"), 100, false));
    }
    for b in CATALOG_B_NAMES {
        out.push(info(format!("uniqueness/{b}-B"), 100, false));
    }
    out.push(info("casimir-jacobi", 100, false));
    for b in CATALOG_B_NAMES {
        out.push(info(format!("yb-cube/{}", general_map_name(b)), 100, false));
    }
    for c in two_casimir_chart_names() {
        out.push(info(format!("yb-cube/reduced-{c}"), 100, false));
    }
    for m in ["adler-yamilov", "kdv-lift", "trivial"] {
        out.push(info(format!("yb-cube/{m}"), 100, false));
    }
    out.push(info("poisson/general", 50, false));
    for c in two_casimir_chart_names() {
        out.push(info(format!("poisson/reduced-{c}"), 50, false));
    }
    for m in ["adler-yamilov", "kdv-lift", "kdv-family"] {
        out.push(info(format!("poisson/{m}"), 50, false));
    }
    for m in POISSON_FD_MAPS {
        out.push(info(format!("poisson-fd/{m}"), 50, true));
    }
    out.push(info("limits/ay", 5, true));
    out.push(info("limits/kdv", 5, true));
    out.push(info("kdv-squeeze", 100, false));
    out.push(info("degenerate-lax", 50, false));
    out
}

pub fn suite_names() -> Vec<String> {
    suite_catalog().into_iter().map(|s| s.name).collect()
}

enum Outcome {
    Pass,
    Reject,
    Fail {
        inputs: Value,
        lhs: Value,
        rhs: Value,
    },
}

fn fail(inputs: Value, lhs: Value, rhs: Value) -> Result<Outcome> {
    Ok(Outcome::Fail { inputs, lhs, rhs })
}

fn verdict(
    ok: bool,
    inputs: impl FnOnce() -> Value,
    lhs: impl FnOnce() -> Value,
    rhs: impl FnOnce() -> Value,
) -> Result<Outcome> {
    if ok {
        Ok(Outcome::Pass)
    } else {
        fail(inputs(), lhs(), rhs())
    }
}

/// Runs `n` trials in parallel. Domain errors reject the trial; any other
/// error is a failure.
fn par_trials<F>(n: u64, seed: u64, trial: F) -> Vec<Outcome>
where
    F: Fn(u64, &mut TrialRng) -> Result<Outcome> + Sync,
{
    (0..n)
        .into_par_iter()
        .map(|t| {
            let mut rng = trial_rng(seed, t);
            match trial(t, &mut rng) {
                Ok(o) => o,
                Err(e) if e.is_domain() => Outcome::Reject,
                Err(e) => Outcome::Fail {
                    inputs: Value::Null,
                    lhs: json!("error"),
                    rhs: json!(e.to_string()),
                },
            }
        })
        .collect()
}

fn points_json<S: Scalar>(ps: &[&ParamPoint<S>]) -> Value {
    Value::Array(ps.iter().map(|p| point_to_json(p)).collect())
}

fn mats_json<S: Scalar>(ms: &[&Mat2<S>]) -> Value {
    Value::Array(ms.iter().map(|m| mat_to_json(m)).collect())
}

fn dense_json<S: Scalar>(m: &DenseMatrix<S>) -> Value {
    Value::Array(
        (0..m.rows())
            .map(|i| Value::Array((0..m.cols()).map(|j| scalar_to_json(&m[(i, j)])).collect()))
            .collect(),
    )
}

fn b_by_name<S: Scalar>(name: &str) -> Result<Mat2<S>> {
    catalog_b(name).ok_or_else(|| Error::UnknownSuite(name.to_string()))
}

/// The catalogued `B` followed by its random conjugates, drawn from streams
/// no trial uses.
fn b_variants<S: Scalar>(b: &Mat2<S>, seed: u64) -> Result<Vec<Mat2<S>>> {
    let mut out = vec![b.clone()];
    for k in 0..CONJUGATES as u64 {
        let mut rng = trial_rng(seed, u64::MAX - k);
        let p = invertible_mat(&mut rng)?;
        out.push(Mat2::conjugate(&p, b)?);
    }
    Ok(out)
}

fn refactor_trials<S: Scalar>(b: &Mat2<S>, n: u64, seed: u64, tol: f64) -> Result<Vec<Outcome>> {
    let variants = b_variants(b, seed)?;
    let total = n * variants.len() as u64;
    Ok(par_trials(total, seed, |t, rng| {
        let b = &variants[(t / n) as usize];
        let (x, y) = sample_pair(rng, b)?;
        let r = refactor(&x, &y, b)?;
        let (u, v) = (&r.u, &r.v);
        let lhs_prod = u * v;
        let rhs_prod = &y * &x;
        let lhs_lin = u * b + b * v;
        let rhs_lin = &y * b + b * &x;
        let ok = lhs_prod.approx_eq(&rhs_prod, tol)
            && lhs_lin.approx_eq(&rhs_lin, tol)
            && r.invariants_transferred(tol);
        let inv = |p: &crate::pencil::PencilInvariants<S>| {
            scalars_to_json(&[p.f0.clone(), p.f1.clone(), p.f2.clone()])
        };
        verdict(
            ok,
            || json!({"x": mat_to_json(&x), "y": mat_to_json(&y), "b": mat_to_json(b)}),
            || json!({"uv": mat_to_json(&lhs_prod), "ub+bv": mat_to_json(&lhs_lin), "invariants": [inv(&r.invariants_out.0), inv(&r.invariants_out.1)]}),
            || json!({"yx": mat_to_json(&rhs_prod), "yb+bx": mat_to_json(&rhs_lin), "invariants": [inv(&r.invariants_in.0), inv(&r.invariants_in.1)]}),
        )
    }))
}

fn roundtrip_trials<S: Scalar>(b: &Mat2<S>, n: u64, seed: u64, tol: f64) -> Vec<Outcome> {
    par_trials(n, seed, |_, rng| {
        let (x, y) = sample_pair(rng, b)?;
        let (u, v) = refactor_pair(&x, &y, b)?;
        let (x2, v2) = inverse_refactor(&u, &y, b)?;
        verdict(
            x2.approx_eq(&x, tol) && v2.approx_eq(&v, tol),
            || json!({"x": mat_to_json(&x), "y": mat_to_json(&y), "b": mat_to_json(b)}),
            || mats_json(&[&x2, &v2]),
            || mats_json(&[&x, &v]),
        )
    })
}

fn uniqueness_trials<S: Scalar>(b: &Mat2<S>, n: u64, seed: u64, tol: f64) -> Vec<Outcome> {
    par_trials(n, seed, |_, rng| {
        let [x, y, z] = sample_triple(rng, b)?;
        let got = reconstruct_first_factor(&x, &y, &z, b)?;
        verdict(
            got.approx_eq(&x, tol),
            || json!({"x": mat_to_json(&x), "y": mat_to_json(&y), "z": mat_to_json(&z), "b": mat_to_json(b)}),
            || mat_to_json(&got),
            || mat_to_json(&x),
        )
    })
}

fn casimir_jacobi_trials<S: Scalar>(n: u64, seed: u64, tol: f64) -> Vec<Outcome> {
    par_trials(n, seed, |_, rng| {
        let (a, b): (Mat2<S>, Mat2<S>) = (gaussian_mat(rng), gaussian_mat(rng));
        let lie = LieStructure::from_b(&b);
        let j = structure_matrix(&a, &b);
        let linear = lie.lie_poisson_matrix(&a);
        let ok = casimir_check(&a, &b)
            && jacobi_check(&b, &a)
            && lie.satisfies_jacobi()
            && lie.is_antisymmetric()
            && linear.approx_eq(&j, tol);
        verdict(
            ok,
            || json!({"a": mat_to_json(&a), "b": mat_to_json(&b)}),
            || dense_json(&linear),
            || dense_json(&j),
        )
    })
}

fn cube_trials<S: Scalar>(map: &RegisteredMap<S>, n: u64, seed: u64, tol: f64) -> Vec<Outcome> {
    par_trials(n, seed, |_, rng| {
        let (x, y, z) = (
            map.sample_point(rng)?,
            map.sample_point(rng)?,
            map.sample_point(rng)?,
        );
        let (lhs, rhs) = yb_cube_sides(|a, b| map.apply(a, b), &x, &y, &z)?;
        verdict(
            lhs.iter().zip(&rhs).all(|(a, b)| a.approx_eq(b, tol)),
            || points_json(&[&x, &y, &z]),
            || points_json(&lhs.iter().collect::<Vec<_>>()),
            || points_json(&rhs.iter().collect::<Vec<_>>()),
        )
    })
}

/// The general map over the catalogued `B` at position `t mod 4`.
fn general_for_trial<S: Scalar>(t: u64) -> Result<RegisteredMap<S>> {
    let name = CATALOG_B_NAMES[(t % CATALOG_B_NAMES.len() as u64) as usize];
    find_map(&general_map_name(name))
}

/// `maps == None` cycles the general map through the catalogued `B`.
fn poisson_trials<S: Scalar>(
    map: Option<&RegisteredMap<S>>,
    n: u64,
    seed: u64,
    tol: f64,
) -> Vec<Outcome> {
    par_trials(n, seed, |t, rng| {
        let owned;
        let map = match map {
            Some(m) => m,
            None => {
                owned = general_for_trial(t)?;
                &owned
            }
        };
        let (x, y) = (map.sample_point(rng)?, map.sample_point(rng)?);
        let flat = FlatMap {
            map,
            x_params: x.params.clone(),
            y_params: y.params.clone(),
        };
        let bracket = map
            .product_bracket(&x.params, &y.params)
            .ok_or_else(|| Error::InvalidInput(format!("{} has no bracket", map.name)))?;
        let point: Vec<S> = x.coords.iter().chain(&y.coords).cloned().collect();
        let cmp = poisson_map_compare(&flat, &bracket, &bracket, &point, tol)?;
        verdict(
            cmp.holds,
            || json!({"map": map.name, "x": point_to_json(&x), "y": point_to_json(&y)}),
            || dense_json(&cmp.pushed),
            || dense_json(&cmp.target),
        )
    })
}

/// Central-difference Jacobian with step `h·max(1, |p_j|)`.
fn fd_jacobian<M: PointMap<ComplexFloat>>(
    map: &M,
    p: &[ComplexFloat],
    h: f64,
) -> Result<DenseMatrix<ComplexFloat>> {
    let n = p.len();
    let mut jac = DenseMatrix::zeros(map.dim(), n);
    for col in 0..n {
        let step = h * p[col].abs().max(1.0);
        let shifted = |s: f64| {
            let mut q = p.to_vec();
            q[col] = q[col] + ComplexFloat::real(s);
            map.eval::<ComplexFloat>(&q)
        };
        let (fp, fm) = (shifted(step)?, shifted(-step)?);
        for row in 0..map.dim() {
            jac[(row, col)] = ComplexFloat((fp[row].0 - fm[row].0) / (2.0 * step));
        }
    }
    Ok(jac)
}

fn poisson_fd_trials(map_name: &str, n: u64, seed: u64) -> Result<Vec<Outcome>> {
    let fixed = match map_name {
        "general" => None,
        name => Some(find_map::<ComplexFloat>(name)?),
    };
    Ok(par_trials(n, seed, |t, rng| {
        let owned;
        let map = match &fixed {
            Some(m) => m,
            None => {
                owned = general_for_trial(t)?;
                &owned
            }
        };
        let (x, y) = (map.sample_point(rng)?, map.sample_point(rng)?);
        let flat = FlatMap {
            map,
            x_params: x.params.clone(),
            y_params: y.params.clone(),
        };
        let bracket = map
            .product_bracket(&x.params, &y.params)
            .ok_or_else(|| Error::InvalidInput(format!("{} has no bracket", map.name)))?;
        let point: Vec<ComplexFloat> = x.coords.iter().chain(&y.coords).cloned().collect();
        let jac = fd_jacobian(&flat, &point, FD_STEP)?;
        let pushed = jac
            .matmul(&bracket.matrix(&point)?)
            .matmul(&jac.transpose());
        let target = bracket.matrix(&flat.eval::<ComplexFloat>(&point)?)?;
        let scale = target.iter().map(|z| z.abs()).fold(1.0, f64::max);
        let diff = pushed
            .iter()
            .zip(target.iter())
            .map(|(a, b)| (a.0 - b.0).norm())
            .fold(0.0, f64::max);
        verdict(
            diff <= FD_TOL * scale,
            || json!({"map": map.name, "x": point_to_json(&x), "y": point_to_json(&y)}),
            || dense_json(&pushed),
            || dense_json(&target),
        )
    }))
}

type FloatPair = [ComplexFloat; 2];

/// A float point away from the poles of both closed forms.
fn limit_point(rng: &mut TrialRng) -> Result<(FloatPair, FloatPair, ComplexFloat, ComplexFloat)> {
    sample_until(rng, |r| {
        let mut u = || ComplexFloat::real(uniform(r, -1.0, 1.0));
        let (x, y) = ([u(), u()], [u(), u()]);
        if (1.0 + x[0].0 * y[1].0).norm() < 0.5 || (x[0].0 + y[1].0).norm() < 0.5 {
            return Err(Error::PoleEncountered("too close to a pole"));
        }
        let (alpha, beta) = (
            ComplexFloat::real(uniform(r, 0.5, 2.5)),
            ComplexFloat::real(uniform(r, 0.5, 2.5)),
        );
        Ok((x, y, alpha, beta))
    })
}

fn limit_trials(family: Family, n: u64, seed: u64) -> Vec<Outcome> {
    par_trials(n, seed, |_, rng| {
        let (x, y, alpha, beta) = limit_point(rng)?;
        let closed = family.closed_form(&x, &y, &alpha, &beta)?;
        let report = limit_convergence_check(
            |e| family.eval(&x, &y, &alpha, &beta, e),
            &closed,
            &LIMIT_SCHEDULE,
            LIMIT_TOL,
        )?;
        verdict(
            report.passed,
            || json!({"x": scalars_to_json(&x), "y": scalars_to_json(&y), "alpha": scalar_to_json(&alpha), "beta": scalar_to_json(&beta)}),
            || json!({"errors": report.errors, "order": report.order, "monotone": report.monotone}),
            || json!({"final_error_max": LIMIT_TOL, "min_order": crate::limits::MIN_ORDER}),
        )
    })
}

fn squeeze_trials<S: Scalar>(n: u64, seed: u64, tol: f64) -> Vec<Outcome> {
    par_trials(n, seed, |_, rng| {
        let (x, y, alpha, beta, s) = sample_until(rng, |r| {
            let (f, f1, f2): (S, S, S) = (gaussian_int(r), gaussian_int(r), gaussian_int(r));
            let (alpha, beta): (S, S) = (gaussian_int(r), gaussian_int(r));
            let x = [f1, f.clone()];
            let y = [f, f2];
            let s = kdv_quadgraph_reduce(&x, &y, &alpha, &beta, tol)?;
            Ok((x, y, alpha, beta, s))
        })?;
        verdict(
            s.residual.approx_eq(&S::zero(), tol),
            || json!({"x": scalars_to_json(&x), "y": scalars_to_json(&y), "alpha": scalar_to_json(&alpha), "beta": scalar_to_json(&beta)}),
            || json!({"f12": scalar_to_json(&s.f12), "residual": scalar_to_json(&s.residual)}),
            || json!({"residual": "0"}),
        )
    })
}

fn degenerate_lax_trials<S: Scalar>(n: u64, seed: u64, tol: f64) -> Vec<Outcome> {
    par_trials(n, seed, |_, rng| {
        let (x, y, alpha, beta, l1, l2) = sample_until(rng, |r| {
            let x: [S; 2] = [gaussian_int(r), gaussian_int(r)];
            let y: [S; 2] = [gaussian_int(r), gaussian_int(r)];
            let (alpha, beta): (S, S) = (gaussian_int(r), gaussian_int(r));
            let l1 = degenerate_lax_check(DegenerateLax::L1, &x, &y, &alpha, &beta, tol)?;
            let l2 = degenerate_lax_check(DegenerateLax::L2, &x, &y, &alpha, &beta, tol)?;
            Ok((x, y, alpha, beta, l1, l2))
        })?;
        let equal = alpha.approx_eq(&beta, tol);
        let second_solution = if equal {
            l2.swap_satisfies && !l2.distinct
        } else {
            l2.alternative_satisfies && l2.distinct
        };
        verdict(
            l1.map_satisfies && l2.map_satisfies && second_solution,
            || json!({"x": scalars_to_json(&x), "y": scalars_to_json(&y), "alpha": scalar_to_json(&alpha), "beta": scalar_to_json(&beta)}),
            || {
                json!({
                    "l1_map": l1.map_satisfies,
                    "l2_map": l2.map_satisfies,
                    "l2_alternative": l2.alternative_satisfies,
                    "l2_distinct": l2.distinct,
                    "l2_swap": l2.swap_satisfies,
                })
            },
            || json!({"l1_map": true, "l2_map": true, "l2_second_solution": true}),
        )
    })
}

/// Dispatch for suites that run on either backend.
fn run_on<S: Scalar>(name: &str, n: u64, seed: u64, tol: f64) -> Result<Vec<Outcome>> {
    let unknown = || Error::UnknownSuite(name.to_string());
    let (group, rest) = name.split_once('/').unwrap_or((name, ""));
    let b_name = |rest: &str| {
        rest.strip_suffix("-B")
            .map(str::to_string)
            .ok_or_else(unknown)
    };
    Ok(match group {
        "refactor" => refactor_trials(&b_by_name::<S>(&b_name(rest)?)?, n, seed, tol)?,
        "roundtrip" => roundtrip_trials(&b_by_name::<S>(&b_name(rest)?)?, n, seed, tol),
        "uniqueness" => uniqueness_trials(&b_by_name::<S>(&b_name(rest)?)?, n, seed, tol),
        "casimir-jacobi" if rest.is_empty() => casimir_jacobi_trials::<S>(n, seed, tol),
        "yb-cube" => cube_trials(&find_map::<S>(rest).map_err(|_| unknown())?, n, seed, tol),
        "poisson" if rest == "general" => poisson_trials::<S>(None, n, seed, tol),
        "poisson" => {
            let map = find_map::<S>(rest).map_err(|_| unknown())?;
            if map
                .product_bracket(
                    &vec![S::zero(); map.param_dim()],
                    &vec![S::zero(); map.param_dim()],
                )
                .is_none()
            {
                return Err(unknown());
            }
            poisson_trials(Some(&map), n, seed, tol)
        }
        "kdv-squeeze" if rest.is_empty() => squeeze_trials::<S>(n, seed, tol),
        "degenerate-lax" if rest.is_empty() => degenerate_lax_trials::<S>(n, seed, tol),
        _ => return Err(unknown()),
    })
}

fn run_float_only(name: &str, n: u64, seed: u64) -> Result<Vec<Outcome>> {
    match name.split_once('/') {
        Some(("poisson-fd", m)) if POISSON_FD_MAPS.contains(&m) => poisson_fd_trials(m, n, seed),
        Some(("limits", "ay")) => Ok(limit_trials(Family::AdlerYamilov, n, seed)),
        Some(("limits", "kdv")) => Ok(limit_trials(Family::Kdv, n, seed)),
        _ => Err(Error::UnknownSuite(name.to_string())),
    }
}

fn assemble(
    name: &str,
    backend: Field,
    seed: u64,
    outcomes: Vec<Outcome>,
    wall_ms: u64,
) -> VerificationReport {
    let mut trials = TrialCounts::default();
    let mut failures = Vec::new();
    for (t, o) in outcomes.into_iter().enumerate() {
        trials.attempted += 1;
        match o {
            Outcome::Pass => trials.accepted += 1,
            Outcome::Reject => trials.rejected += 1,
            Outcome::Fail { inputs, lhs, rhs } => {
                trials.accepted += 1;
                failures.push(Failure {
                    suite: None,
                    trial: t as u64,
                    inputs,
                    lhs,
                    rhs,
                });
            }
        }
    }
    VerificationReport {
        schema_version: SCHEMA_VERSION,
        suite: name.to_string(),
        backend: backend.name().to_string(),
        seed,
        trials,
        failures,
        wall_ms,
        suites: Vec::new(),
    }
}

/// Runs one suite, or every suite for `"all"`.
pub fn run_suite(name: &str, config: &SuiteConfig) -> Result<VerificationReport> {
    if name == "all" {
        return run_all(config);
    }
    let info = suite_catalog()
        .into_iter()
        .find(|s| s.name == name)
        .ok_or_else(|| Error::UnknownSuite(name.to_string()))?;
    let n = config.trials.unwrap_or(info.default_trials);
    let seed = suite_seed(config.seed, name);
    let start = Instant::now();
    let (backend, outcomes) = if info.float_only {
        (Field::Complex64, run_float_only(name, n, seed)?)
    } else {
        match config.field {
            Field::GaussianRational => (
                config.field,
                run_on::<GaussianRational>(name, n, seed, 0.0)?,
            ),
            Field::Complex64 => (
                config.field,
                run_on::<ComplexFloat>(name, n, seed, config.tol)?,
            ),
        }
    };
    let wall_ms = start.elapsed().as_millis() as u64;
    Ok(assemble(name, backend, config.seed, outcomes, wall_ms))
}

fn run_all(config: &SuiteConfig) -> Result<VerificationReport> {
    let start = Instant::now();
    let mut trials = TrialCounts::default();
    let mut failures = Vec::new();
    let mut suites = Vec::new();
    for info in suite_catalog() {
        let r = run_suite(&info.name, config)?;
        trials.add(&r.trials);
        failures.extend(r.failures.iter().cloned().map(|mut f| {
            f.suite = Some(r.suite.clone());
            f
        }));
        suites.push(r);
    }
    Ok(VerificationReport {
        schema_version: SCHEMA_VERSION,
        suite: "all".into(),
        backend: config.field.name().to_string(),
        seed: config.seed,
        trials,
        failures,
        wall_ms: start.elapsed().as_millis() as u64,
        suites,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cfg(trials: u64) -> SuiteConfig {
        SuiteConfig {
            trials: Some(trials),
            ..SuiteConfig::default()
        }
    }

    #[test]
    fn unknown_suite() {
        for name in [
            "nope",
            "yb-cube/nope",
            "refactor/identity",
            "poisson/trivial",
            "limits/x",
        ] {
            assert_eq!(
                run_suite(name, &cfg(1)),
                Err(Error::UnknownSuite(name.into())),
                "{name}"
            );
        }
    }

    #[test]
    fn every_catalogued_suite_runs_green() {
        for info in suite_catalog() {
            let r = run_suite(&info.name, &cfg(3)).unwrap();
            assert!(r.failures.is_empty(), "{}: {:?}", info.name, r.failures);
            assert_eq!(r.trials.attempted, r.trials.accepted + r.trials.rejected);
        }
    }

    #[test]
    fn deterministic_rerun() {
        let a = run_suite("yb-cube/general-jordan-B", &cfg(10)).unwrap();
        let b = run_suite("yb-cube/general-jordan-B", &cfg(10)).unwrap();
        assert_eq!(a.without_timing(), b.without_timing());
    }

    #[test]
    fn float_backend_runs() {
        let c = SuiteConfig {
            field: Field::Complex64,
            ..cfg(10)
        };
        let r = run_suite("yb-cube/reduced-identity", &c).unwrap();
        assert_eq!(r.backend, "complex64");
        assert!(r.passed(), "{:?}", r.failures);
    }

    #[test]
    fn field_names() {
        assert_eq!("complex64".parse::<Field>().unwrap(), Field::Complex64);
        assert!("reals".parse::<Field>().is_err());
    }
}
