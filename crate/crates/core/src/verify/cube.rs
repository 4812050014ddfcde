//! The Yang–Baxter cube: `R23 R13 R12 = R12 R13 R23` on a triple.

use crate::error::Result;
use crate::leaf::ParamPoint;
use crate::scalar::Scalar;

pub type Triple<S> = [ParamPoint<S>; 3];

/// Both sides of the cube. The left side applies `R12`, then `R13`, then
/// `R23`; the right side applies them in reverse order.
///
/// ```text
/// (x', y')  = R(x, y)      (ỹ, z̃)  = R(y, z)
/// (x'', z') = R(x', z)     (x̃, z̃̃) = R(x, z̃)
/// (y'', z'') = R(y', z')   (x̃̃, ỹ̃) = R(x̃, ỹ)
/// ```
pub fn yb_cube_sides<S, F>(
    map: F,
    x: &ParamPoint<S>,
    y: &ParamPoint<S>,
    z: &ParamPoint<S>,
) -> Result<(Triple<S>, Triple<S>)>
where
    S: Scalar,
    F: Fn(&ParamPoint<S>, &ParamPoint<S>) -> Result<(ParamPoint<S>, ParamPoint<S>)>,
{
    let (x1, y1) = map(x, y)?;
    let (x2, z1) = map(&x1, z)?;
    let (y2, z2) = map(&y1, &z1)?;

    let (yt, zt) = map(y, z)?;
    let (xt, ztt) = map(x, &zt)?;
    let (xtt, ytt) = map(&xt, &yt)?;

    Ok(([x2, y2, z2], [xtt, ytt, ztt]))
}

/// Whether both composition orders agree on all three factors. Domain errors
/// in any of the six applications propagate.
pub fn yb_cube_check<S, F>(
    map: F,
    x: &ParamPoint<S>,
    y: &ParamPoint<S>,
    z: &ParamPoint<S>,
    tol: f64,
) -> Result<bool>
where
    S: Scalar,
    F: Fn(&ParamPoint<S>, &ParamPoint<S>) -> Result<(ParamPoint<S>, ParamPoint<S>)>,
{
    let (lhs, rhs) = yb_cube_sides(map, x, y, z)?;
    Ok(lhs.iter().zip(&rhs).all(|(a, b)| a.approx_eq(b, tol)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;
    use crate::scalar::GaussianRational;
    use crate::verify::registry::find_map;
    use crate::verify::sample::trial_rng;

    type Q = GaussianRational;
    type P = ParamPoint<Q>;

    fn pt(c: &[i64]) -> P {
        ParamPoint::new(c.iter().map(|&n| Q::from_i64(n)).collect(), Vec::new())
    }

    #[test]
    fn trivial_branch_passes() {
        let swap = |a: &P, b: &P| Ok((b.clone(), a.clone()));
        assert!(yb_cube_check(swap, &pt(&[1, 2]), &pt(&[3, 4]), &pt(&[5, 6]), 0.0).unwrap());
    }

    #[test]
    fn general_identity_b_passes() {
        let m = find_map::<Q>("general-identity-B").unwrap();
        let mut rng = trial_rng(42, 0);
        let mut checked = 0;
        for _ in 0..10 {
            let (x, y, z) = (
                m.sample_point(&mut rng).unwrap(),
                m.sample_point(&mut rng).unwrap(),
                m.sample_point(&mut rng).unwrap(),
            );
            match yb_cube_check(|a, b| m.apply(a, b), &x, &y, &z, 0.0) {
                Ok(ok) => {
                    assert!(ok);
                    checked += 1;
                }
                Err(e) => assert!(e.is_domain(), "{e}"),
            }
        }
        assert!(checked > 0);
    }

    #[test]
    fn non_yb_control_fails() {
        let add = |a: &P, b: &P| {
            let u = a
                .coords
                .iter()
                .zip(&b.coords)
                .map(|(p, q)| p.clone() + q.clone())
                .collect();
            Ok((ParamPoint::new(u, Vec::new()), a.clone()))
        };
        assert!(!yb_cube_check(add, &pt(&[1]), &pt(&[2]), &pt(&[5]), 0.0).unwrap());
    }

    #[test]
    fn domain_errors_propagate() {
        let fail = |_: &P, _: &P| Err(Error::SingularP1);
        assert_eq!(
            yb_cube_check(fail, &pt(&[1]), &pt(&[2]), &pt(&[3]), 0.0),
            Err(Error::SingularP1)
        );
    }
}
