use proptest::prelude::*;

use ybmaps::leaf::{catalog_b, catalog_chart, reduced_map, ParamPoint};
use ybmaps::limits::{adler_yamilov_map, kdv_lift_map, kdv_quadgraph_reduce};
use ybmaps::pencil::{invariants, MatrixPencil};
use ybmaps::refactor::{inverse_refactor, refactor, refactor_pair};
use ybmaps::sklyanin::{casimir_check, structure_matrix, LieStructure};
use ybmaps::verify::yb_cube_check;
use ybmaps::{GaussianRational, Mat2, Scalar};

type Q = GaussianRational;

fn gauss() -> impl Strategy<Value = Q> {
    (-3i64..=3, -3i64..=3).prop_map(|(re, im)| Q::from_parts_i64(re, im))
}

fn ratio() -> impl Strategy<Value = Q> {
    (-20i64..=20, 1i64..=9, -20i64..=20, 1i64..=9)
        .prop_map(|(a, b, c, d)| Q::from_ratio(a, b) + Q::from_ratio(c, d) * Q::imag_unit())
}

fn mat() -> impl Strategy<Value = Mat2<Q>> {
    [gauss(), gauss(), gauss(), gauss()].prop_map(Mat2::from_entries)
}

fn leading() -> impl Strategy<Value = Mat2<Q>> {
    prop_oneof![
        Just(catalog_b("identity").unwrap()),
        Just(catalog_b("diag").unwrap()),
        Just(catalog_b("jordan").unwrap()),
        Just(catalog_b("rotation").unwrap()),
    ]
}

fn pair() -> impl Strategy<Value = [Q; 2]> {
    [gauss(), gauss()]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn field_axioms(a in ratio(), b in ratio(), c in ratio()) {
        prop_assert_eq!(a.clone() + b.clone(), b.clone() + a.clone());
        prop_assert_eq!(a.clone() * b.clone(), b.clone() * a.clone());
        prop_assert_eq!(a.clone() * (b.clone() + c.clone()), a.clone() * b.clone() + a.clone() * c.clone());
        prop_assert_eq!((a.clone() * b.clone()) * c.clone(), a.clone() * (b.clone() * c.clone()));
        if !a.is_zero() {
            prop_assert_eq!(a.clone() * a.inv().unwrap(), Q::one());
        }
    }

    #[test]
    fn text_roundtrip(a in ratio()) {
        let back: Q = a.to_string().parse().unwrap();
        prop_assert_eq!(back, a);
    }

    #[test]
    fn matrix_product_is_associative(a in mat(), b in mat(), c in mat()) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!((&a * &b).det(), a.det() * b.det());
    }

    #[test]
    fn inverse_when_invertible(a in mat()) {
        match a.inverse() {
            Ok(inv) => prop_assert_eq!(&a * &inv, Mat2::identity()),
            Err(_) => prop_assert!(a.det().is_zero()),
        }
    }

    #[test]
    fn pencil_determinant_matches_invariants(a in mat(), b in mat(), z in gauss()) {
        let f = invariants(&a, &b);
        prop_assert_eq!(MatrixPencil::new(a, b).eval(&z).det(), f.eval(&z));
    }

    #[test]
    fn refactor_identity(x in mat(), y in mat(), b in leading()) {
        if let Ok(r) = refactor(&x, &y, &b) {
            prop_assert_eq!(&r.u * &r.v, &y * &x);
            prop_assert_eq!(&r.u * &b + &b * &r.v, &y * &b + &b * &x);
            prop_assert!(r.invariants_transferred(0.0));
        }
    }

    #[test]
    fn refactor_roundtrip(x in mat(), y in mat(), b in leading()) {
        if let Ok((u, v)) = refactor_pair(&x, &y, &b) {
            if let Ok((x2, v2)) = inverse_refactor(&u, &y, &b) {
                prop_assert_eq!(x2, x);
                prop_assert_eq!(v2, v);
            }
        }
    }

    #[test]
    fn general_map_cube(x in mat(), y in mat(), z in mat(), b in leading()) {
        let pt = |m: &Mat2<Q>| ParamPoint::new(m.entries().to_vec(), Vec::new());
        let map = |p: &ParamPoint<Q>, q: &ParamPoint<Q>| {
            let m = |c: &[Q]| Mat2::from_entries([c[0].clone(), c[1].clone(), c[2].clone(), c[3].clone()]);
            let (u, v) = refactor_pair(&m(&p.coords), &m(&q.coords), &b)?;
            Ok((pt(&u), pt(&v)))
        };
        if let Ok(ok) = yb_cube_check(map, &pt(&x), &pt(&y), &pt(&z), 0.0) {
            prop_assert!(ok);
        }
    }

    #[test]
    fn casimirs_and_lie_linearity(a in mat(), b in mat()) {
        prop_assert!(casimir_check(&a, &b));
        let j = structure_matrix(&a, &b);
        prop_assert!(j.is_antisymmetric());
        prop_assert_eq!(LieStructure::from_b(&b).lie_poisson_matrix(&a), j);
    }

    #[test]
    fn reduced_identity_keeps_levels(x in pair(), y in pair(), p in [gauss(), gauss()], q in [gauss(), gauss()]) {
        let chart = catalog_chart::<Q>("identity").unwrap();
        let xp = ParamPoint::new(x.to_vec(), p.to_vec());
        let yp = ParamPoint::new(y.to_vec(), q.to_vec());
        if let (Ok(a), Ok(b)) = (chart.embed(&xp), chart.embed(&yp)) {
            if let Ok((u, v)) = reduced_map(&chart, &xp, &yp) {
                let (ua, va) = (chart.embed(&u).unwrap(), chart.embed(&v).unwrap());
                prop_assert_eq!(invariants(&ua, chart.b()), invariants(&a, chart.b()));
                prop_assert_eq!(invariants(&va, chart.b()), invariants(&b, chart.b()));
            }
        }
    }

    #[test]
    fn closed_forms_swap_at_equal_parameters(x in pair(), y in pair(), a in gauss()) {
        if let Ok((u, v)) = adler_yamilov_map(&x, &y, &a, &a) {
            prop_assert_eq!((u, v), (y.clone(), x.clone()));
        }
        if let Ok((u, v)) = kdv_lift_map(&x, &y, &a, &a) {
            prop_assert_eq!((u, v), (y, x));
        }
    }

    #[test]
    fn squeeze_residual_vanishes(f in gauss(), f1 in gauss(), f2 in gauss(), a in gauss(), b in gauss()) {
        let x = [f1, f.clone()];
        let y = [f, f2];
        if let Ok(s) = kdv_quadgraph_reduce(&x, &y, &a, &b, 0.0) {
            prop_assert!(s.residual.is_zero());
        }
    }
}
