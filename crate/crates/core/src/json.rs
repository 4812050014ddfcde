//! JSON forms of scalars, matrices and points.
//!
//! Scalars are written as text (`"3/2-1/4i"` exact, `"1.5e0+0e0i"` float) so
//! exact values survive a round trip. Numbers are accepted on input.

use serde_json::{json, Map, Value};

use crate::error::{Error, Result};
use crate::leaf::ParamPoint;
use crate::mat2::Mat2;
use crate::scalar::{ComplexFloat, GaussianRational, Scalar};

/// Scalars with a text form that parses back.
pub trait JsonScalar: Scalar {
    fn parse_text(s: &str) -> Result<Self>;
    fn from_f64(x: f64) -> Result<Self>;
}

impl JsonScalar for GaussianRational {
    fn parse_text(s: &str) -> Result<Self> {
        s.parse()
    }

    fn from_f64(x: f64) -> Result<Self> {
        GaussianRational::from_complex64(num_complex::Complex64::new(x, 0.0))
            .ok_or_else(|| Error::Parse(format!("non-finite number {x}")))
    }
}

impl JsonScalar for ComplexFloat {
    fn parse_text(s: &str) -> Result<Self> {
        if let Ok(x) = s.trim().parse::<f64>() {
            return Ok(ComplexFloat::real(x));
        }
        if let Ok(z) = s.trim().parse::<num_complex::Complex64>() {
            return Ok(ComplexFloat(z));
        }
        // Rational text such as "3/2-1/4i".
        let q: GaussianRational = s.parse()?;
        Ok(ComplexFloat(q.to_complex()))
    }

    fn from_f64(x: f64) -> Result<Self> {
        Ok(ComplexFloat::real(x))
    }
}

pub fn scalar_to_json<S: Scalar>(s: &S) -> Value {
    Value::String(s.to_string())
}

pub fn scalar_from_json<S: JsonScalar>(v: &Value) -> Result<S> {
    match v {
        Value::String(s) => S::parse_text(s),
        Value::Number(n) => {
            if let Some(i) = n.as_i64() {
                Ok(S::from_i64(i))
            } else {
                S::from_f64(
                    n.as_f64()
                        .ok_or_else(|| Error::Parse(format!("bad number {n}")))?,
                )
            }
        }
        other => Err(Error::Parse(format!("expected a scalar, got {other}"))),
    }
}

pub fn scalars_to_json<S: Scalar>(v: &[S]) -> Value {
    Value::Array(v.iter().map(scalar_to_json).collect())
}

pub fn scalars_from_json<S: JsonScalar>(v: &Value) -> Result<Vec<S>> {
    v.as_array()
        .ok_or_else(|| Error::Parse(format!("expected an array, got {v}")))?
        .iter()
        .map(scalar_from_json)
        .collect()
}

/// `{"a1": .., "a2": .., "a3": .., "a4": ..}`
pub fn mat_to_json<S: Scalar>(m: &Mat2<S>) -> Value {
    json!({
        "a1": scalar_to_json(&m.a1),
        "a2": scalar_to_json(&m.a2),
        "a3": scalar_to_json(&m.a3),
        "a4": scalar_to_json(&m.a4),
    })
}

/// Accepts the object form or a row-major `[[a1, a2], [a3, a4]]`.
pub fn mat_from_json<S: JsonScalar>(v: &Value) -> Result<Mat2<S>> {
    match v {
        Value::Object(o) => {
            let get = |k: &str| {
                o.get(k)
                    .ok_or_else(|| Error::Parse(format!("matrix is missing {k}")))
                    .and_then(scalar_from_json)
            };
            Ok(Mat2::new(get("a1")?, get("a2")?, get("a3")?, get("a4")?))
        }
        Value::Array(rows) if rows.len() == 2 => {
            let r0: Vec<S> = scalars_from_json(&rows[0])?;
            let r1: Vec<S> = scalars_from_json(&rows[1])?;
            if r0.len() != 2 || r1.len() != 2 {
                return Err(Error::Parse("matrix rows must have two entries".into()));
            }
            Ok(Mat2::new(
                r0[0].clone(),
                r0[1].clone(),
                r1[0].clone(),
                r1[1].clone(),
            ))
        }
        other => Err(Error::Parse(format!("expected a matrix, got {other}"))),
    }
}

/// `{"coords": [..], "params": [..]}`
pub fn point_to_json<S: Scalar>(p: &ParamPoint<S>) -> Value {
    let mut m = Map::new();
    m.insert("coords".into(), scalars_to_json(&p.coords));
    m.insert("params".into(), scalars_to_json(&p.params));
    Value::Object(m)
}

/// A point object, or a bare coordinate array with no parameters.
pub fn point_from_json<S: JsonScalar>(v: &Value) -> Result<ParamPoint<S>> {
    match v {
        Value::Array(_) => Ok(ParamPoint::new(scalars_from_json(v)?, Vec::new())),
        Value::Object(o) => {
            let coords = o
                .get("coords")
                .ok_or_else(|| Error::Parse("point is missing coords".into()))
                .and_then(scalars_from_json)?;
            let params = match o.get("params") {
                Some(p) => scalars_from_json(p)?,
                None => Vec::new(),
            };
            Ok(ParamPoint::new(coords, params))
        }
        other => Err(Error::Parse(format!("expected a point, got {other}"))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    type Q = GaussianRational;

    #[test]
    fn exact_roundtrip() {
        let m = Mat2::new(
            Q::from_ratio(3, 2),
            Q::from_parts_i64(1, -2),
            Q::zero(),
            Q::from_i64(-7),
        );
        let back: Mat2<Q> = mat_from_json(&mat_to_json(&m)).unwrap();
        assert_eq!(back, m);
        let p = ParamPoint::new(vec![Q::from_ratio(-1, 3)], vec![Q::imag_unit()]);
        assert_eq!(point_from_json::<Q>(&point_to_json(&p)).unwrap(), p);
    }

    #[test]
    fn numbers_and_rows() {
        let m: Mat2<Q> = mat_from_json(&json!([[1, 2], ["1/2", 0.5]])).unwrap();
        assert_eq!(
            m,
            Mat2::new(
                Q::from_i64(1),
                Q::from_i64(2),
                Q::from_ratio(1, 2),
                Q::from_ratio(1, 2)
            )
        );
        let p: ParamPoint<Q> = point_from_json(&json!([1, "2i"])).unwrap();
        assert_eq!(p.coords[1], Q::from_parts_i64(0, 2));
        assert!(p.params.is_empty());
    }

    #[test]
    fn float_text() {
        let z = ComplexFloat::new(1.5, -0.25);
        let back: ComplexFloat = scalar_from_json(&scalar_to_json(&z)).unwrap();
        assert_eq!(back, z);
        let r: ComplexFloat = scalar_from_json(&json!("3/4")).unwrap();
        assert_eq!(r, ComplexFloat::real(0.75));
    }

    #[test]
    fn malformed() {
        assert!(scalar_from_json::<Q>(&json!(true)).is_err());
        assert!(mat_from_json::<Q>(&json!({"a1": 1})).is_err());
        assert!(point_from_json::<Q>(&json!({"params": []})).is_err());
    }
}
