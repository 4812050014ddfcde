//! Seeded random instances.
//!
//! Every trial draws from its own ChaCha8 stream keyed by `(seed, trial)`, so
//! results do not depend on the order in which trials run.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::leaf::catalog_b;
use crate::mat2::Mat2;
use crate::pencil::invariants;
use crate::refactor::{refactor_pair, uniqueness_matrix};
use crate::scalar::Scalar;

/// Bound on real and imaginary parts of sampled Gaussian integers.
pub const ENTRY_BOUND: i64 = 3;

/// Rejections allowed before a sampler gives up.
pub const MAX_REJECTIONS: usize = 1000;

pub type TrialRng = ChaCha8Rng;

pub fn trial_rng(seed: u64, trial: u64) -> TrialRng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(trial);
    rng
}

/// Master seed of one named suite: FNV-1a of the name mixed into `seed`.
pub fn suite_seed(seed: u64, name: &str) -> u64 {
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for b in name.bytes() {
        h ^= u64::from(b);
        h = h.wrapping_mul(0x0100_0000_01b3);
    }
    seed ^ h
}

/// `a + bi` with `|a|, |b| ≤ ENTRY_BOUND`.
pub fn gaussian_int<S: Scalar>(rng: &mut impl Rng) -> S {
    let re = rng.random_range(-ENTRY_BOUND..=ENTRY_BOUND);
    let im = rng.random_range(-ENTRY_BOUND..=ENTRY_BOUND);
    S::from_parts_i64(re, im)
}

pub fn gaussian_ints<S: Scalar>(rng: &mut impl Rng, n: usize) -> Vec<S> {
    (0..n).map(|_| gaussian_int(rng)).collect()
}

pub fn gaussian_mat<S: Scalar>(rng: &mut impl Rng) -> Mat2<S> {
    Mat2::new(
        gaussian_int(rng),
        gaussian_int(rng),
        gaussian_int(rng),
        gaussian_int(rng),
    )
}

/// Draws until `draw` succeeds. Domain errors count as rejections; other
/// errors propagate.
pub fn sample_until<T, R: Rng>(
    rng: &mut R,
    mut draw: impl FnMut(&mut R) -> Result<T>,
) -> Result<T> {
    for _ in 0..MAX_REJECTIONS {
        match draw(rng) {
            Ok(t) => return Ok(t),
            Err(e) if e.is_domain() => continue,
            Err(e) => return Err(e),
        }
    }
    Err(Error::SamplingExhausted(MAX_REJECTIONS))
}

/// An invertible Gaussian-integer matrix.
pub fn invertible_mat<S: Scalar>(rng: &mut impl Rng) -> Result<Mat2<S>> {
    sample_until(rng, |r| {
        let p: Mat2<S> = gaussian_mat(r);
        if p.det().is_zero() {
            Err(Error::SingularMatrix)
        } else {
            Ok(p)
        }
    })
}

/// What [`sample_instance`] draws.
#[derive(Clone, Debug, PartialEq)]
pub enum InstanceKind<S> {
    /// `(X, Y)` inside the domain of the refactorization and of its inverse.
    Pair(Mat2<S>),
    /// `(X, Y, Z)` with `det N ≠ 0`.
    Triple(Mat2<S>),
}

impl<S: Scalar> InstanceKind<S> {
    /// `pair-B=<name>` or `triple-B=<name>` over a catalogued `B`, where the
    /// name is `identity`, `diag`, `jordan`, `rotation` or the shorthand `I`.
    pub fn parse(kind: &str) -> Result<Self> {
        let (shape, b) = kind
            .split_once("-B=")
            .ok_or_else(|| Error::InvalidInput(format!("unknown instance kind {kind}")))?;
        let b = match b {
            "I" => Mat2::identity(),
            name => catalog_b(name)
                .ok_or_else(|| Error::InvalidInput(format!("unknown leading term {name}")))?,
        };
        match shape {
            "pair" => Ok(Self::Pair(b)),
            "triple" => Ok(Self::Triple(b)),
            _ => Err(Error::InvalidInput(format!("unknown instance kind {kind}"))),
        }
    }
}

pub fn sample_pair<S: Scalar>(rng: &mut impl Rng, b: &Mat2<S>) -> Result<(Mat2<S>, Mat2<S>)> {
    sample_until(rng, |r| {
        let (x, y) = (gaussian_mat(r), gaussian_mat(r));
        let (u, _) = refactor_pair(&x, &y, b)?;
        if (u - y.clone()).det().is_zero() {
            return Err(Error::SingularDifference);
        }
        Ok((x, y))
    })
}

pub fn sample_triple<S: Scalar>(rng: &mut impl Rng, b: &Mat2<S>) -> Result<[Mat2<S>; 3]> {
    sample_until(rng, |r| {
        let (x, y, z) = (gaussian_mat(r), gaussian_mat(r), gaussian_mat(r));
        if b.det().is_zero() {
            return Err(Error::SingularB);
        }
        if invariants(&x, b).f2.is_zero() || uniqueness_matrix(&x, &y, &z, b).det().is_zero() {
            return Err(Error::NonGenericTriple);
        }
        Ok([x, y, z])
    })
}

/// A sampled instance: the matrices in draw order.
pub fn sample_instance<S: Scalar>(kind: &InstanceKind<S>, seed: u64) -> Result<Vec<Mat2<S>>> {
    let mut rng = trial_rng(seed, 0);
    match kind {
        InstanceKind::Pair(b) => sample_pair(&mut rng, b).map(|(x, y)| vec![x, y]),
        InstanceKind::Triple(b) => sample_triple(&mut rng, b).map(|t| t.to_vec()),
    }
}

/// Uniform real in `[lo, hi)`.
pub fn uniform(rng: &mut impl Rng, lo: f64, hi: f64) -> f64 {
    rng.random_range(lo..hi)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::refactor::characteristic_combinations;
    use crate::scalar::GaussianRational;

    type Q = GaussianRational;

    #[test]
    fn deterministic_per_seed() {
        let kind = InstanceKind::<Q>::parse("pair-B=I").unwrap();
        let a = sample_instance(&kind, 42).unwrap();
        let b = sample_instance(&kind, 42).unwrap();
        assert_eq!(a, b);
        assert_ne!(a, sample_instance(&kind, 43).unwrap());
    }

    #[test]
    fn accepted_pairs_have_invertible_p1() {
        for name in ["identity", "diag", "jordan", "rotation"] {
            let b: Mat2<Q> = catalog_b(name).unwrap();
            for seed in 0..20 {
                let v = sample_instance(&InstanceKind::Pair(b.clone()), seed).unwrap();
                let (p1, _) = characteristic_combinations(&v[0], &v[1], &b);
                assert!(!p1.det().is_zero());
            }
        }
    }

    #[test]
    fn entries_are_bounded() {
        let mut rng = trial_rng(7, 3);
        for _ in 0..200 {
            let z: Q = gaussian_int(&mut rng);
            let c = z.to_complex();
            assert!(c.re.abs() <= 3.0 && c.im.abs() <= 3.0);
        }
    }

    #[test]
    fn impossible_predicate_exhausts() {
        let mut rng = trial_rng(1, 0);
        let r: Result<()> = sample_until(&mut rng, |_| Err(Error::SingularP1));
        assert_eq!(r, Err(Error::SamplingExhausted(MAX_REJECTIONS)));
        let singular = InstanceKind::Pair(Mat2::<Q>::zero());
        assert_eq!(
            sample_instance(&singular, 5),
            Err(Error::SamplingExhausted(MAX_REJECTIONS))
        );
    }

    #[test]
    fn streams_differ_by_trial() {
        let a: Q = gaussian_int(&mut trial_rng(9, 0));
        let b: Vec<Q> = (1..10)
            .map(|t| gaussian_int(&mut trial_rng(9, t)))
            .collect();
        assert!(b.iter().any(|x| *x != a));
        assert_ne!(suite_seed(1, "a"), suite_seed(1, "b"));
    }

    #[test]
    fn kind_parsing() {
        assert!(matches!(
            InstanceKind::<Q>::parse("triple-B=jordan"),
            Ok(InstanceKind::Triple(_))
        ));
        assert!(InstanceKind::<Q>::parse("pair-B=nope").is_err());
        assert!(InstanceKind::<Q>::parse("quad-B=I").is_err());
    }
}
