//! The Sklyanin bracket restricted to pencils `A - ζB` with fixed `B`.
//!
//! On these pencils the bracket is linear in `A`:
//!
//! ```text
//! {a1,a2} = a1b2 - a2b1    {a1,a3} = a3b1 - a1b3    {a1,a4} = a3b2 - a2b3
//! {a2,a3} = a4b1 - a1b4    {a2,a4} = a4b2 - a2b4    {a3,a4} = a3b4 - a4b3
//! ```
//!
//! `f0 = det A` and `f1 = a1b4 + a4b1 - a3b2 - a2b3` are its Casimirs. The
//! bracket is the Lie–Poisson structure of a four-dimensional Lie algebra
//! whose structure constants depend on `B` (see [`LieStructure`]).
//!
//! Poisson-map checks are pointwise: the Jacobian `DR` of a map comes from
//! dual-number evaluation, and `DR · J_in · DRᵀ` is compared with `J_out` at the
//! image point. Over the exact backend a handful of random rational points is
//! enough to catch a nonzero rational defect.

use std::sync::Arc;

use crate::dense::DenseMatrix;
use crate::error::Result;
use crate::mat2::Mat2;
use crate::scalar::{Dual, Over, Scalar};

/// Antisymmetric 4×4 matrix `J_B(A)` with `J[i][j] = {a_i, a_j}` (zero-based).
pub type StructureMatrix4<S> = DenseMatrix<S>;

pub fn structure_matrix<S: Scalar>(a: &Mat2<S>, b: &Mat2<S>) -> StructureMatrix4<S> {
    let [a1, a2, a3, a4] = a.entries();
    let [b1, b2, b3, b4] = b.entries();
    let upper = [
        (0, 1, a1.clone() * b2.clone() - a2.clone() * b1.clone()),
        (0, 2, a3.clone() * b1.clone() - a1.clone() * b3.clone()),
        (0, 3, a3.clone() * b2.clone() - a2.clone() * b3.clone()),
        (1, 2, a4.clone() * b1 - a1 * b4.clone()),
        (1, 3, a4.clone() * b2 - a2 * b4.clone()),
        (2, 3, a3 * b4 - a4 * b3),
    ];
    let mut j = DenseMatrix::zeros(4, 4);
    for (r, c, v) in upper {
        j[(r, c)] = v.clone();
        j[(c, r)] = -v;
    }
    j
}

/// `∇f0 = (a4, -a3, -a2, a1)`.
pub fn grad_f0<S: Scalar>(a: &Mat2<S>) -> [S; 4] {
    [a.a4.clone(), -a.a3.clone(), -a.a2.clone(), a.a1.clone()]
}

/// `∇f1 = (b4, -b3, -b2, b1)`.
pub fn grad_f1<S: Scalar>(b: &Mat2<S>) -> [S; 4] {
    [b.a4.clone(), -b.a3.clone(), -b.a2.clone(), b.a1.clone()]
}

/// `J_B(A) · ∇g`; zero for every `A` exactly when `g` is a Casimir.
pub fn casimir_defect<S: Scalar>(a: &Mat2<S>, b: &Mat2<S>, grad: &[S; 4]) -> Vec<S> {
    structure_matrix(a, b).matvec(grad)
}

pub fn casimir_check<S: Scalar>(a: &Mat2<S>, b: &Mat2<S>) -> bool {
    [grad_f0(a), grad_f1(b)]
        .iter()
        .all(|g| casimir_defect(a, b, g).iter().all(Scalar::is_zero))
}

/// Cyclic sums `Σ_l J_il ∂_l J_jk + J_jl ∂_l J_ki + J_kl ∂_l J_ij` for `i < j < k`.
///
/// `structure` must be affine in `A`; its partial derivatives are taken as
/// `structure(A + E_l) - structure(A)`.
pub fn jacobiator<S, F>(structure: F, a: &Mat2<S>) -> Vec<S>
where
    S: Scalar,
    F: Fn(&Mat2<S>) -> DenseMatrix<S>,
{
    let j = structure(a);
    let partials: Vec<DenseMatrix<S>> = (0..4)
        .map(|l| {
            let mut shifted = a.clone();
            *shifted.entry_mut(l) = shifted.entry(l).clone() + S::one();
            let js = structure(&shifted);
            DenseMatrix::from_fn(4, 4, |r, c| js[(r, c)].clone() - j[(r, c)].clone())
        })
        .collect();
    let term = |i: usize, jj: usize, k: usize| {
        (0..4).fold(S::zero(), |acc, l| {
            acc + j[(i, l)].clone() * partials[l][(jj, k)].clone()
        })
    };
    let mut out = Vec::with_capacity(4);
    for i in 0..4 {
        for jj in i + 1..4 {
            for k in jj + 1..4 {
                out.push(term(i, jj, k) + term(jj, k, i) + term(k, i, jj));
            }
        }
    }
    out
}

/// Antisymmetry plus the Jacobi identity for an affine structure function.
pub fn is_poisson_structure<S, F>(structure: F, a: &Mat2<S>) -> bool
where
    S: Scalar,
    F: Fn(&Mat2<S>) -> DenseMatrix<S>,
{
    structure(a).is_antisymmetric() && jacobiator(structure, a).iter().all(Scalar::is_zero)
}

pub fn jacobi_check<S: Scalar>(b: &Mat2<S>, a: &Mat2<S>) -> bool {
    is_poisson_structure(|x| structure_matrix(x, b), a)
}

/// Four-dimensional Lie algebra with `[e_i, e_j] = Σ_k c[i][j][k] e_k`.
#[derive(Clone, Debug, PartialEq)]
pub struct LieStructure<S> {
    pub constants: [[[S; 4]; 4]; 4],
}

impl<S: Scalar> LieStructure<S> {
    pub fn from_b(b: &Mat2<S>) -> Self {
        let [b1, b2, b3, b4] = b.entries();
        let z = S::zero;
        let mut c: [[[S; 4]; 4]; 4] =
            std::array::from_fn(|_| std::array::from_fn(|_| std::array::from_fn(|_| z())));
        let mut set = |i: usize, j: usize, v: [S; 4]| {
            c[j][i] = v.clone().map(|x| -x);
            c[i][j] = v;
        };
        // [e1,e2] = b2 e1 - b1 e2
        set(0, 1, [b2.clone(), -b1.clone(), z(), z()]);
        // [e1,e3] = -b3 e1 + b1 e3
        set(0, 2, [-b3.clone(), z(), b1.clone(), z()]);
        // [e1,e4] = -b3 e2 + b2 e3
        set(0, 3, [z(), -b3.clone(), b2.clone(), z()]);
        // [e2,e3] = -b4 e1 + b1 e4
        set(1, 2, [-b4.clone(), z(), z(), b1]);
        // [e2,e4] = -b4 e2 + b2 e4
        set(1, 3, [z(), -b4.clone(), z(), b2]);
        // [e3,e4] = b4 e3 - b3 e4
        set(2, 3, [z(), z(), b4, -b3]);
        Self { constants: c }
    }

    pub fn bracket(&self, i: usize, j: usize) -> &[S; 4] {
        &self.constants[i][j]
    }

    /// `{a_i, a_j} = <a, [e_i, e_j]>` on the dual space.
    pub fn lie_poisson_matrix(&self, a: &Mat2<S>) -> DenseMatrix<S> {
        let coords = a.entries();
        DenseMatrix::from_fn(4, 4, |i, j| {
            self.constants[i][j]
                .iter()
                .zip(&coords)
                .fold(S::zero(), |acc, (c, x)| acc + c.clone() * x.clone())
        })
    }

    pub fn is_antisymmetric(&self) -> bool {
        (0..4).all(|i| {
            (0..4).all(|j| {
                (0..4).all(|k| {
                    (self.constants[i][j][k].clone() + self.constants[j][i][k].clone()).is_zero()
                })
            })
        })
    }

    /// `[[e_i,e_j],e_k] + [[e_j,e_k],e_i] + [[e_k,e_i],e_j] = 0` for all triples.
    pub fn satisfies_jacobi(&self) -> bool {
        let c = &self.constants;
        let nested = |i: usize, j: usize, k: usize, l: usize| {
            (0..4).fold(S::zero(), |acc, m| {
                acc + c[i][j][m].clone() * c[m][k][l].clone()
            })
        };
        (0..4).all(|i| {
            (0..4).all(|j| {
                (0..4).all(|k| {
                    (0..4).all(|l| {
                        (nested(i, j, k, l) + nested(j, k, i, l) + nested(k, i, j, l)).is_zero()
                    })
                })
            })
        })
    }

    pub fn is_abelian(&self) -> bool {
        self.constants
            .iter()
            .flatten()
            .flatten()
            .all(Scalar::is_zero)
    }
}

pub fn lie_structure_constants<S: Scalar>(b: &Mat2<S>) -> LieStructure<S> {
    LieStructure::from_b(b)
}

/// A rational map `Cⁿ → Cⁿ` that can be evaluated over any scalar hosting `S`.
pub trait PointMap<S: Scalar> {
    fn dim(&self) -> usize;
    fn eval<T: Over<S>>(&self, p: &[T]) -> Result<Vec<T>>;
}

/// Jacobian `∂R_i/∂p_j` from `n` dual evaluations.
pub fn map_jacobian<S: Scalar, M: PointMap<S>>(map: &M, point: &[S]) -> Result<DenseMatrix<S>> {
    let n = point.len();
    let mut jac = DenseMatrix::zeros(map.dim(), n);
    for col in 0..n {
        let seeded: Vec<Dual<S>> = point
            .iter()
            .enumerate()
            .map(|(k, x)| {
                if k == col {
                    Dual::variable(x.clone())
                } else {
                    Dual::constant(x.clone())
                }
            })
            .collect();
        let image = map.eval(&seeded)?;
        for (row, y) in image.into_iter().enumerate() {
            jac[(row, col)] = y.deriv;
        }
    }
    Ok(jac)
}

/// Block function of a product bracket: coordinates of one factor to its
/// bracket matrix.
pub type BlockFn<S> = Arc<dyn Fn(&[S]) -> Result<DenseMatrix<S>> + Send + Sync>;

/// Block-diagonal bracket on a product of factors with `{x_i, y_j} = 0`
/// across factors.
#[derive(Clone)]
pub struct ProductBracket<S> {
    dims: Vec<usize>,
    blocks: Vec<BlockFn<S>>,
}

impl<S: Scalar> ProductBracket<S> {
    pub fn new(parts: Vec<(usize, BlockFn<S>)>) -> Self {
        let (dims, blocks) = parts.into_iter().unzip();
        Self { dims, blocks }
    }

    /// `J_B` on each of `factors` copies of `C⁴`.
    pub fn sklyanin(b: &Mat2<S>, factors: usize) -> Self {
        let b = b.clone();
        let block: BlockFn<S> = Arc::new(move |c: &[S]| {
            Ok(structure_matrix(
                &Mat2::from_entries([c[0].clone(), c[1].clone(), c[2].clone(), c[3].clone()]),
                &b,
            ))
        });
        Self::new(vec![(4, block); factors])
    }

    /// The same constant 2×2 block `{x1, x2} = c` on every factor.
    pub fn constant_2d(c: S, factors: usize) -> Self {
        let block: BlockFn<S> = Arc::new(move |_| {
            let mut m = DenseMatrix::zeros(2, 2);
            m[(0, 1)] = c.clone();
            m[(1, 0)] = -c.clone();
            Ok(m)
        });
        Self::new(vec![(2, block); factors])
    }

    pub fn dim(&self) -> usize {
        self.dims.iter().sum()
    }

    pub fn matrix(&self, point: &[S]) -> Result<DenseMatrix<S>> {
        assert_eq!(
            point.len(),
            self.dim(),
            "point does not match bracket dimension"
        );
        let mut off = 0;
        let mut blocks = Vec::with_capacity(self.blocks.len());
        for (d, f) in self.dims.iter().zip(&self.blocks) {
            blocks.push(f(&point[off..off + d])?);
            off += d;
        }
        Ok(DenseMatrix::block_diag(&blocks))
    }
}

/// Outcome of a Poisson-map test at one point.
#[derive(Clone, Debug)]
pub struct PoissonComparison<S> {
    /// `DR · J_in(p) · DRᵀ`.
    pub pushed: DenseMatrix<S>,
    /// `J_out(R(p))`.
    pub target: DenseMatrix<S>,
    pub holds: bool,
}

pub fn poisson_map_compare<S: Scalar, M: PointMap<S>>(
    map: &M,
    bracket_in: &ProductBracket<S>,
    bracket_out: &ProductBracket<S>,
    point: &[S],
    tol: f64,
) -> Result<PoissonComparison<S>> {
    let jac = map_jacobian(map, point)?;
    let image = map.eval(point)?;
    let pushed = jac
        .matmul(&bracket_in.matrix(point)?)
        .matmul(&jac.transpose());
    let target = bracket_out.matrix(&image)?;
    let holds = pushed.approx_eq(&target, tol);
    Ok(PoissonComparison {
        pushed,
        target,
        holds,
    })
}

/// `DR · J_in(p) · DRᵀ = J_out(R(p))` entrywise.
pub fn poisson_map_check<S: Scalar, M: PointMap<S>>(
    map: &M,
    bracket_in: &ProductBracket<S>,
    bracket_out: &ProductBracket<S>,
    point: &[S],
    tol: f64,
) -> Result<bool> {
    Ok(poisson_map_compare(map, bracket_in, bracket_out, point, tol)?.holds)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::GaussianRational;

    type Q = GaussianRational;
    type M = Mat2<Q>;

    fn q(n: i64) -> Q {
        Q::from_i64(n)
    }

    fn m(e: [[i64; 2]; 2]) -> M {
        M::from_i64(e)
    }

    #[test]
    fn identity_leading_term_brackets() {
        // {a1,a2} = -a2, {a1,a3} = a3, {a2,a3} = a4 - a1, {a2,a4} = -a2, {a3,a4} = a3
        let a = m([[2, 3], [5, 7]]);
        let j = structure_matrix(&a, &M::identity());
        assert_eq!(j[(0, 1)], q(-3));
        assert_eq!(j[(0, 2)], q(5));
        assert_eq!(j[(0, 3)], q(0));
        assert_eq!(j[(1, 2)], q(7 - 2));
        assert_eq!(j[(1, 3)], q(-3));
        assert_eq!(j[(2, 3)], q(5));
        assert!(j.is_antisymmetric());
    }

    #[test]
    fn zero_a_gives_zero_structure() {
        let j = structure_matrix(&M::zero(), &m([[1, 2], [3, 4]]));
        assert!(j.iter().all(Scalar::is_zero));
    }

    #[test]
    fn casimirs_at_worked_point() {
        assert!(casimir_check(&m([[2, 3], [5, 7]]), &M::identity()));
        // g = a1 is not a Casimir
        let a = m([[2, 3], [5, 7]]);
        let e1 = [q(1), q(0), q(0), q(0)];
        assert!(casimir_defect(&a, &M::identity(), &e1)
            .iter()
            .any(|x| !x.is_zero()));
    }

    #[test]
    fn jacobi_identity_and_corruption() {
        let b = m([[1, 2], [-1, 3]]);
        let a = m([[2, -1], [4, 1]]);
        assert!(jacobi_check(&b, &a));
        assert!(jacobi_check(&M::identity(), &a));
        let corrupted = |x: &M| {
            let mut j = structure_matrix(x, &b);
            j[(1, 0)] = j[(0, 1)].clone();
            j
        };
        assert!(!is_poisson_structure(corrupted, &a));
    }

    #[test]
    fn lie_constants_for_identity() {
        let lie = lie_structure_constants(&M::identity());
        let e = |k: usize, s: i64| {
            let mut v = [q(0), q(0), q(0), q(0)];
            v[k] = q(s);
            v
        };
        assert_eq!(lie.bracket(0, 1), &e(1, -1));
        assert_eq!(lie.bracket(0, 2), &e(2, 1));
        assert_eq!(lie.bracket(1, 2), &[q(-1), q(0), q(0), q(1)]);
        assert_eq!(lie.bracket(1, 3), &e(1, -1));
        assert_eq!(lie.bracket(2, 3), &e(2, 1));
        assert!(lie.bracket(0, 3).iter().all(Scalar::is_zero));
        assert!(lie.satisfies_jacobi());
    }

    #[test]
    fn zero_b_is_abelian() {
        assert!(lie_structure_constants(&M::zero()).is_abelian());
        assert!(!lie_structure_constants(&M::identity()).is_abelian());
    }

    #[test]
    fn lie_poisson_reproduces_structure_matrix() {
        let b = m([[2, -1], [3, 1]]);
        let a = m([[1, 4], [-2, 5]]);
        let lie = LieStructure::from_b(&b);
        assert!(lie.is_antisymmetric());
        assert_eq!(lie.lie_poisson_matrix(&a), structure_matrix(&a, &b));
    }

    struct Identity(usize);
    impl PointMap<Q> for Identity {
        fn dim(&self) -> usize {
            self.0
        }
        fn eval<T: Over<Q>>(&self, p: &[T]) -> Result<Vec<T>> {
            Ok(p.to_vec())
        }
    }

    struct Swap;
    impl PointMap<Q> for Swap {
        fn dim(&self) -> usize {
            8
        }
        fn eval<T: Over<Q>>(&self, p: &[T]) -> Result<Vec<T>> {
            Ok(p[4..].iter().chain(&p[..4]).cloned().collect())
        }
    }

    #[test]
    fn jacobian_of_identity_and_swap() {
        let p: Vec<Q> = (1..=8).map(q).collect();
        assert_eq!(
            map_jacobian(&Identity(8), &p).unwrap(),
            DenseMatrix::identity(8)
        );
        let jac = map_jacobian(&Swap, &p).unwrap();
        for i in 0..8 {
            for j in 0..8 {
                let expected = if j == (i + 4) % 8 { q(1) } else { q(0) };
                assert_eq!(jac[(i, j)], expected);
            }
        }
    }

    #[test]
    fn swap_is_poisson() {
        let b = m([[1, 1], [0, 1]]);
        let br = ProductBracket::sklyanin(&b, 2);
        let p: Vec<Q> = [2, 1, 1, 1, 1, 0, 0, 2].into_iter().map(q).collect();
        assert!(poisson_map_check(&Swap, &br, &br, &p, 0.0).unwrap());
    }
}
