//! Yang–Baxter maps from re-factorization of first-degree 2×2 matrix
//! polynomials `A - ζB`, with exact (Gaussian-rational) and float backends
//! and a randomized verifier.

pub mod dense;
pub mod error;
pub mod json;
pub mod leaf;
pub mod limits;
pub mod mat2;
pub mod pencil;
pub mod refactor;
pub mod scalar;
pub mod sklyanin;
pub mod verify;

pub use error::{Error, Result};
pub use mat2::Mat2;
pub use pencil::{MatrixPencil, PencilInvariants};
pub use scalar::{ComplexFloat, Dual, GaussianRational, Over, Scalar};
