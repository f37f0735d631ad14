//! Exact computer-algebra engine for the K-family of R-matrices.
//!
//! Everything lives in the rational function field over the parameters
//! `K, p, q, g, h, u, mu`. Identities are verified by exact cancellation;
//! there is no floating point anywhere in this crate.

pub mod catalog;
pub mod contraction;
pub mod error;
pub mod identities;
pub mod ncalgebra;
pub mod plane;
pub mod pmatrix;
pub mod rtt;
pub mod scalars;

pub use catalog::{Deformation, DeformationSpec};
pub use error::{Error, Result};
pub use pmatrix::{embed12, embed23, flip21, kron, perm_operator, Matrix, ParamMatrix, PermOperator};
pub use scalars::{rat, Monomial, Poly, QuadExt, RatFunc, Rational, Scalar, Var};

#[cfg(test)]
pub(crate) mod testutil;
