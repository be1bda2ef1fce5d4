//! Exact arithmetic and diagnostics for polynomials that share a root with
//! each of their derivatives.
//!
//! The crate decides that property exactly (resultants over the
//! rationals), and computes the computable necessary conditions a
//! non-trivial example would have to satisfy: root-count and multiplicity
//! bounds, Newton power-sum relations, convex-hull checks on the roots,
//! `p`-adic binomial sieves and the index-set determinant sieve.

pub mod ca;
pub mod error;
pub mod exactnum;
pub mod hull;
pub mod matrix;
pub mod newton;
pub mod par;
pub mod poly;
pub mod report;
pub mod search;
pub mod sieve;

pub use error::{Error, Result};
pub use exactnum::{Integer, Rational, Valuation};
pub use par::Execution;
pub use poly::{FactoredPoly, NormalizedCoeffs, Poly, Root};
