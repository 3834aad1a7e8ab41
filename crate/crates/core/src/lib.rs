//! Exact-arithmetic laboratory for graph polynomials.
//!
//! Everything here works over arbitrary-precision rationals: graph models and
//! catalogs ([`graphs`]), sparse multivariate Laurent polynomials ([`polys`]),
//! the named graph polynomials and their defining frameworks ([`zoo`]), a
//! parser/evaluator for second-order definable polynomial terms ([`soleval`]),
//! distinctive-power comparison over finite catalogs ([`equiv`]), exact
//! root-location tests and stability constructions ([`roots`]), and runnable
//! verification suites ([`suites`]).

pub mod equiv;
pub mod error;
pub mod graphs;
pub mod guards;
pub(crate) mod linalg;
pub mod polys;
pub mod roots;
pub mod soleval;
pub mod suites;
pub mod zoo;

pub use error::{Error, Result};
