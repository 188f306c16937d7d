//! Exact algebra for quasi-ordinary polynomials: Laurent and `y`-polynomial
//! arithmetic, adic expansions and approximate roots, characteristic
//! sequences, generalized Newton polygons, an irreducibility criterion, a
//! fractional power series root oracle and the coordinate (embedding)
//! decision.
//!
//! Everything is generic over [`Scalar`]; the aliases at the bottom of this
//! file fix the exact rational instance used by the CLI and the tests.

pub mod adic;
pub mod charseq;
pub mod embedding;
pub mod error;
pub mod exponent;
pub mod gnp;
pub mod irreducibility;
pub mod lattice;
pub mod laurent;
pub mod resultant;
pub mod roots;
pub mod scalar;
pub mod text;
pub mod univariate;
pub mod ypoly;

pub use error::{Error, Result};
pub use exponent::{grlex_cmp, valuation_cmp, ExponentVec};
pub use laurent::{LaurentPoly, OrderData};
pub use scalar::{q, Scalar};
pub use ypoly::YPoly;

pub use num_bigint::BigInt;
pub use num_rational::BigRational;

/// Exact rationals.
pub type Q = BigRational;
pub type LaurentPolyQ = LaurentPoly<Q>;
pub type YPolyQ = YPoly<Q>;
pub type LaurentPolyF64 = LaurentPoly<f64>;
pub type YPolyF64 = YPoly<f64>;
