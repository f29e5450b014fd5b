//! Exact computer algebra for Schubert and key polynomials.
//!
//! The crate computes Schubert polynomials (via divided differences), key
//! polynomials (via Demazure operators), the lower/upper bound polynomials
//! attached to a box diagram through Schubert-matroid column dominance, and
//! the dual characters of flagged Weyl modules obtained from exact ranks of
//! spans of symbolic minors. A Lorentzian-polynomial checker built on exact
//! arithmetic rounds out the toolkit.
//!
//! All arithmetic is exact: polynomial coefficients are arbitrary-precision
//! integers or rationals, ranks are computed by fraction-free elimination,
//! and eigenvalue sign counts come from sign variations of exact
//! characteristic polynomials. No floating point anywhere.

pub mod characters;
pub mod combinat;
pub mod diagrams;
pub mod error;
pub mod lorentz;
pub mod polyring;
pub mod weyl;

use num_bigint::BigInt;
use num_rational::BigRational;

/// Sparse polynomial with arbitrary-precision integer coefficients.
pub type Poly = polyring::MPoly<BigInt>;
/// Sparse polynomial with arbitrary-precision rational coefficients.
pub type RatPoly = polyring::MPoly<BigRational>;

pub use error::RangeError;
pub use polyring::{Coeff, ExponentVec};
