//! Exact computational commutative algebra for Hilbert schemes of pairs of linear spaces.
//!
//! Polynomials have rational coefficients in variables `x_0..x_n`. The crate covers
//! Gröbner bases, Hilbert polynomials, free resolutions, Borel-fixed ideals, tangent
//! spaces to the Hilbert scheme, versal deformation checks, and divisor cone arithmetic.

pub mod borel;
pub mod catalog;
pub mod cones;
pub mod deformation;
pub mod error;
mod gb;
pub mod groebner;
pub mod hilbert;
pub mod linalg;
pub mod poly;
pub mod resolution;
pub mod tangent;

pub use error::{Error, Result};
pub use groebner::{GroebnerBasis, Ideal};
pub use poly::{parse_poly, Coeff, Monomial, MonomialOrder, Polynomial};
