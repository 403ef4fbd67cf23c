//! Exact invariants of plane curve singularities and the global
//! constructions built from them: monodromy characteristic polynomials,
//! embedded resolution trees, cyclic Belyi covers, Alexander polynomials of
//! plane curves via superabundance, and Mordell-Weil rank bounds for
//! isotrivial abelian varieties over `ℂ(x, y)`.
//!
//! The algebra layer is generic over its scalar type; the aliases below fix
//! the concrete types used throughout the rest of the crate.

pub mod algebra;
pub mod alexander;
pub mod belyi;
pub mod error;
pub mod fixtures;
pub mod mordell_weil;
pub mod resolution;
pub mod singularity;

use num_bigint::BigInt;
use num_rational::BigRational;

pub use algebra::cyclo_number::CyclotomicNumber;
pub use algebra::cyclotomic::{cyclotomic, factor_cyclotomic, CyclotomicProduct};
pub use algebra::euler_phi;
pub use algebra::matrix::{rank, Matrix};
pub use algebra::polynomial::Polynomial;
pub use error::{Error, Result};

/// Integer polynomial in `t`, lowest degree first.
pub type IntPolynomial = Polynomial<BigInt>;

/// Rational polynomial in `t`.
pub type RatPolynomial = Polynomial<BigRational>;

/// Matrix with entries in a single cyclotomic field.
pub type CycloMatrix = Matrix<CyclotomicNumber>;
