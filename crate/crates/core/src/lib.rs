//! Exact computer algebra for pairs of matrices `(X, Y)`: the commuting
//! scheme, the diagonal commutator scheme, its Gröbner degeneration along a
//! one-parameter subgroup, the upper-upper scheme and its per-permutation
//! components.
//!
//! The polynomial kernel ([`polyring`], [`groebner`], [`linalg`]) is generic
//! over the coefficient field through the [`Field`] trait. Everything that
//! deals with the concrete schemes works over the exact rationals; the
//! aliases below name those instantiations.

pub mod error;
pub mod groebner;
pub mod hilbert;
pub mod linalg;
pub mod permlab;
pub mod polyring;
pub mod scalar;
pub mod schemes;

pub use error::{Error, Result};
pub use scalar::Field;

/// Arbitrary-precision rational, always in lowest terms.
pub type Rational = num_rational::BigRational;
/// Arbitrary-precision integer.
pub type Integer = num_bigint::BigInt;
/// Polynomial with rational coefficients.
pub type Poly = polyring::Polynomial<Rational>;
/// Ideal generators with rational coefficients.
pub type Ideal = groebner::IdealSpec<Rational>;
/// Reduced Gröbner basis with rational coefficients.
pub type Basis = groebner::GroebnerBasis<Rational>;
/// Dense matrix of rationals.
pub type RatMatrix = linalg::Matrix<Rational>;
