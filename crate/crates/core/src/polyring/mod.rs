//! Exact multivariate polynomials over a bigraded variable set.

mod monomial;
mod order;
mod polynomial;
mod ring;

pub use monomial::Monomial;
pub use order::{TermOrder, WeightVector};
pub use polynomial::{weight_initial_form, Polynomial};
pub use ring::{Family, Ring, VariableId};
