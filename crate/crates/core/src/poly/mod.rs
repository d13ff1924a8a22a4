//! Exact coefficient arithmetic, monomials, monomial orders and sparse
//! multivariate polynomials.

mod field;
mod monomial;
mod order;
mod parse;
mod polynomial;
mod ring;

pub use field::{Field, Scalar};
pub use monomial::Monomial;
pub use order::MonomialOrder;
pub use parse::parse_poly;
pub use polynomial::Polynomial;
pub use ring::{make_ring, Ring, RingExt, VarBlock};

pub(crate) use polynomial::same_ring;

/// Default prime for computations over a finite field.
pub const DEFAULT_PRIME: u64 = 32003;
