//! Exact arithmetic: arbitrary-precision rationals, dense univariate
//! polynomials, the rational-function field built on them, and exact
//! matrix algorithms (characteristic polynomials, fraction-free
//! determinants).

mod matrix;
mod poly;
mod ratfun;

pub use matrix::{char_poly, poly_matrix_det, ratfun_matrix_det, solve_linear_system, Matrix};
pub use poly::Polynomial;
pub use ratfun::RationalFunction;

use num_bigint::BigInt;
use thiserror::Error;

/// Coefficient field for every polynomial in the crate. `BigRational`
/// already maintains the canonical form we need: reduced, positive
/// denominator, zero as 0/1.
pub type Rational = num_rational::BigRational;

/// Shorthand for an integer-valued rational.
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Shorthand for the fraction n/d.
pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("polynomial has a nonzero coefficient at odd degree {degree}")]
    NonEvenPolynomial { degree: usize },
}
