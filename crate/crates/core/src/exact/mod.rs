//! Exact rational and cyclotomic field arithmetic.
//!
//! Everything downstream (characters, eigenspaces, L-values) is built on the
//! types here. No floating point enters any rank, kernel, or dimension
//! computation; `Cyclotomic::to_complex` exists for display and smoke tests
//! only.

pub mod cyclotomic;
pub mod matrix;
pub mod numtheory;
pub mod poly;

pub use cyclotomic::Cyclotomic;
pub use matrix::CycloMatrix;
pub use poly::{cyclotomic_polynomial, CycloPoly, RatPoly};

/// Exact rational scalar: arbitrary-precision numerator and denominator,
/// always in lowest terms with positive denominator.
pub type Rational = num_rational::BigRational;

/// Arbitrary-precision integer.
pub type Integer = num_bigint::BigInt;

/// Rational from an integer pair, for readability at call sites.
pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(Integer::from(num), Integer::from(den))
}

/// Rational from an integer.
pub fn rat_int(num: i64) -> Rational {
    Rational::from_integer(Integer::from(num))
}
