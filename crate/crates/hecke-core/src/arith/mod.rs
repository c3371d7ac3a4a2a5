//! Exact arithmetic in one formal variable.
//!
//! Everything downstream computes with coefficients from this module:
//! - [`Rat`]: arbitrary-precision rationals (re-exported from `num`)
//! - [`Poly`]: dense univariate polynomials over `Rat`
//! - [`RatFunc`]: reduced ratios of two polynomials, the coefficient field
//!
//! The engine fixes a single formal variable, rendered as `q`. The
//! Hall-Littlewood parameter `t` and the Hecke parameter `q` are both
//! represented by it; the substitution t = q^{-1} is
//! [`RatFunc::reciprocal_subst`].

pub mod poly;
pub mod ratfunc;

pub use poly::{Poly, PolyParseError};
pub use ratfunc::{RatFunc, ToIntPolyError};

/// Arbitrary-precision integer.
pub type Int = num::BigInt;
/// Arbitrary-precision rational, always in lowest terms with positive denominator.
pub type Rat = num::BigRational;

/// Shorthand for an integer rational.
pub fn rat_int(n: i64) -> Rat {
    Rat::from_integer(Int::from(n))
}

/// Shorthand for the rational n/d. Panics if d = 0.
pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(Int::from(n), Int::from(d))
}
