//! Rational functions in one formal variable, the coefficient field for the
//! symmetric-function engine.
//!
//! Canonical form: numerator and denominator coprime, denominator monic and
//! nonzero, zero represented as 0/1. Structural equality of canonical forms
//! is semantic equality, so `RatFunc` derives `PartialEq`/`Hash`.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num::{One, Zero};

use super::poly::Poly;
use super::Rat;

/// A reduced ratio of two polynomials.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RatFunc {
    num: Poly,
    den: Poly,
}

/// Failure of [`RatFunc::to_int_poly`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ToIntPolyError {
    /// The reduced denominator is not the constant 1.
    NonPolynomial,
    /// The value is a polynomial but has a non-integer coefficient.
    NonIntegerCoefficients,
}

impl fmt::Display for ToIntPolyError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ToIntPolyError::NonPolynomial => write!(f, "value is not a polynomial"),
            ToIntPolyError::NonIntegerCoefficients => {
                write!(f, "polynomial has non-integer coefficients")
            }
        }
    }
}

impl std::error::Error for ToIntPolyError {}

impl RatFunc {
    /// Construct and normalize num/den. Panics if `den` is zero.
    pub fn new(num: Poly, den: Poly) -> Self {
        assert!(!den.is_zero(), "RatFunc::new: zero denominator");
        Self::normalized(num, den)
    }

    fn normalized(num: Poly, den: Poly) -> Self {
        if num.is_zero() {
            return RatFunc {
                num: Poly::zero(),
                den: Poly::one(),
            };
        }
        let g = Poly::gcd(&num, &den);
        let (num, den) = if g.is_one() {
            (num, den)
        } else {
            (num.div_rem(&g).0, den.div_rem(&g).0)
        };
        let lc = den.leading_coeff().expect("nonzero denominator").clone();
        RatFunc {
            num: num.scalar_div(&lc),
            den: den.scalar_div(&lc),
        }
    }

    pub fn zero() -> Self {
        RatFunc {
            num: Poly::zero(),
            den: Poly::one(),
        }
    }

    pub fn one() -> Self {
        RatFunc {
            num: Poly::one(),
            den: Poly::one(),
        }
    }

    /// The formal variable as a rational function.
    pub fn var() -> Self {
        RatFunc {
            num: Poly::var(),
            den: Poly::one(),
        }
    }

    pub fn constant(c: Rat) -> Self {
        RatFunc {
            num: Poly::constant(c),
            den: Poly::one(),
        }
    }

    pub fn from_int(n: i64) -> Self {
        Self::constant(super::rat_int(n))
    }

    pub fn from_poly(p: Poly) -> Self {
        RatFunc {
            num: p,
            den: Poly::one(),
        }
    }

    pub fn numerator(&self) -> &Poly {
        &self.num
    }

    pub fn denominator(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// True if the reduced denominator is 1.
    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    /// The constant value, if the function is a constant.
    pub fn as_constant(&self) -> Option<Rat> {
        if self.den.is_one() && self.num.is_constant() {
            Some(self.num.coeff(0))
        } else {
            None
        }
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inverse(&self) -> Option<RatFunc> {
        if self.is_zero() {
            return None;
        }
        Some(Self::normalized(self.den.clone(), self.num.clone()))
    }

    /// Integer power, negative exponents via the inverse.
    /// Panics when raising zero to a negative power.
    pub fn int_pow(&self, k: i64) -> RatFunc {
        if k == 0 {
            return RatFunc::one();
        }
        let base = if k < 0 {
            self.inverse()
                .expect("RatFunc::int_pow: negative power of zero")
        } else {
            self.clone()
        };
        let mut e = k.unsigned_abs();
        let mut result = RatFunc::one();
        let mut b = base;
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &b;
            }
            e >>= 1;
            if e > 0 {
                b = &b * &b;
            }
        }
        result
    }

    /// Substitute the variable by its reciprocal and renormalize:
    /// f(x) becomes f(1/x). This is the t = q^{-1} specialization map.
    pub fn reciprocal_subst(&self) -> RatFunc {
        if self.is_zero() {
            return RatFunc::zero();
        }
        let dn = self.num.degree().expect("nonzero numerator");
        let dd = self.den.degree().expect("nonzero denominator");
        let rn = self.num.reversed();
        let rd = self.den.reversed();
        if dd >= dn {
            Self::normalized(&rn * &Poly::monomial(Rat::one(), dd - dn), rd)
        } else {
            Self::normalized(rn, &rd * &Poly::monomial(Rat::one(), dn - dd))
        }
    }

    /// Exact evaluation; `None` when the denominator vanishes at `x`.
    pub fn eval_at(&self, x: &Rat) -> Option<Rat> {
        let d = self.den.eval_at(x);
        if d.is_zero() {
            return None;
        }
        Some(self.num.eval_at(x) / d)
    }

    /// Extract the value as a polynomial with integer coefficients.
    ///
    /// Succeeds iff the reduced denominator is 1 and every numerator
    /// coefficient is an integer; returns the numerator.
    pub fn to_int_poly(&self) -> Result<Poly, ToIntPolyError> {
        if !self.den.is_one() {
            return Err(ToIntPolyError::NonPolynomial);
        }
        if !self.num.has_integer_coeffs() {
            return Err(ToIntPolyError::NonIntegerCoefficients);
        }
        Ok(self.num.clone())
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

// ---- Field arithmetic ----

impl Add for &RatFunc {
    type Output = RatFunc;
    fn add(self, rhs: &RatFunc) -> RatFunc {
        let num = &(&self.num * &rhs.den) + &(&rhs.num * &self.den);
        let den = &self.den * &rhs.den;
        RatFunc::normalized(num, den)
    }
}

impl Sub for &RatFunc {
    type Output = RatFunc;
    fn sub(self, rhs: &RatFunc) -> RatFunc {
        let num = &(&self.num * &rhs.den) - &(&rhs.num * &self.den);
        let den = &self.den * &rhs.den;
        RatFunc::normalized(num, den)
    }
}

impl Mul for &RatFunc {
    type Output = RatFunc;
    fn mul(self, rhs: &RatFunc) -> RatFunc {
        if self.is_zero() || rhs.is_zero() {
            return RatFunc::zero();
        }
        RatFunc::normalized(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl Div for &RatFunc {
    type Output = RatFunc;
    #[allow(clippy::suspicious_arithmetic_impl)] // division is multiplication by the inverse
    fn div(self, rhs: &RatFunc) -> RatFunc {
        let inv = rhs
            .inverse()
            .expect("RatFunc division by the zero rational function");
        self * &inv
    }
}

impl Neg for &RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl Add for RatFunc {
    type Output = RatFunc;
    fn add(self, rhs: RatFunc) -> RatFunc {
        &self + &rhs
    }
}

impl Sub for RatFunc {
    type Output = RatFunc;
    fn sub(self, rhs: RatFunc) -> RatFunc {
        &self - &rhs
    }
}

impl Mul for RatFunc {
    type Output = RatFunc;
    fn mul(self, rhs: RatFunc) -> RatFunc {
        &self * &rhs
    }
}

impl Div for RatFunc {
    type Output = RatFunc;
    fn div(self, rhs: RatFunc) -> RatFunc {
        &self / &rhs
    }
}

impl Neg for RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat_int;

    fn q_minus(c: i64) -> Poly {
        Poly::from_int_coeffs(&[-c, 1])
    }

    #[test]
    fn partial_fraction_sum() {
        // 1/(q-1) + 1/(q+1) = 2q/(q^2-1)
        let a = RatFunc::new(Poly::one(), q_minus(1));
        let b = RatFunc::new(Poly::one(), q_minus(-1));
        let sum = &a + &b;
        assert_eq!(sum.numerator(), &Poly::from_int_coeffs(&[0, 2]));
        assert_eq!(sum.denominator(), &Poly::from_int_coeffs(&[-1, 0, 1]));
    }

    #[test]
    fn cancellation_to_one() {
        let f = RatFunc::new(q_minus(1), q_minus(1));
        assert!(f.is_one());
    }

    #[test]
    fn int_pow_negative() {
        // q^{-2} = 1/q^2
        let f = RatFunc::var().int_pow(-2);
        assert_eq!(f.numerator(), &Poly::one());
        assert_eq!(f.denominator(), &Poly::from_int_coeffs(&[0, 0, 1]));
        assert!(RatFunc::var().int_pow(0).is_one());
    }

    #[test]
    fn monic_denominator_normalization() {
        // 1/(1-q) normalizes to -1/(q-1)
        let f = RatFunc::new(Poly::one(), Poly::from_int_coeffs(&[1, -1]));
        assert_eq!(f.numerator(), &Poly::from_int_coeffs(&[-1]));
        assert_eq!(f.denominator(), &q_minus(1));
        // and equals the directly normalized form
        let g = RatFunc::new(Poly::from_int_coeffs(&[-1]), q_minus(1));
        assert_eq!(f, g);
    }

    #[test]
    fn to_int_poly_cases() {
        let p = Poly::from_int_coeffs(&[0, -1, 2, -1]);
        assert_eq!(RatFunc::from_poly(p.clone()).to_int_poly().unwrap(), p);
        let bad = RatFunc::new(Poly::one(), q_minus(1));
        assert_eq!(bad.to_int_poly(), Err(ToIntPolyError::NonPolynomial));
        let half_q = RatFunc::constant(crate::arith::rat(1, 2)) * RatFunc::var();
        assert_eq!(
            half_q.to_int_poly(),
            Err(ToIntPolyError::NonIntegerCoefficients)
        );
    }

    #[test]
    fn reciprocal_subst_basics() {
        // q -> 1/q
        let inv = RatFunc::var().reciprocal_subst();
        assert_eq!(inv, RatFunc::var().int_pow(-1));
        // 1/(1-q) -> q/(q-1)
        let f = RatFunc::new(Poly::one(), Poly::from_int_coeffs(&[1, -1]));
        let g = f.reciprocal_subst();
        assert_eq!(g, RatFunc::new(Poly::var(), q_minus(1)));
        // involution
        assert_eq!(g.reciprocal_subst(), f);
        // constants fixed
        let c = RatFunc::from_int(7);
        assert_eq!(c.reciprocal_subst(), c);
    }

    #[test]
    fn eval_at_skips_poles() {
        let f = RatFunc::new(Poly::one(), q_minus(1));
        assert_eq!(f.eval_at(&rat_int(1)), None);
        assert_eq!(f.eval_at(&rat_int(3)), Some(crate::arith::rat(1, 2)));
    }

    #[test]
    #[should_panic(expected = "zero rational function")]
    fn division_by_zero_panics() {
        let _ = &RatFunc::one() / &RatFunc::zero();
    }
}
