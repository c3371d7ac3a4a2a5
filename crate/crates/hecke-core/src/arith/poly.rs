//! Dense univariate polynomial over arbitrary-precision rationals.
//!
//! Coefficients are stored in ascending degree order. Invariant: the vector
//! is either empty (zero polynomial) or its last element is nonzero, so
//! structural equality is semantic equality.
//!
//! The canonical text form prints descending powers with explicit signs and
//! `^` for exponents, e.g. `-q^3+2q^2-q`; [`Poly::parse`] accepts the same
//! grammar.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num::{One, Signed, Zero};

use super::{Int, Rat};

/// A dense univariate polynomial with rational coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Poly {
    coeffs: Vec<Rat>,
}

impl Poly {
    fn normalized(mut coeffs: Vec<Rat>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    /// The zero polynomial.
    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    /// The constant polynomial 1.
    pub fn one() -> Self {
        Poly {
            coeffs: vec![Rat::one()],
        }
    }

    /// The formal variable itself (0 + 1*q).
    pub fn var() -> Self {
        Poly {
            coeffs: vec![Rat::zero(), Rat::one()],
        }
    }

    /// A constant polynomial. The zero constant yields the zero polynomial.
    pub fn constant(c: Rat) -> Self {
        Self::normalized(vec![c])
    }

    /// The monomial c * q^deg.
    pub fn monomial(c: Rat, deg: usize) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![Rat::zero(); deg + 1];
        coeffs[deg] = c;
        Poly { coeffs }
    }

    /// Construct from coefficients in ascending degree order; trailing zeros
    /// are stripped.
    pub fn from_coeffs(coeffs: Vec<Rat>) -> Self {
        Self::normalized(coeffs)
    }

    /// Convenience constructor from integer coefficients, ascending order.
    pub fn from_int_coeffs(coeffs: &[i64]) -> Self {
        Self::normalized(coeffs.iter().map(|&c| super::rat_int(c)).collect())
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    /// Coefficient of q^i (zero beyond the degree).
    pub fn coeff(&self, i: usize) -> Rat {
        self.coeffs.get(i).cloned().unwrap_or_else(Rat::zero)
    }

    /// Read-only access to the coefficient slice.
    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    /// Leading coefficient, or `None` for the zero polynomial.
    pub fn leading_coeff(&self) -> Option<&Rat> {
        self.coeffs.last()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// True if constant (including zero).
    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    /// True if every coefficient is an integer.
    pub fn has_integer_coeffs(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_integer())
    }

    /// Multiply every coefficient by a scalar.
    pub fn scalar_mul(&self, c: &Rat) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly {
            coeffs: self.coeffs.iter().map(|x| x * c).collect(),
        }
    }

    /// Divide every coefficient by a scalar. Panics if `c` is zero.
    pub fn scalar_div(&self, c: &Rat) -> Poly {
        assert!(!c.is_zero(), "Poly::scalar_div: division by zero");
        Poly {
            coeffs: self.coeffs.iter().map(|x| x / c).collect(),
        }
    }

    /// Divide by the leading coefficient; zero stays zero.
    pub fn make_monic(&self) -> Poly {
        match self.leading_coeff() {
            None => Poly::zero(),
            Some(lc) => {
                let lc = lc.clone();
                self.scalar_div(&lc)
            }
        }
    }

    /// q^k power via repeated squaring.
    pub fn pow(&self, exp: u32) -> Poly {
        if exp == 0 {
            return Poly::one();
        }
        let mut result = Poly::one();
        let mut base = self.clone();
        let mut e = exp;
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// Exact substitution via Horner's method.
    pub fn eval_at(&self, x: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Coefficient sequence reversed (q -> 1/q up to a power of q).
    pub fn reversed(&self) -> Poly {
        let mut coeffs = self.coeffs.clone();
        coeffs.reverse();
        Self::normalized(coeffs)
    }

    /// Multiplication by q^s (a coefficient shift).
    pub fn shifted(&self, s: usize) -> Poly {
        if self.is_zero() || s == 0 {
            return self.clone();
        }
        let mut coeffs = vec![Rat::zero(); s];
        coeffs.extend(self.coeffs.iter().cloned());
        Poly { coeffs }
    }

    /// Euclidean division: returns (quotient, remainder) with
    /// deg(remainder) < deg(divisor). Panics if `div` is zero.
    pub fn div_rem(&self, div: &Poly) -> (Poly, Poly) {
        assert!(!div.is_zero(), "Poly::div_rem: division by zero polynomial");
        let dd = div.degree().unwrap();
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return (Poly::zero(), self.clone());
        }
        let mut quot = vec![Rat::zero(); rem.len() - dd];
        let lead = &div.coeffs[dd];
        for i in (dd..rem.len()).rev() {
            if rem[i].is_zero() {
                continue;
            }
            let factor = &rem[i] / lead;
            quot[i - dd] = factor.clone();
            for (j, dc) in div.coeffs.iter().enumerate() {
                let delta = dc * &factor;
                rem[i - dd + j] -= delta;
            }
        }
        (Self::normalized(quot), Self::normalized(rem))
    }

    /// Monic greatest common divisor by the Euclidean algorithm.
    /// gcd(0, 0) = 0; otherwise the result is monic.
    pub fn gcd(a: &Poly, b: &Poly) -> Poly {
        let mut a = a.clone();
        let mut b = b.clone();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r;
        }
        a.make_monic()
    }

    /// Render with an arbitrary variable letter (the `Display` impl uses `q`).
    pub fn render(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for i in (0..self.coeffs.len()).rev() {
            let c = &self.coeffs[i];
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push(if neg { '-' } else { '+' });
            }
            let mag = c.abs();
            if i == 0 {
                out.push_str(&mag.to_string());
            } else {
                if !mag.is_one() {
                    out.push_str(&mag.to_string());
                }
                out.push_str(var);
                if i > 1 {
                    out.push_str(&format!("^{}", i));
                }
            }
        }
        out
    }

    /// Parse the canonical grammar (see module docs). Whitespace is ignored.
    pub fn parse(s: &str) -> Result<Poly, PolyParseError> {
        s.parse()
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render("q"))
    }
}

// ---- Arithmetic ----

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for i in 0..n {
            coeffs.push(self.coeff(i) + rhs.coeff(i));
        }
        Poly::normalized(coeffs)
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for i in 0..n {
            coeffs.push(self.coeff(i) - rhs.coeff(i));
        }
        Poly::normalized(coeffs)
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![Rat::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        Poly::normalized(coeffs)
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Add for Poly {
    type Output = Poly;
    fn add(self, rhs: Poly) -> Poly {
        &self + &rhs
    }
}

impl Sub for Poly {
    type Output = Poly;
    fn sub(self, rhs: Poly) -> Poly {
        &self - &rhs
    }
}

impl Mul for Poly {
    type Output = Poly;
    fn mul(self, rhs: Poly) -> Poly {
        &self * &rhs
    }
}

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        -&self
    }
}

// ---- Parsing ----

/// Error produced by [`Poly::parse`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyParseError {
    msg: String,
}

impl PolyParseError {
    fn new(msg: impl Into<String>) -> Self {
        PolyParseError { msg: msg.into() }
    }
}

impl fmt::Display for PolyParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "invalid polynomial: {}", self.msg)
    }
}

impl std::error::Error for PolyParseError {}

impl FromStr for Poly {
    type Err = PolyParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let chars: Vec<char> = s.chars().filter(|c| !c.is_whitespace()).collect();
        if chars.is_empty() {
            return Err(PolyParseError::new("empty input"));
        }
        let mut pos = 0usize;
        let mut acc = Poly::zero();
        let mut first = true;
        while pos < chars.len() {
            // sign
            let mut negative = false;
            match chars[pos] {
                '+' => pos += 1,
                '-' => {
                    negative = true;
                    pos += 1;
                }
                _ if first => {}
                c => {
                    return Err(PolyParseError::new(format!(
                        "expected '+' or '-' before term, found '{}'",
                        c
                    )))
                }
            }
            first = false;
            let (term, next) = parse_term(&chars, pos)?;
            acc = if negative { &acc - &term } else { &acc + &term };
            pos = next;
        }
        Ok(acc)
    }
}

fn parse_uint(chars: &[char], mut pos: usize) -> Option<(Int, usize)> {
    let start = pos;
    while pos < chars.len() && chars[pos].is_ascii_digit() {
        pos += 1;
    }
    if pos == start {
        return None;
    }
    let digits: String = chars[start..pos].iter().collect();
    Some((digits.parse::<Int>().expect("digit string"), pos))
}

fn parse_term(chars: &[char], mut pos: usize) -> Result<(Poly, usize), PolyParseError> {
    // coefficient: int [/ int], optional when the variable follows
    let mut coeff = Rat::one();
    let mut saw_coeff = false;
    if let Some((numer, next)) = parse_uint(chars, pos) {
        saw_coeff = true;
        pos = next;
        let mut denom = Int::from(1);
        if pos < chars.len() && chars[pos] == '/' {
            let (d, next) = parse_uint(chars, pos + 1)
                .ok_or_else(|| PolyParseError::new("expected denominator after '/'"))?;
            if d.is_zero() {
                return Err(PolyParseError::new("zero denominator"));
            }
            denom = d;
            pos = next;
        }
        coeff = Rat::new(numer, denom);
    }
    // variable part
    if pos < chars.len() && chars[pos] == 'q' {
        pos += 1;
        let mut exp = 1u32;
        if pos < chars.len() && chars[pos] == '^' {
            let (e, next) = parse_uint(chars, pos + 1)
                .ok_or_else(|| PolyParseError::new("expected exponent after '^'"))?;
            exp = e
                .try_into()
                .map_err(|_| PolyParseError::new("exponent too large"))?;
            pos = next;
        }
        Ok((Poly::monomial(coeff, exp as usize), pos))
    } else if saw_coeff {
        Ok((Poly::constant(coeff), pos))
    } else {
        Err(PolyParseError::new(format!(
            "expected coefficient or 'q' at position {}",
            pos
        )))
    }
}
