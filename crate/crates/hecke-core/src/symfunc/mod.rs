//! Symmetric functions in the power-sum basis with rational-function
//! coefficients.
//!
//! A [`PExpansion`] is a finite map from partitions lambda to coefficients of
//! p_lambda. The basis is orthogonal for the inner product
//! <p_lambda, p_mu> = z_lambda delta_{lambda,mu}, and multiplication is the
//! multiset union of indices.
//!
//! [`q_one_row`], [`elementary_e`] and [`schur`] are memoized per process;
//! the caches are synchronized shared maps and every operation is
//! deterministic, so concurrent use yields identical results.

mod bases;

pub use bases::{elementary_e, omega_char, q_one_row, q_product, schur};

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Sub};

use crate::arith::{Rat, RatFunc};
use crate::combinatorics::{z_of, Partition};

/// A symmetric function written in the power-sum basis: a finite map
/// partition -> coefficient with no explicitly stored zeros.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct PExpansion {
    terms: BTreeMap<Partition, RatFunc>,
}

impl PExpansion {
    pub fn zero() -> Self {
        PExpansion {
            terms: BTreeMap::new(),
        }
    }

    /// The constant symmetric function 1 = p of the empty partition.
    pub fn one() -> Self {
        Self::from_term(Partition::empty(), RatFunc::one())
    }

    /// The power sum p_r (r >= 1).
    pub fn p(r: usize) -> Self {
        assert!(r >= 1, "power sum index must be positive");
        Self::from_term(Partition::single(r), RatFunc::one())
    }

    /// The product p_lambda of power sums over the parts of `lambda`.
    pub fn p_of(lambda: &Partition) -> Self {
        Self::from_term(lambda.clone(), RatFunc::one())
    }

    pub fn from_term(index: Partition, coeff: RatFunc) -> Self {
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(index, coeff);
        }
        PExpansion { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of stored terms.
    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &RatFunc)> {
        self.terms.iter()
    }

    /// Coefficient of p_lambda (zero when absent).
    pub fn coeff(&self, lambda: &Partition) -> RatFunc {
        self.terms
            .get(lambda)
            .cloned()
            .unwrap_or_else(RatFunc::zero)
    }

    /// Largest weight appearing in the support; 0 for the zero expansion.
    pub fn max_degree(&self) -> usize {
        self.terms.keys().map(|p| p.weight()).max().unwrap_or(0)
    }

    /// True if every term has weight exactly `d`.
    pub fn is_homogeneous_of_degree(&self, d: usize) -> bool {
        self.terms.keys().all(|p| p.weight() == d)
    }

    /// Restriction to terms of weight `d`.
    pub fn homogeneous_component(&self, d: usize) -> Self {
        PExpansion {
            terms: self
                .terms
                .iter()
                .filter(|(p, _)| p.weight() == d)
                .map(|(p, c)| (p.clone(), c.clone()))
                .collect(),
        }
    }

    pub(crate) fn insert_add(&mut self, index: Partition, coeff: RatFunc) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(index) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get() + &coeff;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    /// Multiply every coefficient by a scalar.
    pub fn scale(&self, c: &RatFunc) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        PExpansion {
            terms: self
                .terms
                .iter()
                .map(|(p, x)| (p.clone(), x * c))
                .collect(),
        }
    }

    /// Apply a map to every coefficient, dropping terms that become zero.
    pub fn map_coeffs(&self, f: impl Fn(&RatFunc) -> RatFunc) -> Self {
        let mut out = PExpansion::zero();
        for (p, c) in &self.terms {
            out.insert_add(p.clone(), f(c));
        }
        out
    }

    /// Product in the p-basis: bilinear extension of
    /// p_lambda * p_mu = p_{lambda union mu}.
    pub fn p_mul(&self, other: &Self) -> Self {
        let mut out = PExpansion::zero();
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                let index = Partition::new(
                    a.parts()
                        .iter()
                        .copied()
                        .chain(b.parts().iter().copied())
                        .collect::<Vec<_>>(),
                );
                out.insert_add(index, ca * cb);
            }
        }
        out
    }

    /// The inner product <f, g> = sum_lambda f_lambda g_lambda z_lambda.
    pub fn inner_product(&self, other: &Self) -> RatFunc {
        let mut acc = RatFunc::zero();
        for (p, c) in &self.terms {
            if let Some(d) = other.terms.get(p) {
                let z = RatFunc::constant(Rat::from_integer(z_of(p)));
                acc = &acc + &(&(c * d) * &z);
            }
        }
        acc
    }
}

impl Add for &PExpansion {
    type Output = PExpansion;
    fn add(self, rhs: &PExpansion) -> PExpansion {
        let mut out = self.clone();
        for (p, c) in &rhs.terms {
            out.insert_add(p.clone(), c.clone());
        }
        out
    }
}

impl Sub for &PExpansion {
    type Output = PExpansion;
    fn sub(self, rhs: &PExpansion) -> PExpansion {
        let mut out = self.clone();
        for (p, c) in &rhs.terms {
            out.insert_add(p.clone(), -c);
        }
        out
    }
}

/// Debug rendering: one `coeff * p[parts]` line per term, sorted by
/// partition (weight, then reverse-lexicographic).
impl fmt::Display for PExpansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (p, c) in &self.terms {
            if !first {
                writeln!(f)?;
            }
            first = false;
            let parts: Vec<String> = p.parts().iter().map(|x| x.to_string()).collect();
            write!(f, "{} * p[{}]", c, parts.join(","))?;
        }
        Ok(())
    }
}
