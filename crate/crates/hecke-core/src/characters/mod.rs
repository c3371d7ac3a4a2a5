//! Irreducible character values chi^lambda_mu(q) of the type-A Hecke algebra,
//! computed two independent ways:
//!
//! - [`dual_mn`]: the dual Murnaghan-Nakayama recursion. It peels the largest
//!   part lambda_1 of the upper partition:
//!
//!   ```text
//!   chi^lambda_mu = sum_{tau subset mu} q^{lambda_1 - l(tau)}
//!        sum_{b in B_{|tau| - lambda_1}}
//!        (q-1)^{l(tau) - l(mu) + l(mu-tau) + l(b)}
//!        prod_j 1/(q^{-r_j(b)} - 1) * chi^{lambda^[1]}_{(mu-tau) union b}
//!   ```
//!
//!   Sub-compositions with |tau| < lambda_1 contribute nothing (no brick
//!   tabloids of negative weight); |tau| = lambda_1 uses the empty tabloid
//!   with empty product 1. Base case chi^{}_{} = 1.
//!
//! - [`frobenius_oracle`]: q^n/(q-1)^{l(mu)} <q_mu(x;q^{-1}), s_lambda>.
//!
//! Every character value reduces to a polynomial in q with integer
//! coefficients; a value that fails to normalize signals an implementation
//! bug and aborts loudly.

mod table;

pub use table::{character_table, CharTable, Method};

use std::collections::HashMap;
use std::sync::{Arc, LazyLock, Mutex};

use num::One;

use crate::arith::{Poly, Rat, RatFunc};
use crate::combinatorics::{
    brick_tabloids, brick_tabloids_of_type, partitions_of, sub_compositions,
    subtract_to_partition, BrickTabloid, Partition,
};
use crate::symfunc::{elementary_e, q_product, schur, PExpansion};

/// Shared memo for the dual recursion, keyed by the canonical
/// (lambda, mu) pair. The lower index is always stored as a partition: the
/// character value depends on mu only through its type.
#[derive(Default)]
pub struct CharCache {
    memo: HashMap<(Partition, Partition), Poly>,
}

impl CharCache {
    pub fn new() -> Self {
        Self::default()
    }

    /// Number of memoized (lambda, mu) pairs.
    pub fn len(&self) -> usize {
        self.memo.len()
    }

    pub fn is_empty(&self) -> bool {
        self.memo.is_empty()
    }
}

/// q_mu(x; q^{-1}): the product expansion computed once in t, substituted by
/// the reciprocal map, and cached per mu.
fn q_product_reciprocal(mu: &Partition) -> PExpansion {
    static CACHE: LazyLock<Mutex<HashMap<Partition, PExpansion>>> =
        LazyLock::new(|| Mutex::new(HashMap::new()));
    {
        let cache = CACHE.lock().unwrap();
        if let Some(hit) = cache.get(mu) {
            return hit.clone();
        }
    }
    let substituted = q_product(mu).map_coeffs(|c| c.reciprocal_subst());
    CACHE
        .lock()
        .unwrap()
        .insert(mu.clone(), substituted.clone());
    substituted
}

/// The Frobenius formula
/// chi^lambda_mu(q) = q^n/(q-1)^{l(mu)} <q_mu(x;q^{-1}), s_lambda(x)>,
/// fully reduced. The result is a polynomial in disguise (see
/// [`RatFunc::to_int_poly`]).
///
/// Panics if |lambda| != |mu|.
pub fn frobenius_oracle(lambda: &Partition, mu: &Partition) -> RatFunc {
    assert_eq!(
        lambda.weight(),
        mu.weight(),
        "frobenius_oracle: weight mismatch between {} and {}",
        lambda,
        mu
    );
    let n = mu.weight();
    let inner = q_product_reciprocal(mu).inner_product(&schur(lambda));
    let q_pow_n = RatFunc::from_poly(Poly::monomial(Rat::one(), n));
    let q_minus_one = RatFunc::from_poly(Poly::from_int_coeffs(&[-1, 1]));
    let prefactor = &q_pow_n * &q_minus_one.int_pow(-(mu.len() as i64));
    &prefactor * &inner
}

/// (q-1)^e as a polynomial, cached: these powers recur in every term.
fn q_minus_one_pow(e: usize) -> Poly {
    static CACHE: LazyLock<Mutex<Vec<Poly>>> = LazyLock::new(|| Mutex::new(vec![Poly::one()]));
    let mut cache = CACHE.lock().unwrap();
    while cache.len() <= e {
        let next = cache.last().unwrap() * &Poly::from_int_coeffs(&[-1, 1]);
        cache.push(next);
    }
    cache[e].clone()
}

/// prod_{r=a+1}^{b} (1 - q^r), cached.
fn one_minus_q_range(a: usize, b: usize) -> Poly {
    static CACHE: LazyLock<Mutex<HashMap<(usize, usize), Poly>>> =
        LazyLock::new(|| Mutex::new(HashMap::new()));
    let mut cache = CACHE.lock().unwrap();
    cache
        .entry((a, b))
        .or_insert_with(|| {
            let mut acc = Poly::one();
            for r in a + 1..=b {
                acc = &acc * &(&Poly::one() - &Poly::monomial(Rat::one(), r));
            }
            acc
        })
        .clone()
}

/// One term of the inner brick sum, in numerator form over the common
/// denominator prod_{r=1}^{k} (1 - q^r): the type of a tabloid (all the
/// child label depends on) together with
///
///   q^{sum r_j} (q-1)^{l(b)} prod_{r in [1,k] minus prefix-sums} (1 - q^r),
///
/// which is (q-1)^{l(b)} prod_j 1/(q^{-r_j} - 1) times that denominator.
/// Working over the common denominator keeps the per-term arithmetic free of
/// gcd reductions; the cell total is reduced once at the end.
type BrickTerm = (Partition, Poly);

fn brick_term_numerator(b: &BrickTabloid, k: usize) -> Poly {
    let prefix_sums = b.prefix_sums();
    let mut numerator = q_minus_one_pow(b.len()).shifted(prefix_sums.iter().sum());
    for r in 1..=k {
        if !prefix_sums.contains(&r) {
            numerator = &numerator * &(&Poly::one() - &Poly::monomial(Rat::one(), r));
        }
    }
    numerator
}

/// Per-excess term lists for the literal sum: one entry per tabloid of `k`,
/// in enumeration order. Shared across every cell of every table.
fn literal_brick_terms(k: usize) -> Arc<Vec<BrickTerm>> {
    static CACHE: LazyLock<Mutex<HashMap<usize, Arc<Vec<BrickTerm>>>>> =
        LazyLock::new(|| Mutex::new(HashMap::new()));
    let mut cache = CACHE.lock().unwrap();
    cache
        .entry(k)
        .or_insert_with(|| {
            Arc::new(
                brick_tabloids(k)
                    .iter()
                    .map(|b| (b.type_partition(), brick_term_numerator(b, k)))
                    .collect(),
            )
        })
        .clone()
}

/// Per-excess term lists with tabloids of equal type grouped: one entry per
/// type rho of `k`, whose numerator sums the order-dependent products over
/// the orderings of rho.
fn grouped_brick_terms(k: usize) -> Arc<Vec<BrickTerm>> {
    static CACHE: LazyLock<Mutex<HashMap<usize, Arc<Vec<BrickTerm>>>>> =
        LazyLock::new(|| Mutex::new(HashMap::new()));
    let mut cache = CACHE.lock().unwrap();
    cache
        .entry(k)
        .or_insert_with(|| {
            Arc::new(
                partitions_of(k)
                    .into_iter()
                    .map(|rho| {
                        let mut type_sum = Poly::zero();
                        for b in brick_tabloids_of_type(&rho) {
                            type_sum = &type_sum + &brick_term_numerator(&b, k);
                        }
                        (rho, type_sum)
                    })
                    .collect(),
            )
        })
        .clone()
}

/// How the brick-tabloid inner sum is iterated.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum BrickIteration {
    /// Literal sum over every tabloid of B_{|tau| - lambda_1}.
    Literal,
    /// Tabloids grouped by type; the per-type coefficient sums the
    /// order-dependent products over the orderings of that type.
    GroupedByType,
}

/// The dual Murnaghan-Nakayama recursion with a shared memo cache,
/// iterating brick tabloids literally as the recursion states.
///
/// Returns the normalized character value: a polynomial in q with integer
/// coefficients. Panics if |lambda| != |mu|, or (loudly, as a bug signal) if
/// a value fails to normalize to an integer polynomial.
pub fn dual_mn(lambda: &Partition, mu: &Partition, cache: &mut CharCache) -> Poly {
    assert_eq!(
        lambda.weight(),
        mu.weight(),
        "dual_mn: weight mismatch between {} and {}",
        lambda,
        mu
    );
    dual_mn_rec(lambda, mu, cache, BrickIteration::Literal)
}

/// Same recursion with brick tabloids of equal type grouped; agrees with
/// [`dual_mn`] on every input (exercised in tests).
pub fn dual_mn_grouped(lambda: &Partition, mu: &Partition, cache: &mut CharCache) -> Poly {
    assert_eq!(
        lambda.weight(),
        mu.weight(),
        "dual_mn_grouped: weight mismatch between {} and {}",
        lambda,
        mu
    );
    dual_mn_rec(lambda, mu, cache, BrickIteration::GroupedByType)
}

fn dual_mn_rec(
    lambda: &Partition,
    mu: &Partition,
    cache: &mut CharCache,
    iteration: BrickIteration,
) -> Poly {
    if lambda.is_empty() {
        debug_assert!(mu.is_empty());
        return Poly::one();
    }
    let key = (lambda.clone(), mu.clone());
    if let Some(hit) = cache.memo.get(&key) {
        return hit.clone();
    }

    let lambda_1 = lambda.first_part();
    let lambda_rest = lambda.rest();

    // Every term's coefficient is accumulated in numerator form over the
    // cell-wide common denominator q^A prod_{r=1}^{K} (1 - q^r), with
    // K = |mu| - lambda_1 and A = l(mu): the tabloid prefix sums are
    // distinct values in [1, K], and q^{lambda_1 - l(tau)} never drops below
    // q^{-A}. Plain polynomial sums replace per-term gcd reductions; the
    // single reduction happens at the end of the cell.
    let max_excess = mu.weight() - lambda_1;
    let shift_bound = mu.len();

    // coefficient numerator of each child partition, collected first so the
    // child-value multiplications happen once per child
    let mut child_coeffs: HashMap<Partition, Poly> = HashMap::new();
    for tau in sub_compositions(mu) {
        if tau.weight() < lambda_1 {
            continue;
        }
        let excess = tau.weight() - lambda_1;
        let mu_minus_tau = subtract_to_partition(mu, &tau);
        let base_exp = tau.positive_count() as i64 - mu.len() as i64 + mu_minus_tau.len() as i64;
        assert!(
            base_exp >= 0,
            "(q-1) exponent must stay nonnegative (tau on {})",
            mu
        );
        // q^{A + lambda_1 - l(tau)} (q-1)^{base_exp}, completed to the
        // common denominator by the (1-q^r) factors above the excess;
        // shared by every tabloid term of this tau
        let shift = (shift_bound + lambda_1) as i64 - tau.positive_count() as i64;
        debug_assert!(shift >= 0);
        let prefix = &q_minus_one_pow(base_exp as usize).shifted(shift as usize)
            * &one_minus_q_range(excess, max_excess);
        let terms = match iteration {
            BrickIteration::Literal => literal_brick_terms(excess),
            BrickIteration::GroupedByType => grouped_brick_terms(excess),
        };
        for (brick_type, weighted) in terms.iter() {
            let child = Partition::new(
                mu_minus_tau
                    .parts()
                    .iter()
                    .chain(brick_type.parts())
                    .copied()
                    .collect::<Vec<_>>(),
            );
            debug_assert_eq!(child.weight(), lambda_rest.weight());
            let numerator = &prefix * weighted;
            if numerator.is_zero() {
                continue;
            }
            child_coeffs
                .entry(child)
                .and_modify(|acc| *acc = &*acc + &numerator)
                .or_insert(numerator);
        }
    }

    let mut children: Vec<(Partition, Poly)> = child_coeffs.into_iter().collect();
    children.sort_by(|a, b| a.0.cmp(&b.0));
    let mut total_numerator = Poly::zero();
    for (child, coeff) in children {
        if coeff.is_zero() {
            continue;
        }
        let child_value = dual_mn_rec(&lambda_rest, &child, cache, iteration);
        total_numerator = &total_numerator + &(&coeff * &child_value);
    }

    let denominator = one_minus_q_range(0, max_excess).shifted(shift_bound);
    let value = RatFunc::new(total_numerator, denominator)
        .to_int_poly()
        .unwrap_or_else(|e| {
            panic!(
                "dual_mn produced a non-normalizable value at ({}, {}): {}",
                lambda, mu, e
            )
        });
    cache.memo.insert(key, value.clone());
    value
}

/// The transition coefficient C_{m,rho} expressing e_m in the q_rho(x;t)
/// basis: (-1)^m times the sum over brick tabloids of type rho of
/// prod_i 1/(t^{r_i} - 1). C_{0,empty} = 1 by the empty-sum convention
/// (the unique empty tabloid contributes an empty product).
///
/// The sign (-1)^m enters once per tabloid, not once per brick: that is the
/// reading forced by e_m = (-1)^m S*_{-m}.1 together with the brick-tabloid
/// expansion of S*_{-m}.1, and [`e_expansion_check`] adjudicates it (the two
/// readings first diverge at m = 3).
///
/// Panics if |rho| != m.
pub fn c_coefficient(m: usize, rho: &Partition) -> RatFunc {
    assert_eq!(rho.weight(), m, "c_coefficient: |rho| must equal m");
    let minus_one_pow_m = if m.is_multiple_of(2) {
        RatFunc::from_int(1)
    } else {
        RatFunc::from_int(-1)
    };
    let mut acc = RatFunc::zero();
    for b in brick_tabloids_of_type(rho) {
        let mut prod = minus_one_pow_m.clone();
        for r in b.prefix_sums() {
            let den = &Poly::monomial(Rat::one(), r) - &Poly::one();
            prod = &prod * &RatFunc::new(Poly::one(), den);
        }
        acc = &acc + &prod;
    }
    acc
}

/// Verifies e_m(x) = sum_{rho |- m} C_{m,rho} q_rho(x;t) exactly in the
/// p-basis. Returns false when the identity is violated.
pub fn e_expansion_check(m: usize) -> bool {
    let mut rhs = PExpansion::zero();
    for rho in partitions_of(m) {
        rhs = &rhs + &q_product(&rho).scale(&c_coefficient(m, &rho));
    }
    rhs == elementary_e(m)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat_int;
    use crate::combinatorics::union_parts;

    fn part(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec())
    }

    /// prod_j 1/(q^{-r_j(b)} - 1), built term by term with reduced
    /// rational-function arithmetic, independently of the common-denominator
    /// fast path the recursion itself uses.
    fn tabloid_product(b: &BrickTabloid) -> RatFunc {
        let mut acc = RatFunc::one();
        for r in b.prefix_sums() {
            let q_pow = Poly::monomial(Rat::one(), r);
            acc = &acc * &RatFunc::new(q_pow.clone(), &Poly::one() - &q_pow);
        }
        acc
    }

    #[test]
    fn oracle_worked_example_values() {
        // chi^{(2,1)}_{(2,1)} = q - 1
        let v = frobenius_oracle(&part(&[2, 1]), &part(&[2, 1]));
        assert_eq!(v.to_int_poly().unwrap(), Poly::from_int_coeffs(&[-1, 1]));
        // chi^{(2,1)}_{(3)} = -q
        let v = frobenius_oracle(&part(&[2, 1]), &part(&[3]));
        assert_eq!(v.to_int_poly().unwrap(), Poly::from_int_coeffs(&[0, -1]));
        // chi^{(2,1)}_{(1,1,1)} = 2
        let v = frobenius_oracle(&part(&[2, 1]), &part(&[1, 1, 1]));
        assert_eq!(v.to_int_poly().unwrap(), Poly::from_int_coeffs(&[2]));
        // chi^{(2)}_{(2)} = q
        let v = frobenius_oracle(&part(&[2]), &part(&[2]));
        assert_eq!(v.to_int_poly().unwrap(), Poly::from_int_coeffs(&[0, 1]));
    }

    #[test]
    fn dual_mn_base_and_small() {
        let mut cache = CharCache::new();
        assert_eq!(
            dual_mn(&Partition::empty(), &Partition::empty(), &mut cache),
            Poly::one()
        );
        assert_eq!(
            dual_mn(&part(&[1]), &part(&[1]), &mut cache),
            Poly::one()
        );
        // chi^{(2,1)}_{(1^3)} = 2
        assert_eq!(
            dual_mn(&part(&[2, 1]), &part(&[1, 1, 1]), &mut cache),
            Poly::from_int_coeffs(&[2])
        );
    }

    #[test]
    fn dual_mn_worked_example() {
        let mut cache = CharCache::new();
        let value = dual_mn(&part(&[3, 2, 1]), &part(&[4, 2]), &mut cache);
        assert_eq!(value, Poly::from_int_coeffs(&[0, -1, 2, -1]));
    }

    /// Per-|tau| partial sums of the worked example. The two flanking sums
    /// match the source's displayed values; the |tau| = 4 sum is recomputed
    /// here (the displayed middle expression is typographically corrupted)
    /// and the four sums must total the final character value.
    #[test]
    fn dual_mn_worked_example_partial_sums() {
        let lambda = part(&[3, 2, 1]);
        let mu = part(&[4, 2]);
        let lambda_1 = lambda.first_part();
        let lambda_rest = lambda.rest();
        let q = RatFunc::var();
        let q_minus_one = RatFunc::from_poly(Poly::from_int_coeffs(&[-1, 1]));
        let mut cache = CharCache::new();
        let mut by_tau_weight: HashMap<usize, RatFunc> = HashMap::new();
        for tau in sub_compositions(&mu) {
            if tau.weight() < lambda_1 {
                continue;
            }
            let mu_minus_tau = subtract_to_partition(&mu, &tau);
            let base_exp =
                tau.positive_count() as i64 - mu.len() as i64 + mu_minus_tau.len() as i64;
            let q_power = q.int_pow(lambda_1 as i64 - tau.positive_count() as i64);
            let mut sum = RatFunc::zero();
            for b in brick_tabloids(tau.weight() - lambda_1) {
                let child = union_parts(&mu_minus_tau, &b);
                let child_value = dual_mn(&lambda_rest, &child, &mut cache);
                let term = &(&(&q_power * &q_minus_one.int_pow(base_exp + b.len() as i64))
                    * &tabloid_product(&b))
                    * &RatFunc::from_poly(child_value);
                sum = &sum + &term;
            }
            let entry = by_tau_weight
                .entry(tau.weight())
                .or_insert_with(RatFunc::zero);
            *entry = &*entry + &sum;
        }
        let poly_of = |weight: usize| by_tau_weight[&weight].to_int_poly().unwrap();
        assert_eq!(poly_of(6), Poly::zero());
        assert_eq!(poly_of(5), Poly::from_int_coeffs(&[0, 0, 0, -2, 2]));
        assert_eq!(poly_of(4), Poly::from_int_coeffs(&[0, 0, -3, 7, -4]));
        assert_eq!(poly_of(3), Poly::from_int_coeffs(&[0, -1, 5, -6, 2]));
        let total = [3, 4, 5, 6]
            .iter()
            .fold(Poly::zero(), |acc, &w| &acc + &poly_of(w));
        assert_eq!(total, Poly::from_int_coeffs(&[0, -1, 2, -1]));
    }

    #[test]
    fn grouped_and_literal_agree() {
        for n in 0..=5usize {
            let mut literal = CharCache::new();
            let mut grouped = CharCache::new();
            for lambda in partitions_of(n) {
                for mu in partitions_of(n) {
                    assert_eq!(
                        dual_mn(&lambda, &mu, &mut literal),
                        dual_mn_grouped(&lambda, &mu, &mut grouped),
                        "({}, {})",
                        lambda,
                        mu
                    );
                }
            }
        }
    }

    #[test]
    fn oracle_equivalence_small() {
        // the full n <= 8 sweep is the acceptance gate
        let mut cache = CharCache::new();
        for n in 0..=5usize {
            for lambda in partitions_of(n) {
                for mu in partitions_of(n) {
                    let via_dual = dual_mn(&lambda, &mu, &mut cache);
                    let via_oracle = frobenius_oracle(&lambda, &mu).to_int_poly().unwrap();
                    assert_eq!(via_dual, via_oracle, "({}, {})", lambda, mu);
                }
            }
        }
    }

    #[test]
    fn q_one_specialization_small() {
        let mut cache = CharCache::new();
        for n in 0..=5usize {
            for lambda in partitions_of(n) {
                for mu in partitions_of(n) {
                    let at_one = dual_mn(&lambda, &mu, &mut cache).eval_at(&rat_int(1));
                    assert_eq!(at_one, crate::symfunc::omega_char(&lambda, &mu));
                }
            }
        }
    }

    #[test]
    fn c_coefficient_examples() {
        // C_{0,empty} = 1
        assert!(c_coefficient(0, &Partition::empty()).is_one());
        // C_{1,(1)} = -1/(t-1)
        let expected = RatFunc::new(
            Poly::from_int_coeffs(&[-1]),
            Poly::from_int_coeffs(&[-1, 1]),
        );
        assert_eq!(c_coefficient(1, &part(&[1])), expected);
        // C_{2,(1,1)} = 1/((t-1)(t^2-1))
        let den = &Poly::from_int_coeffs(&[-1, 1]) * &Poly::from_int_coeffs(&[-1, 0, 1]);
        assert_eq!(
            c_coefficient(2, &part(&[1, 1])),
            RatFunc::new(Poly::one(), den)
        );
    }

    #[test]
    fn e_expansion_small() {
        for m in 0..=6usize {
            assert!(e_expansion_check(m), "e-expansion failed at m = {}", m);
        }
    }

    #[test]
    fn first_column_values_are_monomials() {
        let mut cache = CharCache::new();
        for n in 1..=8usize {
            for mu in partitions_of(n) {
                for lambda in [Partition::single(n), part(&vec![1; n])] {
                    let value = dual_mn(&lambda, &mu, &mut cache);
                    let nonzero: Vec<_> = value
                        .coeffs()
                        .iter()
                        .filter(|c| !num::Zero::is_zero(*c))
                        .collect();
                    assert_eq!(nonzero.len(), 1, "chi^{}_{} = {}", lambda, mu, value);
                    let unit = nonzero[0].clone();
                    assert!(
                        unit == rat_int(1) || unit == rat_int(-1),
                        "chi^{}_{} = {}",
                        lambda,
                        mu,
                        value
                    );
                }
            }
        }
    }

    #[test]
    #[should_panic(expected = "weight mismatch")]
    fn weight_mismatch_panics() {
        let mut cache = CharCache::new();
        let _ = dual_mn(&part(&[2]), &part(&[1]), &mut cache);
    }
}
