//! Distinguished symmetric-function families in the p-basis:
//! the one-row Hall-Littlewood q_n(x;t), elementary e_k, and Schur s_lambda.
//!
//! q_n carries coefficients in the formal variable (read as t); e_k and
//! s_lambda have constant rational coefficients. Schur functions are built by
//! iterated vertex-operator application rather than determinant formulas.

use std::collections::HashMap;
use std::sync::{LazyLock, Mutex};

use crate::arith::{Rat, RatFunc};
use crate::combinatorics::{partitions_of, z_of, z_of_t, Partition};
use crate::vertex::{apply_s, apply_s_star};

use super::PExpansion;

/// The one-row Hall-Littlewood function
/// q_n(x;t) = sum_{lambda |- n} p_lambda / z_lambda(t), with q_0 = 1.
///
/// Memoized per process.
pub fn q_one_row(n: usize) -> PExpansion {
    static CACHE: LazyLock<Mutex<HashMap<usize, PExpansion>>> =
        LazyLock::new(|| Mutex::new(HashMap::new()));
    let mut cache = CACHE.lock().unwrap();
    cache
        .entry(n)
        .or_insert_with(|| {
            let mut out = PExpansion::zero();
            for lambda in partitions_of(n) {
                let coeff = z_of_t(&lambda)
                    .inverse()
                    .expect("z_lambda(t) is nonzero");
                out.insert_add(lambda, coeff);
            }
            out
        })
        .clone()
}

/// q_rho(x;t) = product of q_one_row over the parts of rho; q of the empty
/// partition is 1.
pub fn q_product(rho: &Partition) -> PExpansion {
    let mut out = PExpansion::one();
    for &part in rho.parts() {
        out = out.p_mul(&q_one_row(part));
    }
    out
}

/// The elementary symmetric function e_k, computed as (-1)^k S*_{-k}.1.
/// Memoized per process.
pub fn elementary_e(k: usize) -> PExpansion {
    static CACHE: LazyLock<Mutex<HashMap<usize, PExpansion>>> =
        LazyLock::new(|| Mutex::new(HashMap::new()));
    let mut cache = CACHE.lock().unwrap();
    cache
        .entry(k)
        .or_insert_with(|| {
            let raw = apply_s_star(-(k as i64), &PExpansion::one());
            if k % 2 == 1 {
                raw.scale(&RatFunc::from_int(-1))
            } else {
                raw
            }
        })
        .clone()
}

/// The Schur function s_lambda, built by iterated vertex-operator
/// application: s_lambda = S_{lambda_1} S_{lambda_2} ... .1.
/// Memoized per process (suffixes of lambda are cached along the way).
pub fn schur(lambda: &Partition) -> PExpansion {
    static CACHE: LazyLock<Mutex<HashMap<Partition, PExpansion>>> =
        LazyLock::new(|| Mutex::new(HashMap::new()));
    {
        let cache = CACHE.lock().unwrap();
        if let Some(hit) = cache.get(lambda) {
            return hit.clone();
        }
    }
    let result = if lambda.is_empty() {
        PExpansion::one()
    } else {
        let tail = schur(&lambda.rest());
        apply_s(lambda.first_part() as i64, &tail)
    };
    CACHE
        .lock()
        .unwrap()
        .insert(lambda.clone(), result.clone());
    result
}

/// The symmetric-group character value omega^lambda(mu), extracted from
/// s_lambda = sum_mu omega^lambda(mu) z_mu^{-1} p_mu as z_mu times the
/// coefficient of p_mu. Always an integer (asserted).
///
/// Panics if |lambda| != |mu|.
pub fn omega_char(lambda: &Partition, mu: &Partition) -> Rat {
    assert_eq!(
        lambda.weight(),
        mu.weight(),
        "omega_char: weight mismatch between {} and {}",
        lambda,
        mu
    );
    let coeff = schur(lambda).coeff(mu);
    let z = RatFunc::constant(Rat::from_integer(z_of(mu)));
    let value = (&coeff * &z)
        .as_constant()
        .expect("Schur p-coefficients are constants");
    assert!(
        value.is_integer(),
        "omega_char must be an integer, got {} at ({}, {})",
        value,
        lambda,
        mu
    );
    value
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{rat, Poly};
    use num::One;

    /// 1 - t^k as a polynomial in the formal variable.
    fn one_minus_t_pow(k: usize) -> Poly {
        &Poly::one() - &Poly::monomial(Rat::one(), k)
    }

    fn part(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec())
    }

    fn c(n: i64, d: i64) -> RatFunc {
        RatFunc::constant(rat(n, d))
    }

    fn t() -> RatFunc {
        RatFunc::var()
    }

    #[test]
    fn q_zero_and_one() {
        assert_eq!(q_one_row(0), PExpansion::one());
        // q_1 = (1 - t) p_1
        let expected = PExpansion::p(1).scale(&(&RatFunc::one() - &t()));
        assert_eq!(q_one_row(1), expected);
    }

    #[test]
    fn q_two_expansion() {
        // q_2 = ((1-t^2)/2) p_2 + ((1-t)^2/2) p_(1,1)
        let one_minus_t = &RatFunc::one() - &t();
        let one_minus_t2 = &RatFunc::one() - &t().int_pow(2);
        let expected = &PExpansion::p(2).scale(&(&one_minus_t2 * &c(1, 2)))
            + &PExpansion::p_of(&part(&[1, 1]))
                .scale(&(&(&one_minus_t * &one_minus_t) * &c(1, 2)));
        assert_eq!(q_one_row(2), expected);
    }

    #[test]
    fn q_product_examples() {
        assert_eq!(q_product(&Partition::empty()), PExpansion::one());
        // q_(1,1) = (1-t)^2 p_(1,1)
        let one_minus_t = &RatFunc::one() - &t();
        let expected = PExpansion::p_of(&part(&[1, 1]))
            .scale(&(&one_minus_t * &one_minus_t));
        assert_eq!(q_product(&part(&[1, 1])), expected);
        // q_(2,1) = q_2 * q_1 by definition
        assert_eq!(
            q_product(&part(&[2, 1])),
            q_one_row(2).p_mul(&q_one_row(1))
        );
    }

    #[test]
    fn elementary_small() {
        assert_eq!(elementary_e(0), PExpansion::one());
        assert_eq!(elementary_e(1), PExpansion::p(1));
        // e_2 = (1/2) p_(1,1) - (1/2) p_2
        let expected = &PExpansion::p_of(&part(&[1, 1])).scale(&c(1, 2))
            - &PExpansion::p(2).scale(&c(1, 2));
        assert_eq!(elementary_e(2), expected);
    }

    #[test]
    fn schur_small() {
        assert_eq!(schur(&Partition::empty()), PExpansion::one());
        assert_eq!(schur(&part(&[1])), PExpansion::p(1));
        // s_2 = (1/2) p_(1,1) + (1/2) p_2
        let s2 = &PExpansion::p_of(&part(&[1, 1])).scale(&c(1, 2))
            + &PExpansion::p(2).scale(&c(1, 2));
        assert_eq!(schur(&part(&[2])), s2);
        // s_(2,1) = (1/3) p_(1,1,1) - (1/3) p_3
        let s21 = &PExpansion::p_of(&part(&[1, 1, 1])).scale(&c(1, 3))
            - &PExpansion::p(3).scale(&c(1, 3));
        assert_eq!(schur(&part(&[2, 1])), s21);
    }

    #[test]
    fn schur_orthonormal() {
        for n in 0..=6usize {
            let all = partitions_of(n);
            for a in &all {
                for b in &all {
                    let ip = schur(a).inner_product(&schur(b));
                    let expected = if a == b { RatFunc::one() } else { RatFunc::zero() };
                    assert_eq!(ip, expected, "<s_{}, s_{}>", a, b);
                }
            }
        }
    }

    #[test]
    fn degree_grading() {
        for n in 0..=6usize {
            assert!(q_one_row(n).is_homogeneous_of_degree(n));
            assert!(elementary_e(n).is_homogeneous_of_degree(n));
            for lambda in partitions_of(n) {
                assert!(schur(&lambda).is_homogeneous_of_degree(n));
            }
        }
    }

    #[test]
    fn omega_values() {
        // classical S_3 character values
        assert_eq!(omega_char(&part(&[2, 1]), &part(&[1, 1, 1])), rat(2, 1));
        assert_eq!(omega_char(&part(&[2, 1]), &part(&[3])), rat(-1, 1));
        assert_eq!(omega_char(&part(&[2, 1]), &part(&[2, 1])), rat(0, 1));
        // trivial character: omega^{(n)} = 1 on every class
        for n in 1..=6usize {
            for mu in partitions_of(n) {
                assert_eq!(omega_char(&Partition::single(n), &mu), rat(1, 1));
            }
        }
    }

    #[test]
    fn omega_integrality() {
        for n in 0..=7usize {
            for lambda in partitions_of(n) {
                for mu in partitions_of(n) {
                    // the integrality assert lives inside omega_char
                    let _ = omega_char(&lambda, &mu);
                }
            }
        }
    }

    #[test]
    fn generating_function_recurrence() {
        // n q_n = sum_{r=1}^{n} (1 - t^r) p_r q_{n-r}
        for n in 1..=8usize {
            let lhs = q_one_row(n).scale(&RatFunc::from_int(n as i64));
            let mut rhs = PExpansion::zero();
            for r in 1..=n {
                let factor = RatFunc::from_poly(one_minus_t_pow(r));
                rhs = &rhs + &PExpansion::p(r).p_mul(&q_one_row(n - r)).scale(&factor);
            }
            assert_eq!(lhs, rhs, "recurrence at n = {}", n);
        }
    }

    #[test]
    fn specialization_at_t_zero_is_h() {
        use num::Zero;
        let zero = Rat::zero();
        for n in 0..=8usize {
            // coefficients at t = 0 must be 1/z_lambda
            let qn = q_one_row(n);
            for lambda in partitions_of(n) {
                let at_zero = qn
                    .coeff(&lambda)
                    .eval_at(&zero)
                    .expect("no pole at t = 0");
                assert_eq!(at_zero, Rat::new(1.into(), z_of(&lambda)));
            }
            // and <h_n, s_(n)> = 1 for the specialized expansion
            let h_n = qn.map_coeffs(|c| {
                RatFunc::constant(c.eval_at(&zero).expect("no pole at t = 0"))
            });
            let ip = h_n.inner_product(&schur(&Partition::single(n)));
            assert!(ip.is_one(), "<h_{}, s_({})> = {}", n, n, ip);
        }
    }
}
