//! The vertex operators S_n and S*_n as linear operators on power-sum
//! expansions.
//!
//! S(z) = exp(sum_{r>=1} p_r z^r / r) exp(-sum_{r>=1} (d/dp_r) z^{-r}) and
//! S*(z) has both sign patterns flipped. A component acts by contracting the
//! two exponentials:
//!
//!   S_n f  = sum_{j>=0} h_{n+j} * (D_j f)
//!   S*_n f = sum_{j>=max(0,n)} a_{j-n} * (E_j f)
//!
//! where h_m (resp. a_m) is the z^m-coefficient of exp(+-sum p_r z^r / r),
//! D_j / E_j are the z^{-j}-coefficients of the derivative exponentials, and
//! each sum is finite because derivatives annihilate beyond the input's
//! degree. The expansion is exact per degree; nothing is truncated.

use std::collections::HashMap;
use std::sync::{LazyLock, Mutex};

use crate::arith::{rat_int, Rat, RatFunc};
use crate::combinatorics::{partitions_of, z_of, Partition};
use crate::symfunc::PExpansion;

/// The formal partial derivative d/dp_r (r >= 1): on a basis term p_lambda it
/// removes one part r and multiplies by the multiplicity m_r(lambda).
pub fn diff_p(r: usize, f: &PExpansion) -> PExpansion {
    assert!(r >= 1, "derivative index must be positive");
    let mut out = PExpansion::zero();
    for (lambda, c) in f.terms() {
        let m = lambda.multiplicity(r);
        if m == 0 {
            continue;
        }
        let mut parts = lambda.parts().to_vec();
        let pos = parts.iter().position(|&p| p == r).expect("part present");
        parts.remove(pos);
        out.insert_add(
            Partition::new(parts),
            c * &RatFunc::from_int(m as i64),
        );
    }
    out
}

/// z^m-coefficient of exp(sum_r p_r z^r / r): the complete homogeneous
/// function h_m = sum_{lambda |- m} p_lambda / z_lambda.
fn exp_h(m: usize) -> PExpansion {
    static CACHE: LazyLock<Mutex<HashMap<usize, PExpansion>>> =
        LazyLock::new(|| Mutex::new(HashMap::new()));
    let mut cache = CACHE.lock().unwrap();
    cache
        .entry(m)
        .or_insert_with(|| h_like(m, false))
        .clone()
}

/// z^m-coefficient of exp(-sum_r p_r z^r / r): equals (-1)^m e_m.
fn exp_h_signed(m: usize) -> PExpansion {
    static CACHE: LazyLock<Mutex<HashMap<usize, PExpansion>>> =
        LazyLock::new(|| Mutex::new(HashMap::new()));
    let mut cache = CACHE.lock().unwrap();
    cache
        .entry(m)
        .or_insert_with(|| h_like(m, true))
        .clone()
}

fn h_like(m: usize, signed: bool) -> PExpansion {
    let mut out = PExpansion::zero();
    for lambda in partitions_of(m) {
        let mut coeff = Rat::new(1.into(), z_of(&lambda));
        if signed && lambda.len() % 2 == 1 {
            coeff = -coeff;
        }
        out.insert_add(lambda, RatFunc::constant(coeff));
    }
    out
}

/// z^{-j}-coefficient of exp(-+ sum_r (d/dp_r) z^{-r}) applied to f:
/// sum over sigma |- j of (-+1)^{l(sigma)} / prod_i m_i(sigma)! times the
/// iterated derivative prod d_{sigma_i} of f.
fn derivative_component(j: usize, f: &PExpansion, signed: bool) -> PExpansion {
    let mut out = PExpansion::zero();
    for sigma in partitions_of(j) {
        let mut g = f.clone();
        for &part in sigma.parts() {
            g = diff_p(part, &g);
            if g.is_zero() {
                break;
            }
        }
        if g.is_zero() {
            continue;
        }
        let mut denom = 1i64;
        let mut run = (0usize, 0i64);
        for &part in sigma.parts() {
            run = if part == run.0 { (part, run.1 + 1) } else { (part, 1) };
            denom *= run.1;
        }
        let mut scalar = Rat::new(1.into(), denom.into());
        if signed && sigma.len() % 2 == 1 {
            scalar = -scalar;
        }
        out = &out + &g.scale(&RatFunc::constant(scalar));
    }
    out
}

/// The component S_n acting on f: the z^n-coefficient of S(z) f.
pub fn apply_s(n: i64, f: &PExpansion) -> PExpansion {
    if f.is_zero() {
        return PExpansion::zero();
    }
    let deg = f.max_degree();
    let mut out = PExpansion::zero();
    for j in 0..=deg {
        let m = n + j as i64;
        if m < 0 {
            continue;
        }
        let dj = derivative_component(j, f, true);
        if dj.is_zero() {
            continue;
        }
        out = &out + &exp_h(m as usize).p_mul(&dj);
    }
    out
}

/// The component S*_n acting on f: the z^{-n}-coefficient of S*(z) f.
pub fn apply_s_star(n: i64, f: &PExpansion) -> PExpansion {
    if f.is_zero() {
        return PExpansion::zero();
    }
    let deg = f.max_degree();
    let mut out = PExpansion::zero();
    for j in 0..=deg {
        let m = j as i64 - n;
        if m < 0 {
            continue;
        }
        let ej = derivative_component(j, f, false);
        if ej.is_zero() {
            continue;
        }
        out = &out + &exp_h_signed(m as usize).p_mul(&ej);
    }
    out
}

/// Verifies the adjunction <p_r f, g> = <f, r (d/dp_r) g> exactly.
pub fn adjoint_check(f: &PExpansion, g: &PExpansion, r: usize) -> bool {
    let lhs = PExpansion::p(r).p_mul(f).inner_product(g);
    let rhs = f.inner_product(&diff_p(r, g).scale(&RatFunc::constant(rat_int(r as i64))));
    lhs == rhs
}
