//! Verification suites behind `hecke verify`: each drives one of the
//! library's identity families up to a weight bound and reports per-identity
//! instance counts.

use hecke_core::{
    apply_s, apply_s_star, brick_tabloids, dual_mn, e_expansion_check, frobenius_oracle,
    omega_char, partitions_of, q_product, sub_compositions, subtract_to_partition, CharCache,
    PExpansion, RatFunc,
};

pub struct Report {
    pub text: String,
    pub failed: bool,
}

pub fn run_suite(name: &str, max_n: usize) -> Result<Report, String> {
    let mut report = Report {
        text: String::new(),
        failed: false,
    };
    match name {
        "commutation" => commutation(max_n, &mut report),
        "lemma" => lemma(max_n, &mut report),
        "prop23" => prop23(max_n, &mut report),
        "oracle" => oracle(max_n, &mut report),
        "q1" => q_one(max_n, &mut report),
        "all" => {
            for suite in ["commutation", "lemma", "prop23", "oracle", "q1"] {
                match suite {
                    "commutation" => commutation(max_n, &mut report),
                    "lemma" => lemma(max_n, &mut report),
                    "prop23" => prop23(max_n, &mut report),
                    "oracle" => oracle(max_n, &mut report),
                    "q1" => q_one(max_n, &mut report),
                    _ => unreachable!(),
                }
            }
            let status = if report.failed { "FAIL" } else { "PASS" };
            report.text.push_str(&format!("all: {} (5 suites)\n", status));
        }
        other => {
            return Err(format!(
                "unknown suite '{}'; expected one of all, commutation, lemma, prop23, oracle, q1",
                other
            ))
        }
    }
    Ok(report)
}

fn commutation(max_n: usize, report: &mut Report) {
    let mut vectors = Vec::new();
    for w in 0..=max_n {
        for nu in partitions_of(w) {
            vectors.push(PExpansion::p_of(&nu));
        }
    }
    let mut instances = 0usize;
    for f in &vectors {
        for m in -4..=4i64 {
            for n in -4..=4i64 {
                let ss = &apply_s(m, &apply_s(n, f)) + &apply_s(n - 1, &apply_s(m + 1, f));
                if !ss.is_zero() {
                    report.failed = true;
                    report.text.push_str(&format!(
                        "commutation: FAIL S_{} S_{} + S_{} S_{} != 0\n",
                        m,
                        n,
                        n - 1,
                        m + 1
                    ));
                    return;
                }
                let star = &apply_s_star(m, &apply_s_star(n, f))
                    + &apply_s_star(n + 1, &apply_s_star(m - 1, f));
                if !star.is_zero() {
                    report.failed = true;
                    report.text.push_str(&format!(
                        "commutation: FAIL S*_{} S*_{} + S*_{} S*_{} != 0\n",
                        m,
                        n,
                        n + 1,
                        m - 1
                    ));
                    return;
                }
                let mixed =
                    &apply_s(m, &apply_s_star(n, f)) + &apply_s_star(n - 1, &apply_s(m - 1, f));
                let expected = if m == n { f.clone() } else { PExpansion::zero() };
                if mixed != expected {
                    report.failed = true;
                    report.text.push_str(&format!(
                        "commutation: FAIL mixed relation at m={}, n={}\n",
                        m, n
                    ));
                    return;
                }
                instances += 3;
            }
        }
    }
    report.text.push_str(&format!(
        "commutation: PASS ({} instances, |m|,|n| <= 4, vectors of weight <= {})\n",
        instances, max_n
    ));
}

fn lemma(max_n: usize, report: &mut Report) {
    for n in 1..=max_n {
        let lhs = apply_s_star(-(n as i64), &PExpansion::one());
        let mut rhs = PExpansion::zero();
        for b in brick_tabloids(n) {
            let mut coeff = RatFunc::one();
            for r in b.prefix_sums() {
                let factor = (&RatFunc::var().int_pow(-(r as i64)) - &RatFunc::one())
                    .inverse()
                    .expect("nonzero");
                coeff = &coeff * &factor;
            }
            let q_b = q_product(&b.type_partition()).map_coeffs(|c| c.reciprocal_subst());
            rhs = &rhs + &q_b.scale(&coeff);
        }
        if lhs != rhs {
            report.failed = true;
            report
                .text
                .push_str(&format!("lemma: FAIL brick-tabloid expansion at n = {}\n", n));
            return;
        }
    }
    report.text.push_str(&format!(
        "lemma: PASS S*_(-n).1 brick-tabloid expansion for 1 <= n <= {}\n",
        max_n
    ));
    for m in 0..=max_n {
        if !e_expansion_check(m) {
            report.failed = true;
            report
                .text
                .push_str(&format!("lemma: FAIL e-expansion at m = {}\n", m));
            return;
        }
    }
    report.text.push_str(&format!(
        "lemma: PASS e_m = sum C_(m,rho) q_rho for 0 <= m <= {}\n",
        max_n
    ));
}

fn prop23(max_n: usize, report: &mut Report) {
    let one_minus_t = &RatFunc::one() - &RatFunc::var();
    let mut instances = 0usize;
    for w in 0..=max_n {
        for mu in partitions_of(w) {
            let q_mu = q_product(&mu);
            for k in 0..=8i64 {
                let lhs = apply_s_star(k, &q_mu);
                let mut rhs = PExpansion::zero();
                for tau in sub_compositions(&mu) {
                    let boundary = apply_s_star(k - tau.weight() as i64, &PExpansion::one());
                    if boundary.is_zero() {
                        continue;
                    }
                    let factor = one_minus_t.int_pow(tau.positive_count() as i64);
                    rhs = &rhs
                        + &q_product(&subtract_to_partition(&mu, &tau))
                            .p_mul(&boundary)
                            .scale(&factor);
                }
                if lhs != rhs {
                    report.failed = true;
                    report.text.push_str(&format!(
                        "prop23: FAIL expansion at mu = {}, k = {}\n",
                        mu, k
                    ));
                    return;
                }
                instances += 1;
            }
        }
    }
    report.text.push_str(&format!(
        "prop23: PASS ({} (mu, k) instances, |mu| <= {}, 0 <= k <= 8)\n",
        instances, max_n
    ));
}

fn oracle(max_n: usize, report: &mut Report) {
    let mut cache = CharCache::new();
    let mut total = 0usize;
    for n in 0..=max_n {
        let mut pairs = 0usize;
        for lambda in partitions_of(n) {
            for mu in partitions_of(n) {
                let via_dual = dual_mn(&lambda, &mu, &mut cache);
                let via_oracle = match frobenius_oracle(&lambda, &mu).to_int_poly() {
                    Ok(p) => p,
                    Err(e) => {
                        report.failed = true;
                        report.text.push_str(&format!(
                            "oracle: FAIL value not polynomial at ({}, {}): {}\n",
                            lambda, mu, e
                        ));
                        return;
                    }
                };
                if via_dual != via_oracle {
                    report.failed = true;
                    report.text.push_str(&format!(
                        "oracle: FAIL dual = {} but oracle = {} at ({}, {})\n",
                        via_dual, via_oracle, lambda, mu
                    ));
                    return;
                }
                pairs += 1;
            }
        }
        report.text.push_str(&format!(
            "oracle: n={}: {} pair{}\n",
            n,
            pairs,
            if pairs == 1 { "" } else { "s" }
        ));
        total += pairs;
    }
    report
        .text
        .push_str(&format!("oracle: PASS ({} pairs checked)\n", total));
}

fn q_one(max_n: usize, report: &mut Report) {
    let one = hecke_core::arith::rat_int(1);
    let mut cache = CharCache::new();
    let mut pairs = 0usize;
    for n in 0..=max_n {
        for lambda in partitions_of(n) {
            for mu in partitions_of(n) {
                let at_one = dual_mn(&lambda, &mu, &mut cache).eval_at(&one);
                if at_one != omega_char(&lambda, &mu) {
                    report.failed = true;
                    report.text.push_str(&format!(
                        "q1: FAIL specialization at ({}, {})\n",
                        lambda, mu
                    ));
                    return;
                }
                pairs += 1;
            }
        }
    }
    report.text.push_str(&format!(
        "q1: PASS (chi(1) equals the symmetric-group character on {} pairs, n <= {})\n",
        pairs, max_n
    ));
}
