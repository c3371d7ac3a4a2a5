//! Full character tables over P_n x P_n and their JSON serialization.

use serde::Serialize;

use crate::arith::Poly;
use crate::combinatorics::{partitions_of, Partition};

use super::{dual_mn, frobenius_oracle, CharCache};

/// Which algorithm fills the table.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Method {
    /// Dual Murnaghan-Nakayama recursion with one memo cache shared across
    /// all entries.
    Dual,
    /// Frobenius inner-product formula, normalized entrywise.
    Oracle,
}

impl Method {
    pub fn name(self) -> &'static str {
        match self {
            Method::Dual => "dual",
            Method::Oracle => "oracle",
        }
    }
}

impl std::str::FromStr for Method {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "dual" => Ok(Method::Dual),
            "oracle" => Ok(Method::Oracle),
            other => Err(format!("unknown method '{}'", other)),
        }
    }
}

/// The complete table of character values for weight `n`: rows are the upper
/// partitions lambda, columns the class types mu, both in enumeration order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharTable {
    n: usize,
    rows: Vec<Partition>,
    cols: Vec<Partition>,
    values: Vec<Vec<Poly>>,
}

impl CharTable {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn rows(&self) -> &[Partition] {
        &self.rows
    }

    pub fn cols(&self) -> &[Partition] {
        &self.cols
    }

    pub fn values(&self) -> &[Vec<Poly>] {
        &self.values
    }

    /// Number of (lambda, mu) cells.
    pub fn cell_count(&self) -> usize {
        self.rows.len() * self.cols.len()
    }

    /// The value chi^lambda_mu, if both labels belong to the table.
    pub fn value(&self, lambda: &Partition, mu: &Partition) -> Option<&Poly> {
        let i = self.rows.iter().position(|p| p == lambda)?;
        let j = self.cols.iter().position(|p| p == mu)?;
        Some(&self.values[i][j])
    }

    /// Serialize to the fixed JSON schema:
    /// `{"n": int, "rows": [...], "cols": [...], "values": [[...]]}` with
    /// partitions in text form and values in canonical polynomial form.
    pub fn to_json_string(&self) -> String {
        #[derive(Serialize)]
        struct TableJson {
            n: usize,
            rows: Vec<String>,
            cols: Vec<String>,
            values: Vec<Vec<String>>,
        }
        let json = TableJson {
            n: self.n,
            rows: self.rows.iter().map(|p| p.to_string()).collect(),
            cols: self.cols.iter().map(|p| p.to_string()).collect(),
            values: self
                .values
                .iter()
                .map(|row| row.iter().map(|v| v.to_string()).collect())
                .collect(),
        };
        serde_json::to_string(&json).expect("table serialization cannot fail")
    }
}

/// Compute the complete character table of weight `n` with the chosen
/// method. Entries are identical for both methods; only the route differs.
pub fn character_table(n: usize, method: Method) -> CharTable {
    let labels = partitions_of(n);
    let mut cache = CharCache::new();
    let values: Vec<Vec<Poly>> = labels
        .iter()
        .map(|lambda| {
            labels
                .iter()
                .map(|mu| match method {
                    Method::Dual => dual_mn(lambda, mu, &mut cache),
                    Method::Oracle => frobenius_oracle(lambda, mu)
                        .to_int_poly()
                        .unwrap_or_else(|e| {
                            panic!(
                                "oracle value failed to normalize at ({}, {}): {}",
                                lambda, mu, e
                            )
                        }),
                })
                .collect()
        })
        .collect();
    CharTable {
        n,
        rows: labels.clone(),
        cols: labels,
        values,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn part(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec())
    }

    #[test]
    fn weight_zero_table() {
        let t = character_table(0, Method::Dual);
        assert_eq!(t.cell_count(), 1);
        assert_eq!(
            t.value(&Partition::empty(), &Partition::empty()),
            Some(&Poly::one())
        );
        assert_eq!(
            t.to_json_string(),
            r#"{"n":0,"rows":["-"],"cols":["-"],"values":[["1"]]}"#
        );
    }

    #[test]
    fn weight_two_table() {
        let t = character_table(2, Method::Dual);
        assert_eq!(t.value(&part(&[2]), &part(&[2])), Some(&Poly::var()));
        assert_eq!(t.value(&part(&[2]), &part(&[1, 1])), Some(&Poly::one()));
        assert_eq!(
            t.value(&part(&[1, 1]), &part(&[2])),
            Some(&Poly::from_int_coeffs(&[-1]))
        );
        assert_eq!(t.value(&part(&[1, 1]), &part(&[1, 1])), Some(&Poly::one()));
    }

    #[test]
    fn weight_three_entry_and_method_agreement() {
        for method in [Method::Dual, Method::Oracle] {
            let t = character_table(3, method);
            assert_eq!(
                t.value(&part(&[2, 1]), &part(&[3])),
                Some(&Poly::from_int_coeffs(&[0, -1])),
                "method {:?}",
                method
            );
        }
        assert_eq!(
            character_table(3, Method::Dual),
            character_table(3, Method::Oracle)
        );
    }

    #[test]
    fn shared_cache_matches_fresh_caches() {
        for n in 0..=6usize {
            let shared = character_table(n, Method::Dual);
            for (i, lambda) in shared.rows().iter().enumerate() {
                for (j, mu) in shared.cols().iter().enumerate() {
                    let mut fresh = CharCache::new();
                    assert_eq!(
                        dual_mn(lambda, mu, &mut fresh),
                        shared.values()[i][j],
                        "({}, {})",
                        lambda,
                        mu
                    );
                }
            }
        }
    }
}
