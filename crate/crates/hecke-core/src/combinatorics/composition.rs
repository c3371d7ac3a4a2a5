//! Sub-compositions: tuples tau with 0 <= tau_i <= mu_i, taken relative to a
//! fixed partition mu. These index the outer sum of the dual recursion.

use super::Partition;

/// A tuple of nonnegative entries bounded componentwise by a reference
/// partition. Zero entries are allowed and significant: the length of the
/// tuple always equals the length of the reference partition.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SubComposition {
    entries: Vec<usize>,
}

impl SubComposition {
    pub fn entries(&self) -> &[usize] {
        &self.entries
    }

    /// |tau|, the sum of the entries.
    pub fn weight(&self) -> usize {
        self.entries.iter().sum()
    }

    /// l(tau), the number of strictly positive entries.
    pub fn positive_count(&self) -> usize {
        self.entries.iter().filter(|&&e| e > 0).count()
    }
}

/// All tuples tau of length l(mu) with 0 <= tau_i <= mu_i, in lexicographic
/// order starting from the all-zero tuple. Cardinality prod_i (mu_i + 1).
pub fn sub_compositions(mu: &Partition) -> Vec<SubComposition> {
    let bounds = mu.parts();
    let mut out = Vec::new();
    let mut current = vec![0usize; bounds.len()];
    loop {
        out.push(SubComposition {
            entries: current.clone(),
        });
        // odometer increment from the last position
        let mut i = bounds.len();
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if current[i] < bounds[i] {
                current[i] += 1;
                for e in current[i + 1..].iter_mut() {
                    *e = 0;
                }
                break;
            }
        }
    }
}

/// The partition mu - tau: componentwise differences with zeros dropped.
///
/// Panics if tau is incompatible with mu (length mismatch or tau_i > mu_i).
pub fn subtract_to_partition(mu: &Partition, tau: &SubComposition) -> Partition {
    assert_eq!(
        mu.len(),
        tau.entries().len(),
        "subtract_to_partition: length mismatch"
    );
    Partition::new(
        mu.parts()
            .iter()
            .zip(tau.entries())
            .map(|(&m, &t)| {
                assert!(t <= m, "subtract_to_partition: tau exceeds mu");
                m - t
            })
            .collect::<Vec<_>>(),
    )
}
