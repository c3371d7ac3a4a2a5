//! Shared fixtures for the criterion benchmarks.

use hecke_core::{partitions_of, Partition};

/// Table weights the benchmarks sweep. Kept small enough that the oracle
/// route stays in the seconds range per iteration.
pub const TABLE_SIZES: [usize; 3] = [4, 5, 6];

/// The worked-example pair, the single value both algorithms are timed on.
pub fn worked_example() -> (Partition, Partition) {
    (
        Partition::new(vec![3, 2, 1]),
        Partition::new(vec![4, 2]),
    )
}

/// All (lambda, mu) pairs of weight n, in enumeration order.
pub fn pairs_of_weight(n: usize) -> Vec<(Partition, Partition)> {
    let all = partitions_of(n);
    all.iter()
        .flat_map(|l| all.iter().map(move |m| (l.clone(), m.clone())))
        .collect()
}
