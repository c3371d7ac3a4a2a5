//! Partitions, bounded sub-compositions, brick tabloids and the z-constants.
//!
//! Enumeration orders are fixed so that downstream output is deterministic:
//! - partitions of n: reverse-lexicographic, `(n)` first, `(1^n)` last
//! - sub-compositions of mu: lexicographic (odometer from the all-zero tuple)
//! - brick tabloids of n: lexicographic on the brick sequence
//!
//! All values are immutable after construction and every operation is pure.

mod brick;
mod composition;
mod partition;

pub use brick::{brick_tabloids, brick_tabloids_of_type, union_parts, BrickTabloid};
pub use composition::{sub_compositions, subtract_to_partition, SubComposition};
pub use partition::{partitions_of, z_of, z_of_t, Partition, PartitionParseError};
