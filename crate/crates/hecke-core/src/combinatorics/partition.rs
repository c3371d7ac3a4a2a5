//! Integer partitions: canonical storage, enumeration, z-constants.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num::One;

use crate::arith::{Int, Poly, Rat, RatFunc};

/// An integer partition: weakly decreasing positive parts.
///
/// The empty partition (weight 0) is allowed. Partitions are canonical at
/// every API boundary: constructors sort descending and drop zeros.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Canonicalizing constructor: sorts descending, drops zero entries.
    pub fn new(parts: impl IntoIterator<Item = usize>) -> Self {
        let mut parts: Vec<usize> = parts.into_iter().filter(|&p| p > 0).collect();
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// Single-row partition (n), or the empty partition for n = 0.
    pub fn single(n: usize) -> Self {
        if n == 0 {
            Self::empty()
        } else {
            Partition { parts: vec![n] }
        }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Weight |lambda|, the sum of the parts.
    pub fn weight(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Length l(lambda), the number of parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// The largest part, or 0 for the empty partition.
    pub fn first_part(&self) -> usize {
        self.parts.first().copied().unwrap_or(0)
    }

    /// The partition with the largest part removed.
    pub fn rest(&self) -> Partition {
        Partition {
            parts: self.parts.iter().skip(1).copied().collect(),
        }
    }

    /// Multiplicity of the part `i`.
    pub fn multiplicity(&self, i: usize) -> usize {
        self.parts.iter().filter(|&&p| p == i).count()
    }
}

/// Ordered by weight, then reverse-lexicographically within a weight,
/// matching the order of [`partitions_of`].
impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.weight()
            .cmp(&other.weight())
            .then_with(|| other.parts.cmp(&self.parts))
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Text form: comma-separated parts, `-` for the empty partition.
impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return write!(f, "-");
        }
        let strs: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "{}", strs.join(","))
    }
}

/// Error produced when parsing a partition string.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartitionParseError {
    msg: String,
}

impl fmt::Display for PartitionParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "invalid partition: {}", self.msg)
    }
}

impl std::error::Error for PartitionParseError {}

/// Accepts comma-separated positive integers in any order (canonicalized),
/// and `-` or the empty string for the empty partition.
impl FromStr for Partition {
    type Err = PartitionParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s.is_empty() || s == "-" {
            return Ok(Partition::empty());
        }
        let mut parts = Vec::new();
        for piece in s.split(',') {
            let piece = piece.trim();
            let p: usize = piece.parse().map_err(|_| PartitionParseError {
                msg: format!("'{}' is not a positive integer", piece),
            })?;
            if p == 0 {
                return Err(PartitionParseError {
                    msg: "parts must be positive".to_string(),
                });
            }
            parts.push(p);
        }
        Ok(Partition::new(parts))
    }
}

/// All partitions of `n` in reverse-lexicographic order, each exactly once.
///
/// For n = 4 this is (4), (3,1), (2,2), (2,1,1), (1,1,1,1).
pub fn partitions_of(n: usize) -> Vec<Partition> {
    if n == 0 {
        return vec![Partition::empty()];
    }
    let mut out = Vec::new();
    let mut current = vec![n];
    loop {
        out.push(Partition {
            parts: current.clone(),
        });
        // rightmost part > 1
        let Some(k) = current.iter().rposition(|&p| p > 1) else {
            break;
        };
        // shrink it by one and redistribute the tail greedily
        let mut rem: usize = current[k + 1..].iter().sum::<usize>() + 1;
        current.truncate(k + 1);
        current[k] -= 1;
        let cap = current[k];
        while rem > cap {
            current.push(cap);
            rem -= cap;
        }
        current.push(rem);
    }
    out
}

/// The centralizer order z_lambda = prod_i i^{m_i} * m_i!.
pub fn z_of(lambda: &Partition) -> Int {
    let mut z = Int::one();
    let mut run_part = 0usize;
    let mut run_len = 0usize;
    for &part in lambda.parts() {
        if part == run_part {
            run_len += 1;
        } else {
            run_part = part;
            run_len = 1;
        }
        // accumulate i^{m_i} m_i! incrementally: each new copy of part i
        // contributes a factor i * (current multiplicity)
        z *= Int::from(part) * Int::from(run_len);
    }
    z
}

/// The deformation z_lambda(t) = z_lambda / prod_i (1 - t^{lambda_i}),
/// a rational function in the formal variable.
pub fn z_of_t(lambda: &Partition) -> RatFunc {
    let mut den = Poly::one();
    for &part in lambda.parts() {
        // 1 - t^part
        let factor = &Poly::one() - &Poly::monomial(Rat::one(), part);
        den = &den * &factor;
    }
    RatFunc::new(Poly::constant(Rat::from_integer(z_of(lambda))), den)
}
