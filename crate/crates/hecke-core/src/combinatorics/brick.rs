//! Brick tabloids: ordered decompositions of a row of n boxes into bricks of
//! positive lengths. The prefix sums r_i drive the coefficients of both the
//! e-to-q transition and the dual character recursion.

use super::Partition;

/// An ordered sequence of positive brick lengths. The empty tabloid is the
/// unique tabloid of 0.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BrickTabloid {
    bricks: Vec<usize>,
}

impl BrickTabloid {
    pub fn bricks(&self) -> &[usize] {
        &self.bricks
    }

    /// l(b), the number of bricks.
    pub fn len(&self) -> usize {
        self.bricks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bricks.is_empty()
    }

    /// Total number of boxes.
    pub fn total(&self) -> usize {
        self.bricks.iter().sum()
    }

    /// The prefix sums r_1 < r_2 < ... < r_l = total().
    pub fn prefix_sums(&self) -> Vec<usize> {
        self.bricks
            .iter()
            .scan(0usize, |acc, &b| {
                *acc += b;
                Some(*acc)
            })
            .collect()
    }

    /// The type of the tabloid: its bricks rearranged into a partition.
    pub fn type_partition(&self) -> Partition {
        Partition::new(self.bricks.iter().copied())
    }
}

/// All brick tabloids of `n` in lexicographic order on the brick sequence.
/// There are 2^{n-1} of them for n >= 1, and only the empty tabloid for n = 0.
pub fn brick_tabloids(n: usize) -> Vec<BrickTabloid> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    fill_tabloids(n, &mut current, &mut out);
    out
}

fn fill_tabloids(rem: usize, current: &mut Vec<usize>, out: &mut Vec<BrickTabloid>) {
    if rem == 0 {
        out.push(BrickTabloid {
            bricks: current.clone(),
        });
        return;
    }
    for first in 1..=rem {
        current.push(first);
        fill_tabloids(rem - first, current, out);
        current.pop();
    }
}

/// All brick tabloids whose type is `rho`: the distinct orderings of the
/// multiset of parts, in lexicographic order. There are
/// l(rho)! / prod_i m_i(rho)! of them.
pub fn brick_tabloids_of_type(rho: &Partition) -> Vec<BrickTabloid> {
    let mut pool: Vec<usize> = rho.parts().to_vec();
    pool.sort_unstable();
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(pool.len());
    fill_orderings(&mut pool, &mut current, &mut out);
    out
}

fn fill_orderings(pool: &mut Vec<usize>, current: &mut Vec<usize>, out: &mut Vec<BrickTabloid>) {
    if pool.is_empty() {
        out.push(BrickTabloid {
            bricks: current.clone(),
        });
        return;
    }
    let mut last_picked = None;
    for i in 0..pool.len() {
        if last_picked == Some(pool[i]) {
            continue;
        }
        last_picked = Some(pool[i]);
        let value = pool.remove(i);
        current.push(value);
        fill_orderings(pool, current, out);
        current.pop();
        pool.insert(i, value);
    }
}

/// Multiset union of the parts of a partition and the bricks of a tabloid,
/// sorted into a partition.
pub fn union_parts(p: &Partition, b: &BrickTabloid) -> Partition {
    Partition::new(
        p.parts()
            .iter()
            .copied()
            .chain(b.bricks().iter().copied())
            .collect::<Vec<_>>(),
    )
}
