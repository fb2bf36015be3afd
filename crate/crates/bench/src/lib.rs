//! Inputs shared by the benchmarks.

use quasitrivial::{is_member, OpTable, Projection, WeakOrdering};

/// A member of `F_n` with blocks of sizes cycling through 1, 2, 3 and
/// alternating projections, relabeled so that no block is an interval.
pub fn mixed_member(n: usize) -> OpTable {
    let mut blocks: Vec<Vec<usize>> = Vec::new();
    let mut next = 0;
    let mut size = 1;
    while next < n {
        let take = size.min(n - next);
        blocks.push((next..next + take).map(|i| scatter(i, n) + 1).collect());
        next += take;
        size = size % 3 + 1;
    }
    let projections: Vec<Projection> =
        (0..blocks.len()).map(|i| if i % 2 == 0 { Projection::First } else { Projection::Second }).collect();
    let w = WeakOrdering::new(blocks).expect("partition of X_n");
    OpTable::ordinal_sum(&w, &projections).expect("one projection per block")
}

/// A fixed permutation of `0..n` (multiplication by a unit modulo `n`).
fn scatter(i: usize, n: usize) -> usize {
    let step = (2..n).find(|s| gcd(*s, n) == 1 && *s * *s > n).unwrap_or(1);
    i * step % n
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// The first single-cell change of [`mixed_member`] (row-major) that stays
/// quasitrivial but leaves `F_n`.
pub fn broken_member(n: usize) -> OpTable {
    let f = mixed_member(n);
    (1..=n)
        .flat_map(|x| (1..=n).map(move |y| (x, y)))
        .filter(|&(x, y)| x != y)
        .map(|(x, y)| {
            let flipped = if f.get(x, y) == x { y } else { x };
            OpTable::from_fn(n, |a, b| if (a, b) == (x, y) { flipped } else { f.get(a, b) }).expect("valid table")
        })
        .find(|g| !is_member(g))
        .expect("some flip breaks associativity for n >= 3")
}
