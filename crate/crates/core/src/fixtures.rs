//! Named operations that recur in tests, benches and documentation.

use crate::classify::{is_associative, is_realizable_preimage};
use crate::enumerate::quasitrivial_tables;
use crate::ordering::{TotalOrdering, WeakOrdering};
use crate::table::{OpTable, Projection};

/// `max_≤n` on `X_n`.
pub fn max_natural(n: usize) -> OpTable {
    OpTable::max_of(&TotalOrdering::natural(n).expect("n >= 1"))
}

/// The member of `F_6` with `3 ∼ 4 ≺ 2 ≺ 1 ∼ 5 ∼ 6`, `π_2` on `{3, 4}` and
/// `π_1` on `{1, 5, 6}`.
pub fn six_blocks() -> OpTable {
    let w = WeakOrdering::new(vec![vec![3, 4], vec![2], vec![1, 5, 6]]).expect("valid");
    OpTable::ordinal_sum(&w, &[Projection::Second, Projection::First, Projection::First]).expect("valid")
}

/// A member of `F_4` with signature `(1, 3)`: `2` is least and `π_2` acts on
/// `{1, 3, 4}`. It is not order-preservable.
pub fn one_under_three() -> OpTable {
    OpTable::from_rows(vec![vec![1, 1, 3, 4], vec![1, 2, 3, 4], vec![1, 3, 3, 4], vec![1, 4, 3, 4]]).expect("valid")
}

/// The first quasitrivial table on `X_3` (in [`quasitrivial_tables`] order)
/// that is not associative although its preimage sequence `(3, 3, 3)` is
/// realizable.
pub fn realizable_non_associative() -> OpTable {
    quasitrivial_tables(3)
        .expect("n = 3 is within the guard")
        .find(|f| {
            let c = f.preimage_sequence();
            c.counts() == [3, 3, 3] && is_realizable_preimage(&c) && !is_associative(f)
        })
        .expect("such a table exists on X_3")
}
