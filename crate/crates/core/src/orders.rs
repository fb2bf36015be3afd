//! Order preservation: single-plateaued and 2-quasilinear weak orderings,
//! the list construction of a witnessing total ordering, and the
//! order-preservability decision for members of `F_n`.

use crate::classify::{is_realizable_preimage, member_details};
use crate::error::{Error, Result};
use crate::ordering::{TotalOrdering, WeakOrdering};
use crate::signature::PreimageSequence;
use crate::table::OpTable;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum OrderabilityReport {
    /// `F` is order-preserving for the witness ordering.
    Preservable(TotalOrdering),
    /// `a ≺ b ∼ c ∼ d` in `≾_F`, so `≾_F` is not 2-quasilinear.
    NotPreservable { witness: [usize; 4] },
}

impl OrderabilityReport {
    pub fn is_preservable(&self) -> bool {
        matches!(self, OrderabilityReport::Preservable(_))
    }

    pub fn witness(&self) -> Option<&TotalOrdering> {
        match self {
            OrderabilityReport::Preservable(l) => Some(l),
            OrderabilityReport::NotPreservable { .. } => None,
        }
    }
}

/// Monotonicity of `F` in each argument with respect to `order`.
///
/// It suffices to compare neighbours in `order`.
pub fn is_order_preserving(f: &OpTable, order: &TotalOrdering) -> Result<bool> {
    if f.n() != order.n() {
        return Err(Error::SizeMismatch { left: f.n(), right: order.n() });
    }
    let l = order.as_slice();
    for pair in l.windows(2) {
        let (lo, hi) = (pair[0], pair[1]);
        for &z in l {
            if !order.less_eq(f.get(lo, z), f.get(hi, z)) || !order.less_eq(f.get(z, lo), f.get(z, hi)) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// For every `a < b < c` in `order`: `b ≺ a`, `b ≺ c`, or `a ∼ b ∼ c`.
pub fn is_single_plateaued(w: &WeakOrdering, order: &TotalOrdering) -> Result<bool> {
    if w.n() != order.n() {
        return Err(Error::SizeMismatch { left: w.n(), right: order.n() });
    }
    let ranks: Vec<usize> = order.as_slice().iter().map(|&x| w.block_of(x)).collect();
    let n = ranks.len();
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                let (a, b, c) = (ranks[i], ranks[j], ranks[k]);
                if !(b < a || b < c || (a == b && b == c)) {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

/// Some `a ≺ b ∼ c ∼ d` with pairwise distinct elements, if any.
pub fn two_quasilinear_violation(w: &WeakOrdering) -> Option<[usize; 4]> {
    let blocks = w.blocks();
    blocks.iter().skip(1).find(|b| b.len() > 2).map(|b| [blocks[0][0], b[0], b[1], b[2]])
}

/// Every non-minimal block has at most two elements.
pub fn is_2_quasilinear(w: &WeakOrdering) -> bool {
    two_quasilinear_violation(w).is_none()
}

/// Every non-minimal block is a singleton.
pub fn is_quasilinear(w: &WeakOrdering) -> bool {
    w.blocks().iter().skip(1).all(|b| b.len() == 1)
}

/// Builds a total ordering for which a 2-quasilinear `w` is single-plateaued.
///
/// `within[i]` lists the elements of the `i`-th block of `w` in the chosen
/// order. The list is: the least element of each block `k, …, 2`; then the
/// whole first block; then the greater element of every two-element block
/// `2, …, k`.
pub fn construct_order(w: &WeakOrdering, within: &[Vec<usize>]) -> Result<TotalOrdering> {
    if let Some([a, b, c, d]) = two_quasilinear_violation(w) {
        return Err(Error::NotTwoQuasilinear { a, b, c, d });
    }
    if within.len() != w.len() {
        return Err(Error::SizeMismatch { left: w.len(), right: within.len() });
    }
    for (block, order) in w.blocks().iter().zip(within) {
        let mut sorted = order.clone();
        sorted.sort_unstable();
        if sorted != *block {
            return Err(Error::InvalidWeakOrdering(format!("{order:?} does not order block {block:?}")));
        }
    }
    let mut list = Vec::with_capacity(w.n());
    list.extend(within.iter().skip(1).rev().map(|s| s[0]));
    list.extend(&within[0]);
    list.extend(within.iter().skip(1).filter(|s| s.len() == 2).map(|s| s[1]));
    TotalOrdering::new(list)
}

/// [`construct_order`] with the natural order inside each block.
pub fn construct_order_natural(w: &WeakOrdering) -> Result<TotalOrdering> {
    construct_order(w, w.blocks())
}

/// Decides whether a member of `F_n` is order-preservable; when it is, the
/// report carries a total ordering for which it is order-preserving.
pub fn order_preservability(f: &OpTable) -> Result<OrderabilityReport> {
    let w = member_details(f)?.weak_ordering;
    if let Some(witness) = two_quasilinear_violation(&w) {
        return Ok(OrderabilityReport::NotPreservable { witness });
    }
    let order = construct_order_natural(&w)?;
    assert!(is_order_preserving(f, &order)?, "constructed ordering {order} does not preserve the operation");
    Ok(OrderabilityReport::Preservable(order))
}

/// Every value strictly above `c_1` occurs at most twice.
pub fn preimage_preservability_check(c: &PreimageSequence) -> Result<bool> {
    if !is_realizable_preimage(c) {
        return Err(Error::Unrealizable(c.counts().to_vec()));
    }
    let counts = c.counts();
    let first = counts[0];
    Ok(counts.iter().filter(|&&v| v > first).all(|&v| counts.iter().filter(|&&u| u == v).count() <= 2))
}
