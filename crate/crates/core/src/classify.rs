//! Membership in `F_n` (associative quasitrivial operations), the weak
//! ordering `≾_F`, ordinal-sum decompositions and preimage sequences.
//!
//! The fast membership test runs in `O(n²)`: build `≾_F` from preimage
//! counts, extend it to a total ordering, and check that `F` is an ordinal
//! sum of projections on that ordering. [`is_associative`] is the plain
//! `O(n³)` check and serves as the reference.

use std::ops::Range;

use crate::error::{Error, Result};
use crate::ordering::{TotalOrdering, WeakOrdering};
use crate::signature::{PreimageSequence, Signature};
use crate::table::{OpTable, Projection};

/// What an ordinal sum does inside one block.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BlockChoice {
    First,
    Second,
    Singleton,
}

/// `F` written as an ordinal sum of projections on a total ordering:
/// `π_1` or `π_2` inside each convex block, `max` across blocks.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrdinalSumDecomposition {
    pub order: TotalOrdering,
    /// Position ranges into `order`, least block first.
    pub blocks: Vec<Range<usize>>,
    pub choices: Vec<BlockChoice>,
}

impl OrdinalSumDecomposition {
    pub fn weak_ordering(&self) -> WeakOrdering {
        let order = self.order.as_slice();
        WeakOrdering::new(self.blocks.iter().map(|r| order[r.clone()].to_vec()).collect())
            .expect("blocks partition the carrier")
    }

    pub fn projections(&self) -> Vec<Projection> {
        self.choices
            .iter()
            .map(|c| match c {
                BlockChoice::Second => Projection::Second,
                _ => Projection::First,
            })
            .collect()
    }

    pub fn to_table(&self) -> OpTable {
        OpTable::ordinal_sum(&self.weak_ordering(), &self.projections()).expect("one choice per block")
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MemberDetails {
    pub weak_ordering: WeakOrdering,
    pub signature: Signature,
    pub decomposition: OrdinalSumDecomposition,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassReport {
    pub quasitrivial: bool,
    pub associative: bool,
    /// Present exactly when the operation is in `F_n`.
    pub details: Option<MemberDetails>,
}

impl ClassReport {
    pub fn is_member(&self) -> bool {
        self.details.is_some()
    }
}

pub fn is_quasitrivial(f: &OpTable) -> bool {
    let n = f.n();
    (1..=n).all(|x| f.row(x).zip(1..=n).all(|(v, y)| v == x || v == y))
}

/// Exhaustive check of `F(F(x,y),z) = F(x,F(y,z))` over all triples.
pub fn is_associative(f: &OpTable) -> bool {
    let n = f.n();
    for x in 1..=n {
        for y in 1..=n {
            let xy = f.get(x, y);
            for z in 1..=n {
                if f.get(xy, z) != f.get(x, f.get(y, z)) {
                    return false;
                }
            }
        }
    }
    true
}

/// Groups elements by preimage size, smallest first.
pub fn weak_ordering_from_counts(f: &OpTable) -> WeakOrdering {
    WeakOrdering::from_keys(&f.preimage_counts()).expect("n >= 1")
}

/// Builds `≾_F` from `x ≾ y ⇔ F(x,y) = y or F(y,x) = y`.
///
/// Requires `F ∈ F_n`; membership is checked with the `O(n³)` reference so
/// that this route stays independent of the preimage-count route.
pub fn weak_ordering_from_relation(f: &OpTable) -> Result<WeakOrdering> {
    if !is_quasitrivial(f) || !is_associative(f) {
        return Err(Error::NotAMember);
    }
    let n = f.n();
    let le = |x: usize, y: usize| f.get(x, y) == y || f.get(y, x) == y;
    for x in 1..=n {
        for y in 1..=n {
            if !le(x, y) && !le(y, x) {
                return Err(Error::NotAMember);
            }
            for z in 1..=n {
                if le(x, y) && le(y, z) && !le(x, z) {
                    return Err(Error::NotAMember);
                }
            }
        }
    }
    // In a total preorder, the number of elements below or equal to x is a
    // strictly monotone key for the blocks.
    let keys: Vec<usize> = (1..=n).map(|x| (1..=n).filter(|&z| le(z, x)).count()).collect();
    WeakOrdering::from_keys(&keys)
}

/// Tries to write `F` as an ordinal sum of projections on `order`.
///
/// Adjacent elements `a < b` of `order` share a block exactly when
/// `F(a,b) ≠ F(b,a)`; the candidate read off those pairs is then compared
/// against every cell.
pub fn ordinal_sum_decomposition(f: &OpTable, order: &TotalOrdering) -> Option<OrdinalSumDecomposition> {
    if f.n() != order.n() {
        return None;
    }
    let l = order.as_slice();
    let mut blocks = Vec::new();
    let mut choices = Vec::new();
    let mut start = 0;
    let mut choice = BlockChoice::Singleton;
    for i in 0..l.len() {
        let close = if i + 1 == l.len() {
            true
        } else {
            let (a, b) = (l[i], l[i + 1]);
            let (ab, ba) = (f.get(a, b), f.get(b, a));
            let pair = match (ab == a, ab == b, ba == a, ba == b) {
                (_, true, _, true) => None,
                (true, _, _, true) => Some(BlockChoice::First),
                (_, true, true, _) => Some(BlockChoice::Second),
                _ => return None,
            };
            match (pair, choice) {
                (None, _) => true,
                (Some(p), BlockChoice::Singleton) => {
                    choice = p;
                    false
                }
                (Some(p), c) if p == c => false,
                _ => return None,
            }
        };
        if close {
            blocks.push(start..i + 1);
            choices.push(choice);
            start = i + 1;
            choice = BlockChoice::Singleton;
        }
    }
    let decomposition = OrdinalSumDecomposition { order: order.clone(), blocks, choices };
    let n = f.n();
    let mut block_of = vec![0; n];
    for (b, r) in decomposition.blocks.iter().enumerate() {
        for &x in &l[r.clone()] {
            block_of[x - 1] = b;
        }
    }
    for x in 1..=n {
        for (y, v) in (1..=n).zip(f.row(x)) {
            let expected = if block_of[x - 1] == block_of[y - 1] {
                match decomposition.choices[block_of[x - 1]] {
                    BlockChoice::Second => y,
                    _ => x,
                }
            } else {
                order.max(x, y)
            };
            if v != expected {
                return None;
            }
        }
    }
    Some(decomposition)
}

pub fn is_ordinal_sum_on(f: &OpTable, order: &TotalOrdering) -> bool {
    ordinal_sum_decomposition(f, order).is_some()
}

pub fn classify(f: &OpTable) -> ClassReport {
    if !is_quasitrivial(f) {
        return ClassReport { quasitrivial: false, associative: is_associative(f), details: None };
    }
    let w = weak_ordering_from_counts(f);
    let details = ordinal_sum_decomposition(f, &w.natural_extension()).map(|decomposition| MemberDetails {
        signature: w.signature(),
        weak_ordering: w,
        decomposition,
    });
    if cfg!(debug_assertions) && f.n() <= 32 {
        debug_assert_eq!(details.is_some(), is_associative(f), "fast membership test disagrees with oracle");
    }
    ClassReport { quasitrivial: true, associative: details.is_some(), details }
}

pub fn is_member(f: &OpTable) -> bool {
    classify(f).is_member()
}

/// Membership details, or [`Error::NotAMember`].
pub fn member_details(f: &OpTable) -> Result<MemberDetails> {
    classify(f).details.ok_or(Error::NotAMember)
}

/// Block `i` contributes `n_i` copies of `2(n_1 + … + n_{i-1}) + n_i`.
pub fn preimage_from_signature(s: &Signature) -> PreimageSequence {
    let mut counts = Vec::with_capacity(s.n());
    let mut below = 0;
    for &part in s.parts() {
        counts.extend(std::iter::repeat_n(2 * below + part, part));
        below += part;
    }
    PreimageSequence::new(counts).expect("values increase block by block")
}

/// `c_i = min{j : c_j = c_i} + max{j : c_j = c_i} − 1` for every `i` (1-based `j`).
pub fn is_realizable_preimage(c: &PreimageSequence) -> bool {
    let counts = c.counts();
    let mut first = 0;
    while first < counts.len() {
        let mut last = first;
        while last + 1 < counts.len() && counts[last + 1] == counts[first] {
            last += 1;
        }
        if counts[first] != (first + 1) + (last + 1) - 1 {
            return false;
        }
        first = last + 1;
    }
    true
}

pub fn signature_from_preimage(c: &PreimageSequence) -> Result<Signature> {
    if !is_realizable_preimage(c) {
        return Err(Error::Unrealizable(c.counts().to_vec()));
    }
    Signature::new(c.frequencies())
}

/// A member of `F_n` with the given preimage sequence.
///
/// If the sequence is constant this is `π_1`; otherwise the prefix below
/// the top value is realized recursively on `X_ℓ`, `π_1` is used on the top
/// block and `max_≤n` across.
pub fn realize_preimage(c: &PreimageSequence) -> Result<OpTable> {
    if !is_realizable_preimage(c) {
        return Err(Error::Unrealizable(c.counts().to_vec()));
    }
    let counts = c.counts();
    let n = counts.len();
    let top = counts[n - 1];
    if counts[0] == top {
        return OpTable::projection(n, Projection::First);
    }
    let ell = counts.iter().rposition(|&v| v < top).expect("c_1 < c_n") + 1;
    let lower = realize_preimage(&PreimageSequence::new(counts[..ell].to_vec())?)?;
    OpTable::from_fn(n, |x, y| {
        if x <= ell && y <= ell {
            lower.get(x, y)
        } else if x > ell && y > ell {
            x
        } else {
            x.max(y)
        }
    })
}

/// Contour plots of `F` and `G` are isomorphic exactly when their preimage
/// sequences agree, since every component is a complete graph.
pub fn contour_isomorphic(f: &OpTable, g: &OpTable) -> Result<bool> {
    if f.n() != g.n() {
        return Err(Error::SizeMismatch { left: f.n(), right: g.n() });
    }
    Ok(f.preimage_sequence() == g.preimage_sequence())
}
