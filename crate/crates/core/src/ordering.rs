//! Weak and total orderings on `X_n = {1, …, n}`.
//!
//! A weak ordering is stored as a totally ordered partition: a list of
//! blocks from the least to the greatest, each block sorted in increasing
//! natural order so that equal orderings have identical representations.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::perm::Permutation;
use crate::signature::Signature;

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct WeakOrdering {
    blocks: Vec<Vec<usize>>,
    /// `rank[x - 1]` is the index of the block holding `x`.
    rank: Vec<usize>,
}

impl WeakOrdering {
    /// Builds a weak ordering from blocks listed from least to greatest.
    pub fn new(blocks: Vec<Vec<usize>>) -> Result<Self> {
        let n: usize = blocks.iter().map(Vec::len).sum();
        if blocks.is_empty() || n == 0 {
            return Err(Error::EmptyCarrier);
        }
        let mut rank = vec![usize::MAX; n];
        for (i, block) in blocks.iter().enumerate() {
            if block.is_empty() {
                return Err(Error::InvalidWeakOrdering(format!("block {} is empty", i + 1)));
            }
            for &x in block {
                if x == 0 || x > n {
                    return Err(Error::InvalidWeakOrdering(format!("element {x} outside 1..={n}")));
                }
                if rank[x - 1] != usize::MAX {
                    return Err(Error::InvalidWeakOrdering(format!("element {x} listed twice")));
                }
                rank[x - 1] = i;
            }
        }
        let blocks = blocks
            .into_iter()
            .map(|mut b| {
                b.sort_unstable();
                b
            })
            .collect();
        Ok(Self { blocks, rank })
    }

    /// Groups elements by a key, ordering blocks by increasing key.
    /// `keys[x - 1]` is the key of `x`.
    pub fn from_keys<K: Ord + Clone>(keys: &[K]) -> Result<Self> {
        if keys.is_empty() {
            return Err(Error::EmptyCarrier);
        }
        let mut distinct: Vec<K> = keys.to_vec();
        distinct.sort();
        distinct.dedup();
        let mut blocks = vec![Vec::new(); distinct.len()];
        for (i, k) in keys.iter().enumerate() {
            let b = distinct.binary_search(k).expect("key present");
            blocks[b].push(i + 1);
        }
        Self::new(blocks)
    }

    /// The weak ordering with one block `{1, …, n}`.
    pub fn single_block(n: usize) -> Result<Self> {
        Self::new(vec![(1..=n).collect()])
    }

    pub fn n(&self) -> usize {
        self.rank.len()
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    /// Number of blocks `k`.
    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Index (0-based, from the least block) of the block containing `x`.
    /// Panics if `x` is outside `1..=n`.
    pub fn block_of(&self, x: usize) -> usize {
        self.rank[x - 1]
    }

    /// Compares `x` and `y`; `Equal` means `x ∼ y`.
    pub fn compare(&self, x: usize, y: usize) -> Result<Ordering> {
        self.check(x)?;
        self.check(y)?;
        Ok(self.rank[x - 1].cmp(&self.rank[y - 1]))
    }

    fn check(&self, x: usize) -> Result<()> {
        if x == 0 || x > self.n() {
            Err(Error::OutOfRange { element: x, n: self.n() })
        } else {
            Ok(())
        }
    }

    pub fn signature(&self) -> Signature {
        Signature::new(self.blocks.iter().map(Vec::len).collect()).expect("blocks are nonempty")
    }

    /// True when every block is a singleton.
    pub fn is_total(&self) -> bool {
        self.blocks.len() == self.n()
    }

    /// The lexicographic-least total ordering extending `self`: blocks in
    /// order, natural order inside each block.
    pub fn natural_extension(&self) -> TotalOrdering {
        TotalOrdering {
            order: self.blocks.iter().flatten().copied().collect(),
            pos: {
                let mut pos = vec![0; self.n()];
                for (i, &x) in self.blocks.iter().flatten().enumerate() {
                    pos[x - 1] = i;
                }
                pos
            },
        }
    }

    /// The image of `self` under σ: `σ(x) ≾' σ(y) ⇔ x ≾ y`.
    pub fn relabel(&self, sigma: &Permutation) -> Result<WeakOrdering> {
        if sigma.n() != self.n() {
            return Err(Error::SizeMismatch { left: self.n(), right: sigma.n() });
        }
        Self::new(self.blocks.iter().map(|b| b.iter().map(|&x| sigma.apply(x)).collect()).collect())
    }
}

impl From<&TotalOrdering> for WeakOrdering {
    fn from(l: &TotalOrdering) -> Self {
        WeakOrdering::new(l.order.iter().map(|&x| vec![x]).collect()).expect("total ordering is valid")
    }
}

/// Formats as `3 4 | 2 | 1 5 6` (least block first).
impl fmt::Display for WeakOrdering {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, block) in self.blocks.iter().enumerate() {
            if i > 0 {
                write!(f, " | ")?;
            }
            for (j, x) in block.iter().enumerate() {
                if j > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{x}")?;
            }
        }
        Ok(())
    }
}

impl FromStr for WeakOrdering {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        WeakOrdering::new(parse_blocks(s)?)
    }
}

/// Parses `"1 2 3 | 4 5 | 6"` into blocks, keeping the order written.
pub fn parse_blocks(s: &str) -> Result<Vec<Vec<usize>>> {
    s.split('|')
        .map(|part| {
            part.split_whitespace()
                .map(|tok| tok.parse::<usize>().map_err(|_| Error::InvalidWeakOrdering(format!("bad element {tok:?}"))))
                .collect()
        })
        .collect()
}

/// A total ordering on `X_n`, stored as the list of elements from least to greatest.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TotalOrdering {
    order: Vec<usize>,
    /// `pos[x - 1]` is the 0-based position of `x` in `order`.
    pos: Vec<usize>,
}

impl TotalOrdering {
    pub fn new(order: Vec<usize>) -> Result<Self> {
        let n = order.len();
        if n == 0 {
            return Err(Error::EmptyCarrier);
        }
        let mut pos = vec![usize::MAX; n];
        for (i, &x) in order.iter().enumerate() {
            if x == 0 || x > n {
                return Err(Error::InvalidTotalOrdering(format!("element {x} outside 1..={n}")));
            }
            if pos[x - 1] != usize::MAX {
                return Err(Error::InvalidTotalOrdering(format!("element {x} listed twice")));
            }
            pos[x - 1] = i;
        }
        Ok(Self { order, pos })
    }

    /// The usual ordering `≤_n`.
    pub fn natural(n: usize) -> Result<Self> {
        Self::new((1..=n).collect())
    }

    pub fn n(&self) -> usize {
        self.order.len()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.order
    }

    /// 0-based position of `x`. Panics if `x` is outside `1..=n`.
    pub fn position(&self, x: usize) -> usize {
        self.pos[x - 1]
    }

    pub fn compare(&self, x: usize, y: usize) -> Result<Ordering> {
        for e in [x, y] {
            if e == 0 || e > self.n() {
                return Err(Error::OutOfRange { element: e, n: self.n() });
            }
        }
        Ok(self.pos[x - 1].cmp(&self.pos[y - 1]))
    }

    pub fn less_eq(&self, x: usize, y: usize) -> bool {
        self.pos[x - 1] <= self.pos[y - 1]
    }

    /// The larger of `x` and `y`.
    pub fn max(&self, x: usize, y: usize) -> usize {
        if self.less_eq(x, y) {
            y
        } else {
            x
        }
    }

    /// Whether `x ≺ y` implies `x < y` for all `x, y`.
    pub fn extends(&self, w: &WeakOrdering) -> bool {
        self.n() == w.n() && self.order.windows(2).all(|p| w.block_of(p[0]) <= w.block_of(p[1]))
    }

    /// The permutation σ transporting this ordering onto `≤_n`:
    /// `σ(x) ≤_n σ(y) ⇔ x ≤ y`.
    pub fn transport(&self) -> Permutation {
        Permutation::new(self.pos.iter().map(|p| p + 1).collect()).expect("positions form a permutation")
    }
}

/// Formats as `7 < 6 < 4 < 1`.
impl fmt::Display for TotalOrdering {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, x) in self.order.iter().enumerate() {
            if i > 0 {
                write!(f, " < ")?;
            }
            write!(f, "{x}")?;
        }
        Ok(())
    }
}
