use std::fmt;

use crate::error::{Error, Result};
use crate::ordering::{TotalOrdering, WeakOrdering};
use crate::signature::PreimageSequence;

/// The two projections `π_1(x, y) = x` and `π_2(x, y) = y`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Projection {
    First,
    Second,
}

impl Projection {
    pub fn apply(self, x: usize, y: usize) -> usize {
        match self {
            Projection::First => x,
            Projection::Second => y,
        }
    }
}

/// Cayley table of a binary operation `F: X_n² → X_n`.
///
/// Elements are named `1..=n`; `get(x, y)` is `F(x, y)`, i.e. row `x`,
/// column `y`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct OpTable {
    n: usize,
    cells: Vec<u32>,
}

impl OpTable {
    /// Row-major entries, `entries[(x-1)*n + (y-1)] = F(x, y)`.
    pub fn new(n: usize, entries: Vec<usize>) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptyCarrier);
        }
        if n > u32::MAX as usize || entries.len() != n * n {
            return Err(Error::InvalidTable(format!("expected {} cells, got {}", n * n, entries.len())));
        }
        let mut cells = Vec::with_capacity(n * n);
        for (i, &v) in entries.iter().enumerate() {
            if v == 0 || v > n {
                return Err(Error::InvalidTable(format!("F({}, {}) = {v} is outside 1..={n}", i / n + 1, i % n + 1)));
            }
            cells.push(v as u32);
        }
        Ok(Self { n, cells })
    }

    pub fn from_rows(rows: Vec<Vec<usize>>) -> Result<Self> {
        let n = rows.len();
        if let Some((i, r)) = rows.iter().enumerate().find(|(_, r)| r.len() != n) {
            return Err(Error::InvalidTable(format!("row {} has {} entries, expected {n}", i + 1, r.len())));
        }
        Self::new(n, rows.into_iter().flatten().collect())
    }

    pub fn from_fn(n: usize, f: impl Fn(usize, usize) -> usize) -> Result<Self> {
        let mut entries = Vec::with_capacity(n * n);
        for x in 1..=n {
            for y in 1..=n {
                entries.push(f(x, y));
            }
        }
        Self::new(n, entries)
    }

    pub fn projection(n: usize, p: Projection) -> Result<Self> {
        Self::from_fn(n, |x, y| p.apply(x, y))
    }

    /// `max_≤` for a total ordering `≤`.
    pub fn max_of(order: &TotalOrdering) -> Self {
        Self::from_fn(order.n(), |x, y| order.max(x, y)).expect("max is closed")
    }

    /// The member of `F_n` attached to a weak ordering and a projection per
    /// block: `π_i` inside each block and `max` across blocks. Entries of
    /// `projections` for singleton blocks are irrelevant.
    pub fn ordinal_sum(w: &WeakOrdering, projections: &[Projection]) -> Result<Self> {
        if projections.len() != w.len() {
            return Err(Error::SizeMismatch { left: w.len(), right: projections.len() });
        }
        Self::from_fn(w.n(), |x, y| {
            let (bx, by) = (w.block_of(x), w.block_of(y));
            match bx.cmp(&by) {
                std::cmp::Ordering::Equal => projections[bx].apply(x, y),
                std::cmp::Ordering::Less => y,
                std::cmp::Ordering::Greater => x,
            }
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// `F(x, y)`. Panics if either argument is outside `1..=n`.
    #[inline]
    pub fn get(&self, x: usize, y: usize) -> usize {
        assert!(x >= 1 && x <= self.n && y >= 1 && y <= self.n, "({x}, {y}) outside X_{}", self.n);
        self.cells[(x - 1) * self.n + (y - 1)] as usize
    }

    pub fn row(&self, x: usize) -> impl Iterator<Item = usize> + '_ {
        self.cells[(x - 1) * self.n..x * self.n].iter().map(|&v| v as usize)
    }

    /// `|F⁻¹[z]|` for each `z`, indexed by `z - 1`.
    pub fn preimage_counts(&self) -> Vec<usize> {
        let mut counts = vec![0; self.n];
        for &v in &self.cells {
            counts[v as usize - 1] += 1;
        }
        counts
    }

    pub fn preimage_sequence(&self) -> PreimageSequence {
        PreimageSequence::from_unsorted(self.preimage_counts()).expect("n >= 1")
    }
}

impl fmt::Display for OpTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for x in 1..=self.n {
            for (j, v) in self.row(x).enumerate() {
                if j > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{v}")?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}
