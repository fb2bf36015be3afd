use std::fmt;

use crate::error::{Error, Result};

/// A permutation of `X_n` in one-line notation: `images[x - 1] = σ(x)`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        if n == 0 {
            return Err(Error::EmptyCarrier);
        }
        let mut seen = vec![false; n];
        for &y in &images {
            if y == 0 || y > n {
                return Err(Error::InvalidPermutation(format!("image {y} outside 1..={n}")));
            }
            if std::mem::replace(&mut seen[y - 1], true) {
                return Err(Error::InvalidPermutation(format!("image {y} repeated")));
            }
        }
        Ok(Self { images })
    }

    pub fn identity(n: usize) -> Result<Self> {
        Self::new((1..=n).collect())
    }

    pub fn n(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    /// σ(x). Panics if `x` is outside `1..=n`.
    pub fn apply(&self, x: usize) -> usize {
        self.images[x - 1]
    }

    pub fn try_apply(&self, x: usize) -> Result<usize> {
        if x == 0 || x > self.n() {
            return Err(Error::OutOfRange { element: x, n: self.n() });
        }
        Ok(self.apply(x))
    }

    /// The composite `self ∘ other`, i.e. `x ↦ self(other(x))`.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation> {
        if self.n() != other.n() {
            return Err(Error::SizeMismatch { left: self.n(), right: other.n() });
        }
        Ok(Permutation { images: other.images.iter().map(|&x| self.apply(x)).collect() })
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.n()];
        for (i, &y) in self.images.iter().enumerate() {
            inv[y - 1] = i + 1;
        }
        Permutation { images: inv }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &y)| y == i + 1)
    }

    /// All `n!` permutations of `X_n` in lexicographic order of one-line notation.
    pub fn all(n: usize) -> Result<AllPermutations> {
        if n == 0 {
            return Err(Error::EmptyCarrier);
        }
        Ok(AllPermutations { next: Some((1..=n).collect()) })
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, y) in self.images.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{y}")?;
        }
        write!(f, ")")
    }
}

/// Lexicographic iterator over the symmetric group, see [`Permutation::all`].
#[derive(Debug, Clone)]
pub struct AllPermutations {
    next: Option<Vec<usize>>,
}

impl Iterator for AllPermutations {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        let current = self.next.take()?;
        let mut succ = current.clone();
        if next_permutation(&mut succ) {
            self.next = Some(succ);
        }
        Some(Permutation { images: current })
    }
}

/// Rearranges `v` into its lexicographic successor; returns false at the last arrangement.
pub(crate) fn next_permutation<T: Ord>(v: &mut [T]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}
