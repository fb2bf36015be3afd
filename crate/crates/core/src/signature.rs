use std::fmt;

use crate::error::{Error, Result};

/// Block sizes `(n_1, …, n_k)` of a weak ordering, least block first.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Signature {
    parts: Vec<usize>,
}

impl Signature {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.is_empty() {
            return Err(Error::InvalidSignature("no parts".into()));
        }
        if parts.contains(&0) {
            return Err(Error::InvalidSignature("zero part".into()));
        }
        Ok(Self { parts })
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn n(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// All `2^(n-1)` compositions of `n`, in lexicographic order of parts.
    pub fn compositions(n: usize) -> Result<Vec<Signature>> {
        if n == 0 {
            return Err(Error::EmptyCarrier);
        }
        let mut out = Vec::with_capacity(1 << (n - 1).min(30));
        let mut stack = Vec::new();
        fn go(rest: usize, stack: &mut Vec<usize>, out: &mut Vec<Signature>) {
            if rest == 0 {
                out.push(Signature { parts: stack.clone() });
                return;
            }
            for part in 1..=rest {
                stack.push(part);
                go(rest - part, stack, out);
                stack.pop();
            }
        }
        go(n, &mut stack, &mut out);
        Ok(out)
    }
}

fn write_tuple(f: &mut fmt::Formatter<'_>, xs: &[usize]) -> fmt::Result {
    write!(f, "(")?;
    for (i, x) in xs.iter().enumerate() {
        if i > 0 {
            write!(f, ",")?;
        }
        write!(f, "{x}")?;
    }
    write!(f, ")")
}

impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_tuple(f, &self.parts)
    }
}

/// A nondecreasing sequence of preimage sizes `(c_1, …, c_n)`.
///
/// Sequences read off a table always sum to `n²`; the constructor only
/// enforces monotonicity so that arbitrary candidate sequences can be tested
/// for realizability.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PreimageSequence {
    counts: Vec<usize>,
}

impl PreimageSequence {
    pub fn new(counts: Vec<usize>) -> Result<Self> {
        if counts.is_empty() {
            return Err(Error::EmptyCarrier);
        }
        if counts.windows(2).any(|w| w[0] > w[1]) {
            return Err(Error::InvalidPreimage(format!("{counts:?} is not nondecreasing")));
        }
        Ok(Self { counts })
    }

    /// Sorts arbitrary counts into a preimage sequence.
    pub fn from_unsorted(mut counts: Vec<usize>) -> Result<Self> {
        counts.sort_unstable();
        Self::new(counts)
    }

    pub fn counts(&self) -> &[usize] {
        &self.counts
    }

    pub fn n(&self) -> usize {
        self.counts.len()
    }

    /// Multiplicities of the distinct values, in increasing value order.
    pub fn frequencies(&self) -> Vec<usize> {
        let mut out: Vec<usize> = Vec::new();
        let mut prev = None;
        for &c in &self.counts {
            if prev == Some(c) {
                *out.last_mut().unwrap() += 1;
            } else {
                out.push(1);
                prev = Some(c);
            }
        }
        out
    }
}

impl fmt::Display for PreimageSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_tuple(f, &self.counts)
    }
}
