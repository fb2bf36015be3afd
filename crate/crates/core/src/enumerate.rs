//! Exhaustive generation of weak orderings, of all members of `F_n`, of all
//! quasitrivial tables (the brute-force reference), and full censuses.
//!
//! All streams are deterministic. Weak orderings come grouped by number of
//! blocks; inside a group, set partitions follow restricted-growth-string
//! order and block arrangements follow lexicographic permutation order.
//! Members expand each weak ordering with one projection bit per block of
//! size at least two, counting in binary (`0 = π_1`).

use std::collections::{BTreeMap, HashMap, HashSet};

use num_bigint::BigUint;

use crate::classify::member_details;
use crate::error::{Error, Result};
use crate::group::canonical_form;
use crate::ordering::WeakOrdering;
use crate::orders::{is_2_quasilinear, is_quasilinear, order_preservability};
use crate::perm::next_permutation;
use crate::signature::Signature;
use crate::subclass::characterize;
use crate::table::{OpTable, Projection};

/// Upper bounds on `n` for the exhaustive streams.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Guards {
    pub weak_orderings: usize,
    pub members: usize,
    pub quasitrivial: usize,
}

impl Default for Guards {
    fn default() -> Self {
        Guards { weak_orderings: 9, members: 8, quasitrivial: 4 }
    }
}

impl Guards {
    /// The same bound for every stream.
    pub fn uniform(max_n: usize) -> Self {
        Guards { weak_orderings: max_n, members: max_n, quasitrivial: max_n }
    }

    fn check(n: usize, max: usize, guard: &'static str) -> Result<()> {
        if n == 0 {
            return Err(Error::EmptyCarrier);
        }
        if n > max {
            return Err(Error::GuardExceeded { guard, n, max });
        }
        Ok(())
    }

    pub fn weak_orderings(&self, n: usize) -> Result<WeakOrderings> {
        Self::check(n, self.weak_orderings, "weak-orderings")?;
        Ok(WeakOrderings::new(n))
    }

    pub fn members(&self, n: usize) -> Result<impl Iterator<Item = OpTable>> {
        Self::check(n, self.members, "members")?;
        Ok(WeakOrderings::new(n).flat_map(|w| members_of(&w)))
    }

    pub fn quasitrivial_tables(&self, n: usize) -> Result<impl Iterator<Item = OpTable>> {
        Self::check(n, self.quasitrivial, "quasitrivial-tables")?;
        let cells: Vec<(usize, usize)> =
            (1..=n).flat_map(|x| (1..=n).map(move |y| (x, y))).filter(|(x, y)| x != y).collect();
        let total = 1u64 << cells.len();
        Ok((0..total).map(move |mask| {
            let mut entries: Vec<usize> = (0..n * n).map(|i| i / n + 1).collect();
            for (bit, &(x, y)) in cells.iter().enumerate() {
                if mask >> bit & 1 == 1 {
                    entries[(x - 1) * n + (y - 1)] = y;
                }
            }
            OpTable::new(n, entries).expect("quasitrivial tables are valid")
        }))
    }

    pub fn census(&self, n: usize) -> Result<Census> {
        Self::check(n, self.members.min(self.weak_orderings), "members")?;
        census_unchecked(n)
    }
}

pub fn weak_orderings(n: usize) -> Result<WeakOrderings> {
    Guards::default().weak_orderings(n)
}

pub fn members(n: usize) -> Result<impl Iterator<Item = OpTable>> {
    Guards::default().members(n)
}

pub fn quasitrivial_tables(n: usize) -> Result<impl Iterator<Item = OpTable>> {
    Guards::default().quasitrivial_tables(n)
}

pub fn census(n: usize) -> Result<Census> {
    Guards::default().census(n)
}

/// Every member whose weak ordering is `w`.
pub fn members_of(w: &WeakOrdering) -> impl Iterator<Item = OpTable> {
    let w = w.clone();
    let big: Vec<usize> = (0..w.len()).filter(|&i| w.blocks()[i].len() >= 2).collect();
    (0u64..1 << big.len()).map(move |mask| {
        let mut projections = vec![Projection::First; w.len()];
        for (bit, &b) in big.iter().enumerate() {
            if mask >> bit & 1 == 1 {
                projections[b] = Projection::Second;
            }
        }
        OpTable::ordinal_sum(&w, &projections).expect("one projection per block")
    })
}

/// Lazy stream of all ordered set partitions of `X_n`.
#[derive(Debug, Clone)]
pub struct WeakOrderings {
    n: usize,
    blocks: usize,
    rgs: Vec<usize>,
    arrangement: Vec<usize>,
    done: bool,
}

impl WeakOrderings {
    fn new(n: usize) -> Self {
        WeakOrderings { n, blocks: 1, rgs: first_rgs(n, 1), arrangement: vec![0], done: false }
    }

    fn current(&self) -> WeakOrdering {
        let mut by_label = vec![Vec::new(); self.blocks];
        for (i, &label) in self.rgs.iter().enumerate() {
            by_label[label].push(i + 1);
        }
        WeakOrdering::new(self.arrangement.iter().map(|&l| std::mem::take(&mut by_label[l])).collect())
            .expect("ordered set partition")
    }

    fn advance(&mut self) {
        if next_permutation(&mut self.arrangement) {
            return;
        }
        self.arrangement = (0..self.blocks).collect();
        while next_rgs(&mut self.rgs) {
            if self.rgs.iter().max() == Some(&(self.blocks - 1)) {
                return;
            }
        }
        self.blocks += 1;
        if self.blocks > self.n {
            self.done = true;
            return;
        }
        self.rgs = first_rgs(self.n, self.blocks);
        self.arrangement = (0..self.blocks).collect();
    }
}

impl Iterator for WeakOrderings {
    type Item = WeakOrdering;

    fn next(&mut self) -> Option<WeakOrdering> {
        if self.done {
            return None;
        }
        let w = self.current();
        self.advance();
        Some(w)
    }
}

/// The least restricted growth string of length `n` using `k` labels.
fn first_rgs(n: usize, k: usize) -> Vec<usize> {
    let mut v = vec![0; n - k + 1];
    v.extend(1..k);
    v
}

fn next_rgs(a: &mut [usize]) -> bool {
    let mut prefix_max = vec![0; a.len()];
    for i in 1..a.len() {
        prefix_max[i] = prefix_max[i - 1].max(a[i - 1]);
    }
    for i in (1..a.len()).rev() {
        if a[i] <= prefix_max[i] {
            a[i] += 1;
            a[i + 1..].iter_mut().for_each(|v| *v = 0);
            return true;
        }
    }
    false
}

/// Exact class counts for one `n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Census {
    pub n: usize,
    /// Weak orderings.
    pub p: BigUint,
    /// Members of `F_n`.
    pub q: BigUint,
    /// Orbits under conjugation.
    pub r: BigUint,
    /// Signatures.
    pub s: BigUint,
    pub p_op: BigUint,
    pub q_op: BigUint,
    pub r_op: BigUint,
    pub s_op: BigUint,
    /// Quasilinear weak orderings.
    pub p_b: BigUint,
    pub q_b: BigUint,
    pub r_b: BigUint,
    pub s_b: BigUint,
    pub commutative: BigUint,
    pub anticommutative: BigUint,
    pub orbits_by_signature: BTreeMap<Signature, BigUint>,
}

#[derive(Default)]
struct Tally {
    members: u64,
    forms: HashSet<OpTable>,
    signatures: HashSet<Signature>,
}

impl Tally {
    fn add(&mut self, form: &OpTable, signature: &Signature) {
        self.members += 1;
        if !self.forms.contains(form) {
            self.forms.insert(form.clone());
        }
        if !self.signatures.contains(signature) {
            self.signatures.insert(signature.clone());
        }
    }
}

fn census_unchecked(n: usize) -> Result<Census> {
    let (mut p, mut p_op, mut p_b) = (0u64, 0u64, 0u64);
    for w in WeakOrderings::new(n) {
        p += 1;
        p_op += is_2_quasilinear(&w) as u64;
        p_b += is_quasilinear(&w) as u64;
    }

    let (mut all, mut op, mut bi) = (Tally::default(), Tally::default(), Tally::default());
    let (mut commutative, mut anticommutative) = (0u64, 0u64);
    let mut form_signature: HashMap<OpTable, Signature> = HashMap::new();
    for f in WeakOrderings::new(n).flat_map(|w| members_of(&w)) {
        let signature = member_details(&f)?.signature;
        let form = canonical_form(&f)?;
        let sub = characterize(&f)?;
        all.add(&form, &signature);
        if order_preservability(&f)?.is_preservable() {
            op.add(&form, &signature);
        }
        if sub.bisymmetric {
            bi.add(&form, &signature);
        }
        commutative += sub.commutative as u64;
        anticommutative += sub.anticommutative as u64;
        form_signature.entry(form).or_insert(signature);
    }
    let mut orbits_by_signature: BTreeMap<Signature, BigUint> = BTreeMap::new();
    for signature in form_signature.into_values() {
        *orbits_by_signature.entry(signature).or_default() += 1u32;
    }

    let big = |v: u64| BigUint::from(v);
    let size = |v: usize| BigUint::from(v);
    Ok(Census {
        n,
        p: big(p),
        q: big(all.members),
        r: size(all.forms.len()),
        s: size(all.signatures.len()),
        p_op: big(p_op),
        q_op: big(op.members),
        r_op: size(op.forms.len()),
        s_op: size(op.signatures.len()),
        p_b: big(p_b),
        q_b: big(bi.members),
        r_b: size(bi.forms.len()),
        s_b: size(bi.signatures.len()),
        commutative: big(commutative),
        anticommutative: big(anticommutative),
        orbits_by_signature,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classify::{is_associative, is_member};
    use std::collections::BTreeSet;

    #[test]
    fn weak_ordering_counts() {
        assert_eq!(weak_orderings(1).unwrap().count(), 1);
        assert_eq!(weak_orderings(3).unwrap().count(), 13);
        assert_eq!(weak_orderings(6).unwrap().count(), 4683);
    }

    #[test]
    fn weak_orderings_are_distinct_and_ordered_by_block_count() {
        let all: Vec<_> = weak_orderings(5).unwrap().collect();
        let set: BTreeSet<_> = all.iter().cloned().collect();
        assert_eq!(set.len(), all.len());
        assert!(all.windows(2).all(|w| w[0].len() <= w[1].len()));
        assert_eq!(all[0], WeakOrdering::single_block(5).unwrap());
    }

    #[test]
    fn member_counts() {
        assert_eq!(members(2).unwrap().count(), 4);
        assert_eq!(members(3).unwrap().count(), 20);
        assert_eq!(members(6).unwrap().count(), 12166);
    }

    #[test]
    fn members_are_distinct_members() {
        let all: Vec<_> = members(5).unwrap().collect();
        let set: HashSet<_> = all.iter().collect();
        assert_eq!(set.len(), all.len());
        assert!(all.iter().all(is_member));
    }

    #[test]
    fn quasitrivial_table_counts() {
        assert_eq!(quasitrivial_tables(2).unwrap().count(), 4);
        assert_eq!(quasitrivial_tables(3).unwrap().count(), 64);
        assert_eq!(quasitrivial_tables(3).unwrap().filter(is_associative).count(), 20);
        assert_eq!(
            quasitrivial_tables(5).err(),
            Some(Error::GuardExceeded { guard: "quasitrivial-tables", n: 5, max: 4 })
        );
    }

    #[test]
    fn guards() {
        assert!(weak_orderings(10).is_err());
        assert!(members(9).is_err());
        assert!(weak_orderings(0).is_err());
        assert_eq!(
            Guards::uniform(2).census(3).err().map(|e| e.to_string()).unwrap(),
            "n = 3 exceeds the members guard (max 2)"
        );
    }

    #[test]
    fn census_four() {
        let c = census(4).unwrap();
        let u = |v: u32| BigUint::from(v);
        assert_eq!((c.p.clone(), c.q.clone(), c.r.clone(), c.s.clone()), (u(75), u(138), u(17), u(8)));
        assert_eq!((c.p_op, c.q_op, c.r_op, c.s_op), (u(71), u(130), u(15), u(7)));
    }

    #[test]
    fn quasilinear_weak_orderings() {
        // least block of size l, then the other n - l elements in any order
        for n in 1..=6usize {
            let fact = |k: usize| (1..=k).product::<usize>();
            let expected: usize = (1..=n).map(|l| fact(n) / fact(l)).sum();
            assert_eq!(census(n).unwrap().p_b, BigUint::from(expected), "n = {n}");
        }
    }

    #[test]
    fn census_three_all_preservable() {
        let c = census(3).unwrap();
        assert_eq!(c.q_op, BigUint::from(20u32));
        assert_eq!(c.p_op, BigUint::from(13u32));
        assert_eq!(c.r_op, BigUint::from(7u32));
        assert_eq!(c.s_op, BigUint::from(4u32));
    }
}
