//! Commutative, anticommutative and bisymmetric members of `F_n`.

use crate::classify::member_details;
use crate::error::Result;
use crate::ordering::TotalOrdering;
use crate::table::OpTable;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubclassReport {
    pub commutative: bool,
    pub anticommutative: bool,
    pub bisymmetric: bool,
    /// The total ordering `⪯` with `F = max_⪯`, when commutative.
    pub commutative_witness: Option<TotalOrdering>,
    /// Size `ℓ` of the least block when the signature is `(ℓ, 1, …, 1)`.
    pub bisymmetric_ell: Option<usize>,
}

pub fn is_commutative(f: &OpTable) -> bool {
    let n = f.n();
    (1..=n).all(|x| (x + 1..=n).all(|y| f.get(x, y) == f.get(y, x)))
}

/// `F(x,y) = F(y,x)` only when `x = y`.
pub fn is_anticommutative(f: &OpTable) -> bool {
    let n = f.n();
    (1..=n).all(|x| (x + 1..=n).all(|y| f.get(x, y) != f.get(y, x)))
}

/// `F(F(x,y),F(u,v)) = F(F(x,u),F(y,v))` over all quadruples.
pub fn is_bisymmetric(f: &OpTable) -> bool {
    let n = f.n();
    for x in 1..=n {
        for y in 1..=n {
            let xy = f.get(x, y);
            for u in 1..=n {
                let xu = f.get(x, u);
                for v in 1..=n {
                    if f.get(xy, f.get(u, v)) != f.get(xu, f.get(y, v)) {
                        return false;
                    }
                }
            }
        }
    }
    true
}

pub fn is_idempotent(f: &OpTable) -> bool {
    (1..=f.n()).all(|x| f.get(x, x) == x)
}

/// An element `e` with `F(e,x) = F(x,e) = x` for all `x`.
pub fn neutral_element(f: &OpTable) -> Option<usize> {
    let n = f.n();
    (1..=n).find(|&e| (1..=n).all(|x| f.get(e, x) == x && f.get(x, e) == x))
}

/// Reads the three properties off the signature of a member:
/// commutative iff all blocks are singletons, anticommutative iff there is a
/// single block, bisymmetric iff every block above the least is a singleton.
pub fn characterize(f: &OpTable) -> Result<SubclassReport> {
    let details = member_details(f)?;
    let parts = details.signature.parts();
    let commutative = parts.iter().all(|&p| p == 1);
    let anticommutative = parts.len() == 1;
    let bisymmetric = parts[1..].iter().all(|&p| p == 1);
    let report = SubclassReport {
        commutative,
        anticommutative,
        bisymmetric,
        commutative_witness: commutative.then(|| details.weak_ordering.natural_extension()),
        bisymmetric_ell: bisymmetric.then(|| parts[0]),
    };
    if cfg!(debug_assertions) && f.n() <= 6 {
        debug_assert_eq!(report.commutative, is_commutative(f));
        debug_assert_eq!(report.anticommutative, is_anticommutative(f));
        debug_assert_eq!(report.bisymmetric, is_bisymmetric(f));
    }
    Ok(report)
}
