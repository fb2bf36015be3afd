//! Conjugation action of `S_n` on operations, orbits, stabilizers and the
//! canonical ordinal sum on `≤_n` inside each orbit.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::One;

use crate::classify::member_details;
use crate::error::{Error, Result};
use crate::perm::Permutation;
use crate::signature::Signature;
use crate::table::OpTable;

/// Largest `n` for which [`orbit`] and [`stabilizer`] walk all of `S_n`.
pub const MAX_ORBIT_N: usize = 8;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrbitSummary {
    pub representative: OpTable,
    pub orbit_size: BigUint,
    pub stabilizer_size: BigUint,
    pub signature: Signature,
}

/// `F_σ(x, y) = σ(F(σ⁻¹(x), σ⁻¹(y)))`.
pub fn conjugate(f: &OpTable, sigma: &Permutation) -> Result<OpTable> {
    if f.n() != sigma.n() {
        return Err(Error::SizeMismatch { left: f.n(), right: sigma.n() });
    }
    let inv = sigma.inverse();
    OpTable::from_fn(f.n(), |x, y| sigma.apply(f.get(inv.apply(x), inv.apply(y))))
}

fn orbit_guard(n: usize) -> Result<()> {
    if n > MAX_ORBIT_N {
        return Err(Error::GuardExceeded { guard: "orbit", n, max: MAX_ORBIT_N });
    }
    Ok(())
}

/// All distinct conjugates of `F`, by walking `S_n`.
pub fn orbit(f: &OpTable) -> Result<BTreeSet<OpTable>> {
    orbit_guard(f.n())?;
    Permutation::all(f.n())?.map(|s| conjugate(f, &s)).collect()
}

/// All σ with `F_σ = F`, by walking `S_n`.
pub fn stabilizer(f: &OpTable) -> Result<Vec<Permutation>> {
    orbit_guard(f.n())?;
    let mut out = Vec::new();
    for s in Permutation::all(f.n())? {
        if conjugate(f, &s)? == *f {
            out.push(s);
        }
    }
    Ok(out)
}

fn factorial(n: usize) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, i| acc * BigUint::from(i))
}

/// `(∏ n_i!, n! / ∏ n_i!)`: stabilizer and orbit sizes of any member with
/// this signature.
pub fn orbit_stab_sizes(s: &Signature) -> (BigUint, BigUint) {
    let stab = s.parts().iter().fold(BigUint::one(), |acc, &p| acc * factorial(p));
    let orbit = factorial(s.n()) / &stab;
    (stab, orbit)
}

/// The ordinal sum of projections on `≤_n` in the orbit of `F`, with the
/// lexicographically least σ such that `F_σ` is that form.
///
/// σ sends the `i`-th block of `≾_F` onto the `i`-th interval of `≤_n`,
/// increasingly inside each block. Every other such σ differs from it by a
/// block-preserving permutation and yields the same form.
pub fn canonicalize(f: &OpTable) -> Result<(Permutation, OpTable)> {
    let details = member_details(f)?;
    let sigma = details.weak_ordering.natural_extension().transport();
    let form = conjugate(f, &sigma)?;
    Ok((sigma, form))
}

pub fn canonical_form(f: &OpTable) -> Result<OpTable> {
    canonicalize(f).map(|(_, form)| form)
}

/// Orbit data derived from the signature and canonical form, without
/// walking `S_n`.
pub fn orbit_summary(f: &OpTable) -> Result<OrbitSummary> {
    let details = member_details(f)?;
    let (stabilizer_size, orbit_size) = orbit_stab_sizes(&details.signature);
    Ok(OrbitSummary { representative: canonical_form(f)?, orbit_size, stabilizer_size, signature: details.signature })
}

/// The four equivalence relations on `F_n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Relation {
    /// `q`: identical tables.
    Equal,
    /// `p`: same weak ordering `≾_F = ≾_G`.
    SameOrdering,
    /// `r`: same orbit under conjugation.
    Conjugate,
    /// `s`: isomorphic weak orderings, i.e. equal signatures.
    Isomorphic,
}

impl FromStr for Relation {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "q" => Ok(Relation::Equal),
            "p" => Ok(Relation::SameOrdering),
            "r" => Ok(Relation::Conjugate),
            "s" => Ok(Relation::Isomorphic),
            other => Err(format!("unknown relation {other:?}, expected one of q, p, r, s")),
        }
    }
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Relation::Equal => "q",
            Relation::SameOrdering => "p",
            Relation::Conjugate => "r",
            Relation::Isomorphic => "s",
        })
    }
}

pub fn related(f: &OpTable, g: &OpTable, rel: Relation) -> Result<bool> {
    if f.n() != g.n() {
        return Err(Error::SizeMismatch { left: f.n(), right: g.n() });
    }
    let (df, dg) = (member_details(f)?, member_details(g)?);
    Ok(match rel {
        Relation::Equal => f == g,
        Relation::SameOrdering => df.weak_ordering == dg.weak_ordering,
        Relation::Conjugate => canonical_form(f)? == canonical_form(g)?,
        Relation::Isomorphic => df.signature == dg.signature,
    })
}
