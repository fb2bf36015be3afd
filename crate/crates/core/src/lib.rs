//! Associative quasitrivial operations on finite chains `X_n = {1, …, n}`:
//! membership, canonical forms under relabeling, order preservation,
//! subclasses, exhaustive enumeration and exact counting sequences.
//!
//! Elements are 1-based throughout. A member `F` of `F_n` (the associative
//! quasitrivial operations on `X_n`) is stored as an [`OpTable`]; its weak
//! ordering `≾_F` is a [`WeakOrdering`] listed from the least block up.

pub mod classify;
pub mod enumerate;
mod error;
pub mod fixtures;
pub mod group;
pub mod ordering;
pub mod orders;
mod perm;
pub mod sequences;
pub mod series;
mod signature;
pub mod subclass;
mod table;

pub use classify::{classify, is_associative, is_member, is_quasitrivial, ClassReport, MemberDetails};
pub use enumerate::{Census, Guards};
pub use error::{Error, Result};
pub use group::Relation;
pub use ordering::{TotalOrdering, WeakOrdering};
pub use orders::OrderabilityReport;
pub use perm::{AllPermutations, Permutation};
pub use signature::{PreimageSequence, Signature};
pub use subclass::SubclassReport;
pub use table::{OpTable, Projection};
