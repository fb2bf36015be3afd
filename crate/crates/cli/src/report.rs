//! Reports for `classify` and `count`, in text and JSON.

use std::fmt::Write;

use num_bigint::BigUint;
use quasitrivial::classify::{is_realizable_preimage, member_details};
use quasitrivial::enumerate::Census;
use quasitrivial::group::{canonicalize, orbit_stab_sizes};
use quasitrivial::orders::{order_preservability, OrderabilityReport};
use quasitrivial::sequences::SequenceName;
use quasitrivial::subclass::characterize;
use quasitrivial::{classify, OpTable};
use serde::Serialize;

#[derive(Debug, Clone, Serialize)]
pub struct ClassifyReport {
    pub n: usize,
    pub quasitrivial: bool,
    pub associative: bool,
    pub member: bool,
    pub preimage_sequence: Vec<usize>,
    pub realizable_preimage: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub member_info: Option<MemberInfo>,
}

#[derive(Debug, Clone, Serialize)]
pub struct MemberInfo {
    pub blocks: Vec<Vec<usize>>,
    pub signature: Vec<usize>,
    pub canonical_form: Vec<Vec<usize>>,
    pub conjugating_permutation: Vec<usize>,
    pub orbit_size: String,
    pub stabilizer_size: String,
    pub order_preservable: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub preserving_order: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub non_preservable_witness: Option<[usize; 4]>,
    pub commutative: bool,
    pub anticommutative: bool,
    pub bisymmetric: bool,
}

impl ClassifyReport {
    pub fn build(f: &OpTable) -> Self {
        let class = classify(f);
        let c = f.preimage_sequence();
        let member_info = class.is_member().then(|| member_info(f));
        ClassifyReport {
            n: f.n(),
            quasitrivial: class.quasitrivial,
            associative: class.associative,
            member: class.is_member(),
            preimage_sequence: c.counts().to_vec(),
            realizable_preimage: is_realizable_preimage(&c),
            member_info,
        }
    }

    pub fn to_text(&self) -> String {
        let yes = |b: bool| if b { "yes" } else { "no" };
        let mut out = String::new();
        let _ = writeln!(out, "n: {}", self.n);
        let _ = writeln!(out, "quasitrivial: {}", yes(self.quasitrivial));
        let _ = writeln!(out, "associative: {}", yes(self.associative));
        let _ = writeln!(out, "member: {}", yes(self.member));
        let _ = writeln!(out, "preimage sequence: {}", tuple(&self.preimage_sequence));
        let _ = writeln!(out, "realizable preimage sequence: {}", yes(self.realizable_preimage));
        if let Some(m) = &self.member_info {
            let blocks: Vec<String> = m.blocks.iter().map(|b| join(b, " ")).collect();
            let _ = writeln!(out, "weak ordering: {}", blocks.join(" | "));
            let _ = writeln!(out, "signature: {}", tuple(&m.signature));
            let _ = writeln!(out, "orbit size: {}", m.orbit_size);
            let _ = writeln!(out, "stabilizer size: {}", m.stabilizer_size);
            let _ = writeln!(out, "conjugating permutation: {}", tuple(&m.conjugating_permutation));
            match (&m.preserving_order, &m.non_preservable_witness) {
                (Some(order), _) => {
                    let _ = writeln!(out, "order-preservable: yes, for {}", join(order, " < "));
                }
                (None, Some([a, b, c, d])) => {
                    let _ = writeln!(out, "order-preservable: no, {a} < {b} ~ {c} ~ {d}");
                }
                _ => {}
            }
            let _ = writeln!(out, "commutative: {}", yes(m.commutative));
            let _ = writeln!(out, "anticommutative: {}", yes(m.anticommutative));
            let _ = writeln!(out, "bisymmetric: {}", yes(m.bisymmetric));
            out.push_str("canonical form:\n");
            for row in &m.canonical_form {
                let _ = writeln!(out, "  {}", join(row, " "));
            }
        }
        out
    }
}

fn member_info(f: &OpTable) -> MemberInfo {
    let details = member_details(f).expect("member");
    let (sigma, form) = canonicalize(f).expect("member");
    let (stab, orbit) = orbit_stab_sizes(&details.signature);
    let sub = characterize(f).expect("member");
    let preservability = order_preservability(f).expect("member");
    let (preserving_order, non_preservable_witness) = match &preservability {
        OrderabilityReport::Preservable(l) => (Some(l.as_slice().to_vec()), None),
        OrderabilityReport::NotPreservable { witness } => (None, Some(*witness)),
    };
    MemberInfo {
        blocks: details.weak_ordering.blocks().to_vec(),
        signature: details.signature.parts().to_vec(),
        canonical_form: (1..=form.n()).map(|x| form.row(x).collect()).collect(),
        conjugating_permutation: sigma.images().to_vec(),
        orbit_size: orbit.to_string(),
        stabilizer_size: stab.to_string(),
        order_preservable: preservability.is_preservable(),
        preserving_order,
        non_preservable_witness,
        commutative: sub.commutative,
        anticommutative: sub.anticommutative,
        bisymmetric: sub.bisymmetric,
    }
}

fn join(v: &[usize], sep: &str) -> String {
    v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(sep)
}

fn tuple(v: &[usize]) -> String {
    format!("({})", join(v, ","))
}

/// The default families printed by `count`.
pub const DEFAULT_FAMILIES: [SequenceName; 10] = [
    SequenceName::P,
    SequenceName::Q,
    SequenceName::R,
    SequenceName::S,
    SequenceName::POp,
    SequenceName::QOp,
    SequenceName::ROp,
    SequenceName::SOp,
    SequenceName::RB,
    SequenceName::SB,
];

#[derive(Debug, Clone, Serialize)]
pub struct CountRow {
    pub family: String,
    pub enumerated: String,
    pub formula: String,
    pub agree: bool,
}

/// Census value for a family, if the census counts it.
pub fn census_value(c: &Census, name: SequenceName) -> Option<&BigUint> {
    Some(match name {
        SequenceName::P => &c.p,
        SequenceName::Q => &c.q,
        SequenceName::R => &c.r,
        SequenceName::S => &c.s,
        SequenceName::POp => &c.p_op,
        SequenceName::QOp => &c.q_op,
        SequenceName::ROp => &c.r_op,
        SequenceName::SOp => &c.s_op,
        SequenceName::RB => &c.r_b,
        SequenceName::SB => &c.s_b,
        SequenceName::Fibonacci | SequenceName::G => return None,
    })
}

pub fn count_rows(c: &Census, families: &[SequenceName]) -> Vec<CountRow> {
    families
        .iter()
        .filter_map(|&name| {
            let enumerated = census_value(c, name)?;
            let formula = name.value(c.n);
            Some(CountRow {
                family: name.to_string(),
                enumerated: enumerated.to_string(),
                formula: formula.to_string(),
                agree: formula.is_integer() && formula.to_integer().to_biguint().as_ref() == Some(enumerated),
            })
        })
        .collect()
}

pub fn count_text(n: usize, rows: &[CountRow]) -> String {
    let width = rows.iter().map(|r| r.enumerated.len().max(r.formula.len())).max().unwrap_or(1).max(10);
    let mut out = format!("{:<6} {:>width$} {:>width$} agree   (n = {n})\n", "family", "enumerated", "formula");
    for r in rows {
        let _ = writeln!(
            out,
            "{:<6} {:>width$} {:>width$} {}",
            r.family,
            r.enumerated,
            r.formula,
            if r.agree { "yes" } else { "NO" }
        );
    }
    out
}
