//! Acceptance checks. Runs without the libtest harness so that every check
//! reports one PASS/FAIL line; the process fails if any check fails.

use std::collections::{BTreeMap, BTreeSet, HashMap, HashSet};
use std::time::{Duration, Instant};

use num_bigint::BigUint;
use num_rational::BigRational;
use num_traits::ToPrimitive;

use quasitrivial::classify::{is_realizable_preimage, realize_preimage, signature_from_preimage};
use quasitrivial::enumerate::{census, members, quasitrivial_tables, weak_orderings};
use quasitrivial::group::{canonical_form, orbit, orbit_stab_sizes, stabilizer};
use quasitrivial::orders::{construct_order_natural, is_2_quasilinear, is_order_preserving, is_single_plateaued};
use quasitrivial::sequences::*;
use quasitrivial::subclass::{is_anticommutative, is_bisymmetric, is_commutative};
use quasitrivial::{classify, is_associative, is_quasitrivial, OpTable, PreimageSequence, WeakOrdering};

const TABLE_ONE: [[u64; 4]; 6] =
    [[1, 1, 1, 1], [3, 4, 3, 2], [13, 20, 7, 4], [75, 138, 17, 8], [541, 1182, 41, 16], [4683, 12166, 99, 32]];
const TABLE_TWO: [[u64; 4]; 6] =
    [[1, 1, 1, 1], [3, 4, 3, 2], [13, 20, 7, 4], [71, 130, 15, 7], [486, 1052, 31, 12], [3982, 10214, 63, 20]];

const CENSUS_BUDGET: Duration = Duration::from_secs(30);
const ORACLE_BUDGET: Duration = Duration::from_secs(10);
const SEQUENCE_BUDGET: Duration = Duration::from_secs(1);
const RECURRENCE_RANGE: usize = 40;
const SERIES_ORDER: usize = 11;

type Check = std::result::Result<(), String>;
type Criterion = (&'static str, fn() -> Check);
type SeriesCheck = (&'static str, Vec<BigRational>, fn(usize) -> BigUint);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Check {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn u(v: &BigUint) -> u64 {
    v.to_u64().expect("small")
}

fn within(budget: Duration, f: impl FnOnce() -> Check) -> Check {
    let start = Instant::now();
    f()?;
    let took = start.elapsed();
    ensure(took < budget, || format!("took {took:?}, budget {budget:?}"))
}

fn table_one() -> Check {
    within(CENSUS_BUDGET, || {
        for (i, expected) in TABLE_ONE.iter().enumerate() {
            let n = i + 1;
            let c = census(n).map_err(|e| e.to_string())?;
            let counted = [u(&c.p), u(&c.q), u(&c.r), u(&c.s)];
            let formula = [u(&seq_p(n)), u(&seq_q(n)), u(&seq_r(n)), u(&seq_s(n))];
            ensure(counted == *expected, || format!("n = {n}: enumerated {counted:?}, expected {expected:?}"))?;
            ensure(formula == *expected, || format!("n = {n}: formulas {formula:?}, expected {expected:?}"))?;
        }
        Ok(())
    })
}

fn table_two() -> Check {
    within(CENSUS_BUDGET, || {
        for (i, expected) in TABLE_TWO.iter().enumerate() {
            let n = i + 1;
            let c = census(n).map_err(|e| e.to_string())?;
            let counted = [u(&c.p_op), u(&c.q_op), u(&c.r_op), u(&c.s_op)];
            let recurrence = [u(&seq_p_op(n)), u(&seq_q_op(n)), u(&seq_r_op(n)), u(&seq_s_op(n))];
            let closed = [u(&seq_p_op_closed(n)), u(&seq_q_op_closed(n)), u(&seq_r_op(n)), u(&seq_s_op(n))];
            for (label, row) in [("enumerated", counted), ("recurrence", recurrence), ("closed form", closed)] {
                ensure(row == *expected, || format!("n = {n}: {label} {row:?}, expected {expected:?}"))?;
            }
        }
        Ok(())
    })
}

fn brute_force_oracle() -> Check {
    within(ORACLE_BUDGET, || {
        for n in 1..=4 {
            let structural: HashSet<OpTable> = members(n).map_err(|e| e.to_string())?.collect();
            let mut brute = HashSet::new();
            let mut seen = 0usize;
            for f in quasitrivial_tables(n).map_err(|e| e.to_string())? {
                seen += 1;
                let oracle = is_associative(&f);
                let report = classify(&f);
                ensure(report.quasitrivial && report.associative == oracle && report.is_member() == oracle, || {
                    format!("classify disagrees with the oracle on\n{f}")
                })?;
                if oracle {
                    brute.insert(f);
                }
            }
            ensure(seen == 1 << (n * (n - 1)), || format!("n = {n}: {seen} quasitrivial tables"))?;
            ensure(structural == brute, || {
                format!("n = {n}: structural {} vs oracle {} members", structural.len(), brute.len())
            })?;
        }
        Ok(())
    })
}

fn three_element_cross_section() -> Check {
    let all: Vec<OpTable> = members(3).map_err(|e| e.to_string())?.collect();
    let forms: BTreeSet<OpTable> = all.iter().map(|f| canonical_form(f).unwrap()).collect();
    ensure(forms.len() == 7, || format!("{} canonical forms", forms.len()))?;
    let preimages: BTreeSet<Vec<usize>> = all.iter().map(|f| f.preimage_sequence().counts().to_vec()).collect();
    let expected: BTreeSet<Vec<usize>> =
        [vec![3, 3, 3], vec![2, 2, 5], vec![1, 4, 4], vec![1, 3, 5]].into_iter().collect();
    ensure(preimages == expected, || format!("preimage sequences {preimages:?}"))?;
    let mut size_by_preimage: BTreeMap<Vec<usize>, usize> = BTreeMap::new();
    let mut total = 0;
    for form in &forms {
        let size = orbit(form).map_err(|e| e.to_string())?.len();
        total += size;
        let previous = size_by_preimage.insert(form.preimage_sequence().counts().to_vec(), size);
        ensure(previous.is_none_or(|p| p == size), || "orbit size varies within a signature".into())?;
    }
    let mut sizes: Vec<usize> = size_by_preimage.into_values().collect();
    sizes.sort_unstable();
    ensure(sizes == [1, 3, 3, 6], || format!("orbit sizes {sizes:?}"))?;
    ensure(total == 20, || format!("orbits cover {total} members"))
}

fn orbit_stabilizer() -> Check {
    for n in 1..=5 {
        let n_fact: usize = (1..=n).product();
        for f in members(n).map_err(|e| e.to_string())? {
            let orb = orbit(&f).map_err(|e| e.to_string())?.len();
            let stab = stabilizer(&f).map_err(|e| e.to_string())?.len();
            let (stab_formula, orb_formula) =
                orbit_stab_sizes(&signature_from_preimage(&f.preimage_sequence()).unwrap());
            ensure(orb * stab == n_fact, || format!("|orb|·|stab| = {} for\n{f}", orb * stab))?;
            ensure(BigUint::from(stab) == stab_formula && BigUint::from(orb) == orb_formula, || {
                format!("sizes ({stab}, {orb}) vs formula ({stab_formula}, {orb_formula}) for\n{f}")
            })?;
        }
    }
    Ok(())
}

fn equivalence_lattice() -> Check {
    for n in 1..=4 {
        let all: Vec<OpTable> = members(n).map_err(|e| e.to_string())?.collect();
        let mut ids: HashMap<OpTable, usize> = HashMap::new();
        let mut wo_ids: HashMap<WeakOrdering, usize> = HashMap::new();
        let info: Vec<(usize, usize, Vec<usize>)> = all
            .iter()
            .map(|f| {
                let details = quasitrivial::classify::member_details(f).unwrap();
                let next = ids.len();
                let form = *ids.entry(canonical_form(f).unwrap()).or_insert(next);
                let next = wo_ids.len();
                let wo = *wo_ids.entry(details.weak_ordering).or_insert(next);
                (wo, form, details.signature.parts().to_vec())
            })
            .collect();
        for (i, a) in info.iter().enumerate() {
            for (j, b) in info.iter().enumerate() {
                let s = a.2 == b.2;
                let p_then_r = info.iter().any(|h| h.0 == a.0 && h.1 == b.1);
                let r_then_p = info.iter().any(|h| h.1 == a.1 && h.0 == b.0);
                ensure(s == p_then_r && s == r_then_p, || format!("n = {n}: s ≠ p∘r on pair ({i}, {j})"))?;
                let meet = a.0 == b.0 && a.1 == b.1;
                ensure(meet == (i == j), || format!("n = {n}: p∧r ≠ q on pair ({i}, {j})"))?;
            }
        }
    }
    Ok(())
}

fn nondecreasing(len: usize, max: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|prefix: Vec<usize>| {
                let start = prefix.last().copied().unwrap_or(1);
                (start..=max).map(move |v| {
                    let mut next = prefix.clone();
                    next.push(v);
                    next
                })
            })
            .collect();
    }
    out
}

fn preimage_realizability() -> Check {
    for n in 1..=5 {
        let occurring: HashSet<Vec<usize>> =
            members(n).map_err(|e| e.to_string())?.map(|f| f.preimage_sequence().counts().to_vec()).collect();
        for counts in nondecreasing(n, 2 * n - 1) {
            let c = PreimageSequence::new(counts.clone()).map_err(|e| e.to_string())?;
            let realizable = is_realizable_preimage(&c);
            ensure(realizable == occurring.contains(&counts), || {
                format!("{c}: realizable = {realizable}, occurs = {}", occurring.contains(&counts))
            })?;
            if realizable {
                let f = realize_preimage(&c).map_err(|e| e.to_string())?;
                ensure(is_quasitrivial(&f) && is_associative(&f), || format!("realization of {c} is not a member"))?;
                ensure(f.preimage_sequence() == c, || format!("realization of {c} has {}", f.preimage_sequence()))?;
            } else {
                ensure(realize_preimage(&c).is_err(), || format!("{c} realized although unrealizable"))?;
            }
        }
    }
    Ok(())
}

fn order_construction() -> Check {
    for n in 1..=6 {
        for w in weak_orderings(n).map_err(|e| e.to_string())?.filter(is_2_quasilinear) {
            let l = construct_order_natural(&w).map_err(|e| e.to_string())?;
            ensure(is_single_plateaued(&w, &l).unwrap(), || format!("{w} is not single-plateaued for {l}"))?;
            if n <= 4 {
                for f in quasitrivial::enumerate::members_of(&w) {
                    ensure(is_order_preserving(&f, &l).unwrap(), || format!("{l} does not preserve\n{f}"))?;
                }
            }
        }
    }
    let w: WeakOrdering = "1 2 3 | 4 5 | 6 | 7 8".parse().map_err(|e: quasitrivial::Error| e.to_string())?;
    let rendered = construct_order_natural(&w).map_err(|e| e.to_string())?.to_string();
    ensure(rendered == "7 < 6 < 4 < 1 < 2 < 3 < 5 < 8", || format!("got {rendered:?}"))
}

fn subclass_census() -> Check {
    for n in 1..=5 {
        let (mut comm, mut anti) = (0usize, 0usize);
        let (mut forms, mut signatures) = (HashSet::new(), HashSet::new());
        for f in members(n).map_err(|e| e.to_string())? {
            comm += is_commutative(&f) as usize;
            anti += is_anticommutative(&f) as usize;
            let parts = quasitrivial::classify::member_details(&f).unwrap().signature.parts().to_vec();
            let shape = parts[1..].iter().all(|&p| p == 1);
            ensure(is_bisymmetric(&f) == shape, || format!("bisymmetry vs signature {parts:?} for\n{f}"))?;
            if shape {
                forms.insert(canonical_form(&f).unwrap());
                signatures.insert(parts);
            }
        }
        let n_fact: usize = (1..=n).product();
        let anti_expected = if n == 1 { 1 } else { 2 };
        ensure(comm == n_fact, || format!("n = {n}: {comm} commutative members"))?;
        ensure(anti == anti_expected, || format!("n = {n}: {anti} anticommutative members"))?;
        ensure(BigUint::from(forms.len()) == seq_r_b(n), || format!("n = {n}: {} bisymmetric orbits", forms.len()))?;
        ensure(BigUint::from(signatures.len()) == seq_s_b(n), || {
            format!("n = {n}: {} bisymmetric signatures", signatures.len())
        })?;
        let c = census(n).map_err(|e| e.to_string())?;
        ensure(c.r_b == seq_r_b(n) && c.s_b == seq_s_b(n), || format!("n = {n}: census r_b/s_b disagree"))?;
    }
    Ok(())
}

fn exact_sequences() -> Check {
    within(SEQUENCE_BUDGET, || {
        for n in 0..=RECURRENCE_RANGE {
            ensure(seq_r(n) == seq_r_closed(n), || format!("r({n})"))?;
            ensure(seq_p_op(n) == seq_p_op_closed(n), || format!("p_op({n})"))?;
            ensure(seq_q_op(n) == seq_q_op_closed(n), || format!("q_op({n})"))?;
        }
        let int = |v: BigUint| BigRational::from_integer(v.into());
        let checks: [SeriesCheck; 3] = [
            ("r", r_ogf(SERIES_ORDER), seq_r),
            ("p_op", p_op_egf(SERIES_ORDER), seq_p_op),
            ("q_op", q_op_egf(SERIES_ORDER), seq_q_op),
        ];
        for (name, series, seq) in checks {
            for (n, coeff) in series.into_iter().enumerate() {
                ensure(coeff == int(seq(n)), || format!("{name} series coefficient {n}: {coeff}"))?;
            }
        }
        Ok(())
    })
}

fn main() {
    let checks: [Criterion; 10] = [
        ("census reproduces p, q, r, s for n = 1..6", table_one),
        ("census reproduces p_op, q_op, r_op, s_op for n = 1..6", table_two),
        ("structural enumeration equals brute force for n <= 4", brute_force_oracle),
        ("n = 3 canonical forms, signatures and orbit sizes", three_element_cross_section),
        ("orbit-stabilizer sizes for every member with n <= 5", orbit_stabilizer),
        ("s = p∘r and p∧r = q for n <= 4", equivalence_lattice),
        ("preimage realizability for n <= 5", preimage_realizability),
        ("order construction is single-plateaued for n <= 6", order_construction),
        ("subclass censuses for n <= 5", subclass_census),
        ("recurrences, closed forms and series", exact_sequences),
    ];
    let mut failed = 0;
    for (i, (label, check)) in checks.iter().enumerate() {
        let start = Instant::now();
        match check() {
            Ok(()) => println!("criterion {:>2} PASS  {label} ({:.2?})", i + 1, start.elapsed()),
            Err(msg) => {
                failed += 1;
                println!("criterion {:>2} FAIL  {label}: {msg}", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", checks.len() - failed, checks.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
