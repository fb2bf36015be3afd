//! Exact counting sequences for `F_n` and its subclasses.
//!
//! Every function here is closed-form or recursive; the enumeration side
//! lives in [`crate::enumerate`]. All values at `n = 0` are `1` (the empty
//! structure counted once).
//!
//! Closed forms involving `√2`, `√3` or `√5` are replaced by the integer or
//! rational linear recurrences with the same characteristic roots:
//! `r` by `r(n+2) = 2r(n+1) + r(n)` (roots `1 ± √2`), `G` by
//! `G(n+2) = G(n+1) + G(n)/2` (roots `(1 ± √3)/2`), Fibonacci by the usual
//! recurrence (roots `(1 ± √5)/2`).

use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use crate::series::Series;

fn binomials(n: usize) -> Vec<BigUint> {
    let mut row = vec![BigUint::one()];
    for _ in 0..n {
        let mut next = vec![BigUint::one(); row.len() + 1];
        for i in 1..row.len() {
            next[i] = &row[i - 1] + &row[i];
        }
        row = next;
    }
    row
}

fn factorial(n: usize) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, i| acc * i)
}

fn rational(v: &BigUint) -> BigRational {
    BigRational::from_integer(BigInt::from(v.clone()))
}

/// Values `a(0..=n)` of `a(m) = Σ_{i=1}^{m} C(m, i) w(i) a(m-i)`, `a(0) = 1`.
fn first_block_recurrence(n: usize, weight: impl Fn(usize) -> u32) -> Vec<BigUint> {
    let mut a = vec![BigUint::one()];
    for m in 1..=n {
        let c = binomials(m);
        let v = (1..=m).fold(BigUint::zero(), |acc, i| acc + &c[i] * weight(i) * &a[m - i]);
        a.push(v);
    }
    a
}

/// Fubini numbers: weak orderings on an `n`-set.
pub fn seq_p(n: usize) -> BigUint {
    first_block_recurrence(n, |_| 1).pop().expect("nonempty")
}

/// `|F_n|`: the sum over compositions `(n_1, …, n_k)` of `n` of the
/// multinomial coefficient times `2` per part of size at least two, computed
/// by peeling off the least block.
pub fn seq_q(n: usize) -> BigUint {
    first_block_recurrence(n, |i| if i == 1 { 1 } else { 2 }).pop().expect("nonempty")
}

/// Orbits of `F_n` under conjugation.
pub fn seq_r(n: usize) -> BigUint {
    let (mut a, mut b) = (BigUint::one(), BigUint::one());
    for _ in 0..n {
        let next = &b * 2u32 + &a;
        a = b;
        b = next;
    }
    a
}

/// `Σ_k C(n, 2k) 2^k`.
pub fn seq_r_closed(n: usize) -> BigUint {
    let c = binomials(n);
    (0..=n / 2).fold(BigUint::zero(), |acc, k| acc + &c[2 * k] * (BigUint::one() << k))
}

/// Signatures: compositions of `n`.
pub fn seq_s(n: usize) -> BigUint {
    if n == 0 {
        BigUint::one()
    } else {
        BigUint::one() << (n - 1)
    }
}

/// `F_0 = 0`, `F_1 = 1`.
pub fn fibonacci(n: usize) -> BigUint {
    let (mut a, mut b) = (BigUint::zero(), BigUint::one());
    for _ in 0..n {
        let next = &a + &b;
        a = b;
        b = next;
    }
    a
}

/// `G_0 = 0`, `G_1 = 1`, `G_{n+2} = G_{n+1} + G_n / 2`.
pub fn seq_g(n: usize) -> BigRational {
    let half = BigRational::new(BigInt::one(), BigInt::from(2));
    let (mut a, mut b) = (BigRational::zero(), BigRational::one());
    for _ in 0..n {
        let next = &b + &a * &half;
        a = b;
        b = next;
    }
    a
}

fn second_order(n: usize, seeds: [u32; 3], step: impl Fn(&BigUint, &BigUint, usize) -> BigUint) -> BigUint {
    let mut v: Vec<BigUint> = seeds.iter().map(|&s| BigUint::from(s)).collect();
    while v.len() <= n {
        let m = v.len() - 2;
        let next = step(&v[m + 1], &v[m], m);
        v.push(next);
    }
    v.swap_remove(n)
}

/// Order-preservable weak orderings (2-quasilinear):
/// `p_op(n+2) = 1 + (n+2) p_op(n+1) + (n+2)(n+1)/2 · p_op(n)` for `n ≥ 1`.
pub fn seq_p_op(n: usize) -> BigUint {
    second_order(n, [1, 1, 3], |prev, prev2, m| BigUint::one() + prev * (m + 2) + prev2 * ((m + 2) * (m + 1) / 2))
}

/// `Σ_{k=0}^{n} n!/(n+1-k)! · G_k`.
pub fn seq_p_op_closed(n: usize) -> BigUint {
    if n == 0 {
        return BigUint::one();
    }
    let nf = rational(&factorial(n));
    let total = (0..=n).fold(BigRational::zero(), |acc, k| acc + &nf / rational(&factorial(n + 1 - k)) * seq_g(k));
    integral(total)
}

/// Order-preservable members:
/// `q_op(n+2) = 2 + (n+2) q_op(n+1) + (n+2)(n+1) q_op(n)` for `n ≥ 1`.
pub fn seq_q_op(n: usize) -> BigUint {
    second_order(n, [1, 1, 4], |prev, prev2, m| BigUint::from(2u32) + prev * (m + 2) + prev2 * ((m + 2) * (m + 1)))
}

/// `n! F_n + 2 Σ_{k=0}^{n-1} n!/(n+1-k)! · F_k`.
pub fn seq_q_op_closed(n: usize) -> BigUint {
    if n == 0 {
        return BigUint::one();
    }
    let nf = rational(&factorial(n));
    let sum = (0..n)
        .fold(BigRational::zero(), |acc, k| acc + &nf / rational(&factorial(n + 1 - k)) * rational(&fibonacci(k)));
    integral(&nf * rational(&fibonacci(n)) + sum * BigRational::from_integer(BigInt::from(2)))
}

/// `2^n - 1`.
pub fn seq_r_op(n: usize) -> BigUint {
    if n == 0 {
        return BigUint::one();
    }
    (BigUint::one() << n) - 1u32
}

/// `F_{n+2} - 1`.
pub fn seq_s_op(n: usize) -> BigUint {
    if n == 0 {
        return BigUint::one();
    }
    fibonacci(n + 2) - 1u32
}

/// `2n - 1`.
pub fn seq_r_b(n: usize) -> BigUint {
    BigUint::from((2 * n).max(2) - 1)
}

pub fn seq_s_b(n: usize) -> BigUint {
    BigUint::from(n.max(1))
}

fn integral(v: BigRational) -> BigUint {
    assert!(v.is_integer(), "{v} is not an integer");
    v.to_integer().to_biguint().expect("nonnegative")
}

/// Coefficients of `(1 - z) / (1 - 2z - z²)` through `z^(order-1)`.
pub fn r_ogf(order: usize) -> Vec<BigRational> {
    Series::from_ints(&[1, -1], order)
        .div(&Series::from_ints(&[1, -2, -1], order))
        .expect("unit constant term")
        .coeffs()
        .to_vec()
}

/// `n!`-scaled coefficients of `(2e^z - 2z - z²) / (2 - 2z - z²)`.
pub fn p_op_egf(order: usize) -> Vec<BigRational> {
    let e = Series::exp(order);
    let num = &(&e + &e) - &Series::from_ints(&[0, 2, 1], order);
    num.div(&Series::from_ints(&[2, -2, -1], order)).expect("nonzero constant term").egf_values()
}

/// `n!`-scaled coefficients of `(2e^z - 1 - 2z - z²) / (1 - z - z²)`.
pub fn q_op_egf(order: usize) -> Vec<BigRational> {
    let e = Series::exp(order);
    let num = &(&e + &e) - &Series::from_ints(&[1, 2, 1], order);
    num.div(&Series::from_ints(&[1, -1, -1], order)).expect("unit constant term").egf_values()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SequenceName {
    P,
    Q,
    R,
    S,
    POp,
    QOp,
    ROp,
    SOp,
    RB,
    SB,
    Fibonacci,
    G,
}

impl SequenceName {
    pub const ALL: [SequenceName; 12] = [
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
        SequenceName::Fibonacci,
        SequenceName::G,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            SequenceName::P => "p",
            SequenceName::Q => "q",
            SequenceName::R => "r",
            SequenceName::S => "s",
            SequenceName::POp => "p_op",
            SequenceName::QOp => "q_op",
            SequenceName::ROp => "r_op",
            SequenceName::SOp => "s_op",
            SequenceName::RB => "r_b",
            SequenceName::SB => "s_b",
            SequenceName::Fibonacci => "fibonacci",
            SequenceName::G => "G",
        }
    }

    pub fn value(self, n: usize) -> BigRational {
        let int = |f: fn(usize) -> BigUint| rational(&f(n));
        match self {
            SequenceName::P => int(seq_p),
            SequenceName::Q => int(seq_q),
            SequenceName::R => int(seq_r),
            SequenceName::S => int(seq_s),
            SequenceName::POp => int(seq_p_op),
            SequenceName::QOp => int(seq_q_op),
            SequenceName::ROp => int(seq_r_op),
            SequenceName::SOp => int(seq_s_op),
            SequenceName::RB => int(seq_r_b),
            SequenceName::SB => int(seq_s_b),
            SequenceName::Fibonacci => int(fibonacci),
            SequenceName::G => seq_g(n),
        }
    }
}

impl fmt::Display for SequenceName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for SequenceName {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        SequenceName::ALL
            .into_iter()
            .find(|name| name.as_str().eq_ignore_ascii_case(s))
            .ok_or_else(|| format!("unknown sequence {s:?}"))
    }
}

/// The first `len` values of one sequence, indexed from `0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SequenceTable {
    pub name: SequenceName,
    pub values: Vec<BigRational>,
}

impl SequenceTable {
    pub fn compute(name: SequenceName, len: usize) -> Self {
        SequenceTable { name, values: (0..len).map(|n| name.value(n)).collect() }
    }

    pub fn is_integral(&self) -> bool {
        self.values.iter().all(|v| v.is_integer())
    }

    /// Values as machine integers when they are integral and fit.
    pub fn as_u64(&self) -> Option<Vec<u64>> {
        self.values.iter().map(|v| if v.is_integer() { v.to_integer().to_u64() } else { None }).collect()
    }
}
