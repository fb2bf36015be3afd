//! Truncated formal power series with exact rational coefficients.

use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Series {
    coeffs: Vec<BigRational>,
}

impl Series {
    /// Coefficients of `z^0, …, z^(order-1)`; missing entries are zero.
    pub fn new(mut coeffs: Vec<BigRational>, order: usize) -> Self {
        coeffs.resize(order, BigRational::zero());
        Series { coeffs }
    }

    pub fn from_ints(coeffs: &[i64], order: usize) -> Self {
        Series::new(coeffs.iter().map(|&c| BigRational::from_integer(BigInt::from(c))).collect(), order)
    }

    /// `e^z` truncated.
    pub fn exp(order: usize) -> Self {
        let mut coeffs = Vec::with_capacity(order);
        let mut term = BigRational::one();
        for k in 0..order {
            coeffs.push(term.clone());
            term /= BigRational::from_integer(BigInt::from(k + 1));
        }
        Series { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    /// `self / other`; `None` when the constant term of `other` is zero.
    pub fn div(&self, other: &Series) -> Option<Series> {
        let order = self.order().min(other.order());
        let c0 = other.coeffs.first()?;
        if c0.is_zero() {
            return None;
        }
        let mut q: Vec<BigRational> = Vec::with_capacity(order);
        for k in 0..order {
            let mut acc = self.coeffs[k].clone();
            for (j, qj) in q.iter().enumerate() {
                acc -= qj * &other.coeffs[k - j];
            }
            q.push(acc / c0);
        }
        Some(Series { coeffs: q })
    }

    /// Coefficients multiplied by `k!`, reading an exponential generating
    /// function as a sequence.
    pub fn egf_values(&self) -> Vec<BigRational> {
        let mut fact = BigRational::one();
        self.coeffs
            .iter()
            .enumerate()
            .map(|(k, c)| {
                if k > 0 {
                    fact *= BigRational::from_integer(BigInt::from(k));
                }
                c * &fact
            })
            .collect()
    }
}

impl Add for &Series {
    type Output = Series;

    fn add(self, rhs: &Series) -> Series {
        let order = self.order().min(rhs.order());
        Series { coeffs: (0..order).map(|k| &self.coeffs[k] + &rhs.coeffs[k]).collect() }
    }
}

impl Neg for &Series {
    type Output = Series;

    fn neg(self) -> Series {
        Series { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl Sub for &Series {
    type Output = Series;

    fn sub(self, rhs: &Series) -> Series {
        self + &(-rhs)
    }
}

impl Mul for &Series {
    type Output = Series;

    fn mul(self, rhs: &Series) -> Series {
        let order = self.order().min(rhs.order());
        let coeffs = (0..order)
            .map(|k| (0..=k).fold(BigRational::zero(), |acc, j| acc + &self.coeffs[j] * &rhs.coeffs[k - j]))
            .collect();
        Series { coeffs }
    }
}
