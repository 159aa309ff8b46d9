//! Truncated formal power series in `q` with exact integer coefficients.
//!
//! A [`TruncatedSeries`] of order `N` stores the coefficients of
//! `q^0, ..., q^N` and represents a class modulo `q^(N+1)`. Binary
//! operations between series of different orders truncate to the smaller
//! order. [`BivariateSeries`] adds a second variable `x`, stored densely as
//! one `q`-series per power of `x`.

mod pochhammer;

pub use pochhammer::{
    pochhammer_finite, pochhammer_infinite, product_series, FactorPlace, ProductFactor,
    ProductSpec, Sign,
};

use std::fmt;
use std::ops::{Add, AddAssign, Index, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TruncatedSeries {
    coeffs: Vec<BigInt>,
}

impl TruncatedSeries {
    pub fn zero(order: usize) -> Self {
        Self {
            coeffs: vec![BigInt::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        Self::monomial(1, 0, order)
    }

    /// `c * q^exp`, or zero when `exp > order`.
    pub fn monomial(coeff: impl Into<BigInt>, exp: usize, order: usize) -> Self {
        let mut s = Self::zero(order);
        if exp <= order {
            s.coeffs[exp] = coeff.into();
        }
        s
    }

    /// Builds a series of the given order from leading coefficients; missing
    /// coefficients are zero and extra ones are dropped.
    pub fn from_coeffs<I, T>(order: usize, coeffs: I) -> Self
    where
        I: IntoIterator<Item = T>,
        T: Into<BigInt>,
    {
        let mut s = Self::zero(order);
        for (slot, c) in s.coeffs.iter_mut().zip(coeffs) {
            *slot = c.into();
        }
        s
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, exp: usize) -> Option<&BigInt> {
        self.coeffs.get(exp)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn truncate(&self, order: usize) -> Self {
        let order = order.min(self.order());
        Self {
            coeffs: self.coeffs[..=order].to_vec(),
        }
    }

    /// Multiplication by `q^k`.
    pub fn shift(&self, k: usize) -> Self {
        let n = self.order();
        let mut out = Self::zero(n);
        for i in k..=n {
            out.coeffs[i] = self.coeffs[i - k].clone();
        }
        out
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|x| x * c).collect(),
        }
    }

    /// Substitution `q -> q^d`, keeping the order.
    pub fn dilate(&self, d: usize) -> Self {
        assert!(d >= 1, "dilation factor must be positive");
        let n = self.order();
        let mut out = Self::zero(n);
        for (i, c) in self.coeffs.iter().enumerate() {
            if i * d > n {
                break;
            }
            out.coeffs[i * d] = c.clone();
        }
        out
    }

    /// Cauchy product truncated at `min(order(self), order(other), order)`.
    pub fn mul_truncated(&self, other: &Self, order: usize) -> Self {
        let n = order.min(self.order()).min(other.order());
        let mut out = Self::zero(n);
        for (i, a) in self.coeffs.iter().enumerate().take(n + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate().take(n + 1 - i) {
                if !b.is_zero() {
                    out.coeffs[i + j] += a * b;
                }
            }
        }
        out
    }

    /// In-place multiplication by `(1 - q^e)` for [`Sign::Plus`] or
    /// `(1 + q^e)` for [`Sign::Minus`]. Linear time.
    pub fn mul_binomial(&mut self, sign: Sign, e: usize) {
        if e == 0 {
            match sign {
                Sign::Plus => self.coeffs.iter_mut().for_each(|c| c.set_zero()),
                Sign::Minus => self.coeffs.iter_mut().for_each(|c| *c *= 2),
            }
            return;
        }
        let n = self.order();
        for i in (e..=n).rev() {
            let t = self.coeffs[i - e].clone();
            match sign {
                Sign::Plus => self.coeffs[i] -= t,
                Sign::Minus => self.coeffs[i] += t,
            }
        }
    }

    /// In-place division by `(1 - q^e)` or `(1 + q^e)`; requires `e >= 1`.
    pub fn div_binomial(&mut self, sign: Sign, e: usize) {
        assert!(e >= 1, "binomial divisor must have positive degree");
        let n = self.order();
        for i in e..=n {
            let t = self.coeffs[i - e].clone();
            match sign {
                Sign::Plus => self.coeffs[i] += t,
                Sign::Minus => self.coeffs[i] -= t,
            }
        }
    }

    /// Multiplicative inverse modulo `q^(N+1)`.
    pub fn invert(&self) -> Result<Self> {
        Self::one(self.order()).div(self)
    }

    /// Exact quotient `self / divisor` modulo `q^(N+1)`. The divisor's
    /// constant term must be `±1` so the quotient stays integral.
    pub fn div(&self, divisor: &Self) -> Result<Self> {
        let lead = &divisor.coeffs[0];
        if lead.abs() != BigInt::one() {
            return Err(Error::NonUnitConstantTerm {
                constant: lead.clone(),
            });
        }
        let n = self.order().min(divisor.order());
        let mut out = Self::zero(n);
        for i in 0..=n {
            let mut acc = self.coeffs[i].clone();
            for k in 1..=i {
                let d = &divisor.coeffs[k];
                if !d.is_zero() {
                    acc -= d * &out.coeffs[i - k];
                }
            }
            // lead is ±1, so multiplying equals dividing
            out.coeffs[i] = acc * lead;
        }
        Ok(out)
    }

    pub fn non_negative(&self) -> bool {
        self.coeffs.iter().all(|c| !c.is_negative())
    }
}

impl Index<usize> for TruncatedSeries {
    type Output = BigInt;

    fn index(&self, exp: usize) -> &BigInt {
        &self.coeffs[exp]
    }
}

impl Add for &TruncatedSeries {
    type Output = TruncatedSeries;

    fn add(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        let n = self.order().min(rhs.order());
        TruncatedSeries {
            coeffs: (0..=n).map(|i| &self.coeffs[i] + &rhs.coeffs[i]).collect(),
        }
    }
}

impl Add for TruncatedSeries {
    type Output = TruncatedSeries;

    fn add(self, rhs: TruncatedSeries) -> TruncatedSeries {
        &self + &rhs
    }
}

impl AddAssign<&TruncatedSeries> for TruncatedSeries {
    fn add_assign(&mut self, rhs: &TruncatedSeries) {
        self.coeffs.truncate(rhs.order().min(self.order()) + 1);
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            *a += b;
        }
    }
}

impl Sub for &TruncatedSeries {
    type Output = TruncatedSeries;

    fn sub(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        let n = self.order().min(rhs.order());
        TruncatedSeries {
            coeffs: (0..=n).map(|i| &self.coeffs[i] - &rhs.coeffs[i]).collect(),
        }
    }
}

impl Neg for &TruncatedSeries {
    type Output = TruncatedSeries;

    fn neg(self) -> TruncatedSeries {
        TruncatedSeries {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Mul for &TruncatedSeries {
    type Output = TruncatedSeries;

    fn mul(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        self.mul_truncated(rhs, usize::MAX)
    }
}

impl Mul for TruncatedSeries {
    type Output = TruncatedSeries;

    fn mul(self, rhs: TruncatedSeries) -> TruncatedSeries {
        &self * &rhs
    }
}

impl fmt::Display for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let (neg, mag) = (c.is_negative(), c.abs());
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            let unit = mag.is_one();
            match i {
                0 => write!(f, "{mag}")?,
                1 if unit => write!(f, "q")?,
                1 => write!(f, "{mag}q")?,
                _ if unit => write!(f, "q^{i}")?,
                _ => write!(f, "{mag}q^{i}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, " + O(q^{})", self.order() + 1)
    }
}

/// Series in `q` and `x`, dense in both; row `m` is the coefficient of `x^m`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BivariateSeries {
    rows: Vec<TruncatedSeries>,
}

impl BivariateSeries {
    pub fn zero(order: usize, x_bound: usize) -> Self {
        Self {
            rows: vec![TruncatedSeries::zero(order); x_bound + 1],
        }
    }

    /// Rows are truncated to the smallest order among them.
    pub fn from_rows(rows: Vec<TruncatedSeries>) -> Self {
        assert!(!rows.is_empty(), "bivariate series needs at least one row");
        let n = rows.iter().map(TruncatedSeries::order).min().unwrap_or(0);
        Self {
            rows: rows.into_iter().map(|r| r.truncate(n)).collect(),
        }
    }

    pub fn order(&self) -> usize {
        self.rows[0].order()
    }

    pub fn x_bound(&self) -> usize {
        self.rows.len() - 1
    }

    pub fn rows(&self) -> &[TruncatedSeries] {
        &self.rows
    }

    pub fn row(&self, m: usize) -> Option<&TruncatedSeries> {
        self.rows.get(m)
    }

    /// Coefficient of `q^n x^m`; zero for `m` beyond the tracked bound.
    pub fn coefficient(&self, n: usize, m: usize) -> BigInt {
        self.rows
            .get(m)
            .and_then(|r| r.coeff(n))
            .cloned()
            .unwrap_or_default()
    }

    /// Adds `x^m * s`. Terms with `m > x_bound` are dropped.
    pub fn add_term(&mut self, m: usize, s: &TruncatedSeries) {
        if let Some(row) = self.rows.get_mut(m) {
            *row += s;
        }
    }

    /// Specialisation `x = 1`.
    pub fn at_x_one(&self) -> TruncatedSeries {
        let mut acc = TruncatedSeries::zero(self.order());
        for r in &self.rows {
            acc += r;
        }
        acc
    }
}

impl Add for &BivariateSeries {
    type Output = BivariateSeries;

    fn add(self, rhs: &BivariateSeries) -> BivariateSeries {
        let m = self.x_bound().min(rhs.x_bound());
        BivariateSeries::from_rows((0..=m).map(|i| &self.rows[i] + &rhs.rows[i]).collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(order: usize, c: &[i64]) -> TruncatedSeries {
        TruncatedSeries::from_coeffs(order, c.iter().copied())
    }

    #[test]
    fn add_cancels_and_keeps_identity() {
        assert_eq!(&s(3, &[1, 1]) + &s(3, &[1, -1]), s(3, &[2]));
        let x = s(4, &[3, 0, -2, 7]);
        assert_eq!(&TruncatedSeries::zero(4) + &x, x);
        assert_eq!(&s(2, &[1, 0, 1]) + &s(2, &[0, 1, 1]), s(2, &[1, 1, 2]));
    }

    #[test]
    fn mixed_orders_truncate_to_smaller() {
        let a = s(5, &[1, 2, 3, 4, 5, 6]);
        let b = s(2, &[1, 1, 1]);
        assert_eq!((&a + &b).order(), 2);
        assert_eq!((&a * &b).order(), 2);
        assert_eq!((&a * &b), s(2, &[1, 3, 6]));
    }

    #[test]
    fn mul_examples() {
        let n = 7;
        let geom = TruncatedSeries::from_coeffs(n, vec![1; n + 1]);
        assert_eq!(&s(n, &[1, -1]) * &geom, TruncatedSeries::one(n));
        let x = s(5, &[2, -1, 0, 4]);
        assert_eq!(&x * &TruncatedSeries::one(5), x);
        assert_eq!(&s(4, &[1, 1]) * &s(4, &[1, 1]), s(4, &[1, 2, 1]));
    }

    #[test]
    fn invert_examples() {
        let inv = s(6, &[1, -1]).invert().unwrap();
        assert_eq!(inv, TruncatedSeries::from_coeffs(6, vec![1; 7]));
        assert_eq!(TruncatedSeries::one(3).invert().unwrap(), TruncatedSeries::one(3));
        let neg = s(4, &[-1, 2]).invert().unwrap();
        assert_eq!(&neg * &s(4, &[-1, 2]), TruncatedSeries::one(4));
    }

    #[test]
    fn invert_rejects_non_unit() {
        let err = s(3, &[2, 1]).invert().unwrap_err();
        assert_eq!(
            err,
            Error::NonUnitConstantTerm {
                constant: BigInt::from(2)
            }
        );
        assert!(TruncatedSeries::zero(3).invert().is_err());
    }

    #[test]
    fn binomial_helpers_match_general_mul() {
        let base = s(9, &[1, 3, -2, 0, 5, 1]);
        for e in 1..=4 {
            for sign in [Sign::Plus, Sign::Minus] {
                let mut f = TruncatedSeries::one(9);
                f.mul_binomial(sign, e);
                let mut fast = base.clone();
                fast.mul_binomial(sign, e);
                assert_eq!(fast, &base * &f);
                fast.div_binomial(sign, e);
                assert_eq!(fast, base);
            }
        }
    }

    #[test]
    fn dilate_and_shift() {
        let a = s(6, &[1, 1, 1]);
        assert_eq!(a.dilate(3), s(6, &[1, 0, 0, 1, 0, 0, 1]));
        assert_eq!(a.shift(5), s(6, &[0, 0, 0, 0, 0, 1, 1]));
    }

    #[test]
    fn display_is_readable() {
        assert_eq!(s(3, &[1, -1, 0, 2]).to_string(), "1 - q + 2q^3 + O(q^4)");
        assert_eq!(TruncatedSeries::zero(1).to_string(), "0 + O(q^2)");
    }

    #[test]
    fn bivariate_specialises_at_one() {
        let mut b = BivariateSeries::zero(4, 2);
        b.add_term(0, &TruncatedSeries::one(4));
        b.add_term(1, &s(4, &[0, 1, 1]));
        b.add_term(2, &s(4, &[0, 0, 0, 3]));
        b.add_term(7, &s(4, &[5]));
        assert_eq!(b.at_x_one(), s(4, &[1, 1, 1, 3]));
        assert_eq!(b.coefficient(3, 2), BigInt::from(3));
        assert_eq!(b.coefficient(3, 9), BigInt::zero());
    }
}
