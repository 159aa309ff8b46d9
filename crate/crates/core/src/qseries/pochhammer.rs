//! q-Pochhammer symbols `(±q^j; q^d)_n` and products of them.

use serde::Serialize;

use super::TruncatedSeries;
use crate::error::{Error, Result};

/// Sign of the base `a = ±q^j` in `(a; q^d)_n = ∏ (1 - a q^{d i})`.
///
/// `Plus` gives factors `(1 - q^e)`, `Minus` gives `(1 + q^e)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Sign {
    Plus,
    Minus,
}

/// `(±q^j; q^d)_n = ∏_{i=0}^{n-1} (1 ∓ q^{j + d i})` modulo `q^(order+1)`.
pub fn pochhammer_finite(sign: Sign, j: usize, d: usize, n: usize, order: usize) -> TruncatedSeries {
    let mut out = TruncatedSeries::one(order);
    for i in 0..n {
        let e = j + d * i;
        if e > order && d > 0 {
            // this factor and every later one is 1 mod q^(order+1)
            break;
        }
        out.mul_binomial(sign, e);
    }
    out
}

/// `(±q^j; q^d)_∞` modulo `q^(order+1)`.
pub fn pochhammer_infinite(sign: Sign, j: usize, d: usize, order: usize) -> Result<TruncatedSeries> {
    if j == 0 {
        return Err(Error::DivergentProduct);
    }
    if d == 0 {
        return Err(Error::InvalidModulus);
    }
    let n = if order < j { 0 } else { (order - j) / d + 1 };
    Ok(pochhammer_finite(sign, j, d, n, order))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum FactorPlace {
    Numerator,
    Denominator,
}

/// One factor `(±q^offset; q^modulus)_∞` of a [`ProductSpec`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct ProductFactor {
    pub sign: Sign,
    pub offset: usize,
    pub modulus: usize,
    pub place: FactorPlace,
}

/// A finite product of infinite q-Pochhammer symbols, each in the numerator
/// or the denominator. `(a_1, ..., a_k; q^d)_∞` is written as `k` factors
/// sharing one modulus.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize)]
pub struct ProductSpec {
    factors: Vec<ProductFactor>,
}

impl ProductSpec {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn numerator(mut self, sign: Sign, offset: usize, modulus: usize) -> Self {
        self.factors.push(ProductFactor {
            sign,
            offset,
            modulus,
            place: FactorPlace::Numerator,
        });
        self
    }

    pub fn denominator(mut self, sign: Sign, offset: usize, modulus: usize) -> Self {
        self.factors.push(ProductFactor {
            sign,
            offset,
            modulus,
            place: FactorPlace::Denominator,
        });
        self
    }

    /// `(±q^{o_1}, ±q^{o_2}, ...; q^d)_∞` in the numerator.
    pub fn numerator_list(self, sign: Sign, offsets: &[usize], modulus: usize) -> Self {
        offsets
            .iter()
            .fold(self, |acc, &o| acc.numerator(sign, o, modulus))
    }

    pub fn denominator_list(self, sign: Sign, offsets: &[usize], modulus: usize) -> Self {
        offsets
            .iter()
            .fold(self, |acc, &o| acc.denominator(sign, o, modulus))
    }

    pub fn factors(&self) -> &[ProductFactor] {
        &self.factors
    }

    pub fn validate(&self) -> Result<()> {
        for f in &self.factors {
            if f.offset == 0 {
                return Err(Error::DivergentProduct);
            }
            if f.modulus == 0 {
                return Err(Error::InvalidModulus);
            }
        }
        Ok(())
    }
}

/// Expands a [`ProductSpec`] modulo `q^(order+1)`.
pub fn product_series(spec: &ProductSpec, order: usize) -> Result<TruncatedSeries> {
    spec.validate()?;
    let mut out = TruncatedSeries::one(order);
    for f in spec.factors() {
        let mut e = f.offset;
        while e <= order {
            match f.place {
                FactorPlace::Numerator => out.mul_binomial(f.sign, e),
                FactorPlace::Denominator => out.div_binomial(f.sign, e),
            }
            e += f.modulus;
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(order: usize, c: &[i64]) -> TruncatedSeries {
        TruncatedSeries::from_coeffs(order, c.iter().copied())
    }

    #[test]
    fn finite_examples() {
        assert_eq!(pochhammer_finite(Sign::Plus, 1, 1, 0, 5), TruncatedSeries::one(5));
        assert_eq!(pochhammer_finite(Sign::Plus, 1, 1, 2, 5), s(5, &[1, -1, -1, 1]));
        assert_eq!(pochhammer_finite(Sign::Minus, 0, 3, 2, 5), s(5, &[2, 0, 0, 2]));
    }

    #[test]
    fn infinite_examples() {
        // pentagonal numbers 1, 2, 5 at order 5
        assert_eq!(
            pochhammer_infinite(Sign::Plus, 1, 1, 5).unwrap(),
            s(5, &[1, -1, -1, 0, 0, 1])
        );
        assert_eq!(pochhammer_infinite(Sign::Plus, 2, 1, 1).unwrap(), TruncatedSeries::one(1));
        assert_eq!(
            pochhammer_infinite(Sign::Minus, 1, 1, 3).unwrap(),
            s(3, &[1, 1, 1, 2])
        );
    }

    #[test]
    fn infinite_rejects_zero_offset() {
        assert_eq!(pochhammer_infinite(Sign::Plus, 0, 2, 4), Err(Error::DivergentProduct));
        assert_eq!(pochhammer_infinite(Sign::Minus, 0, 2, 4), Err(Error::DivergentProduct));
    }

    #[test]
    fn odd_part_product_counts_two_partitions_of_four() {
        let inv = pochhammer_infinite(Sign::Plus, 1, 2, 4).unwrap().invert().unwrap();
        assert_eq!(inv[4], 2.into());
    }

    #[test]
    fn product_spec_examples() {
        assert_eq!(product_series(&ProductSpec::new(), 6).unwrap(), TruncatedSeries::one(6));
        let gg1 = ProductSpec::new().denominator_list(Sign::Plus, &[1, 4, 7], 8);
        assert_eq!(product_series(&gg1, 4).unwrap()[4], 2.into());
        let bad = ProductSpec::new().numerator(Sign::Plus, 0, 3);
        assert_eq!(product_series(&bad, 4), Err(Error::DivergentProduct));
    }
}
