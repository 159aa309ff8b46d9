//! Experimental double sums for partitions with difference at least three
//! and no consecutive multiples of three.
//!
//! `a_n` and `α_n` come from two-term recurrences. [`Recurrence::AsPrinted`]
//! is the literal form; [`Recurrence::Dilated`] replaces `q` by `q²` in the
//! recurrence coefficients and is provided for diagnostics only.

use serde::Serialize;

use super::multisum::inverse_pochhammers;
use crate::error::{Error, Result};
use crate::qseries::{BivariateSeries, Sign, TruncatedSeries};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum SchurForm {
    /// `Σ q^{Q} a_{n2} x^{2n2+n1} / (q;q)_{n1}`
    A,
    /// `Σ q^{Q} α_{n2} x^{2n2+n1} / ((q;q)_{n1} (q³;q³)_{n2})`
    Alpha,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize)]
pub enum Recurrence {
    /// `(1 - q^{3n}) a_n = (1 + q) a_{n-1} - q a_{n-2}` and
    /// `α_n = (1 + q) α_{n-1} - q (1 - q^{3n-3}) α_{n-2}`.
    #[default]
    AsPrinted,
    /// The same with `q -> q²` throughout.
    Dilated,
}

impl Recurrence {
    fn dilation(self) -> usize {
        match self {
            Recurrence::AsPrinted => 1,
            Recurrence::Dilated => 2,
        }
    }
}

/// `a_0, ..., a_count` (or `α_0, ...`) modulo `q^(order+1)`.
pub fn schur_polys(form: SchurForm, rec: Recurrence, count: usize, order: usize) -> Result<Vec<TruncatedSeries>> {
    let d = rec.dilation();
    let mut out = vec![TruncatedSeries::one(order)];
    for n in 1..=count {
        let prev = &out[n - 1];
        let mut next = prev + &prev.shift(d);
        if n >= 2 {
            let mut back = out[n - 2].shift(d);
            if form == SchurForm::Alpha {
                back.mul_binomial(Sign::Plus, 3 * d * (n - 1));
            }
            next = &next - &back;
        }
        if form == SchurForm::A {
            let degree = 3 * d * n;
            let mut divisor = TruncatedSeries::one(order);
            divisor.mul_binomial(Sign::Plus, degree);
            next = next
                .div(&divisor)
                .map_err(|_| Error::NonIntegralDivision { degree })?;
        }
        out.push(next);
    }
    Ok(out)
}

pub fn schur_series(form: SchurForm, order: usize) -> Result<BivariateSeries> {
    schur_series_with(form, Recurrence::AsPrinted, order)
}

pub fn schur_series_with(form: SchurForm, rec: Recurrence, order: usize) -> Result<BivariateSeries> {
    let exp = |n1: usize, n2: usize| 6 * n2 * n2 - n2 + 2 * n1 * n1 - n1 + 6 * n1 * n2;
    let mut max2 = 0;
    while exp(0, max2 + 1) <= order {
        max2 += 1;
    }
    let polys = schur_polys(form, rec, max2, order)?;
    let inv1 = inverse_pochhammers(1, order, order);
    let inv2 = inverse_pochhammers(3 * rec.dilation(), max2, order);
    let mut out = BivariateSeries::zero(order, order);
    for n2 in 0..=max2 {
        let mut n1 = 0;
        while exp(n1, n2) <= order {
            let mut term = polys[n2].mul_truncated(&inv1[n1], order);
            if form == SchurForm::Alpha {
                term = term.mul_truncated(&inv2[n2], order);
            }
            out.add_term(2 * n2 + n1, &term.shift(exp(n1, n2)));
            n1 += 1;
        }
    }
    Ok(out)
}

/// First `n <= count` whose polynomial has a negative coefficient below
/// `q^(order+1)`, with that exponent.
pub fn first_negative(form: SchurForm, rec: Recurrence, count: usize, order: usize) -> Result<Option<(usize, usize)>> {
    let polys = schur_polys(form, rec, count, order)?;
    Ok(polys.iter().enumerate().find_map(|(n, p)| {
        p.coeffs()
            .iter()
            .position(|c| c.sign() == num_bigint::Sign::Minus)
            .map(|e| (n, e))
    }))
}
