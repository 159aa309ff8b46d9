use serde::Serialize;

use crate::error::{Error, Result};
use crate::partitions::ConstraintFamily;
use crate::qseries::{BivariateSeries, Sign, TruncatedSeries};

/// `(a11 n1² + a12 n1 n2 + a22 n2² + b1 n1 + b2 n2) / divisor`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct QuadForm {
    pub a11: i64,
    pub a12: i64,
    pub a22: i64,
    pub b1: i64,
    pub b2: i64,
    pub divisor: i64,
}

impl QuadForm {
    pub const fn new(a11: i64, a12: i64, a22: i64, b1: i64, b2: i64, divisor: i64) -> Self {
        Self {
            a11,
            a12,
            a22,
            b1,
            b2,
            divisor,
        }
    }

    fn numerator(&self, n1: i64, n2: i64) -> i64 {
        self.a11 * n1 * n1 + self.a12 * n1 * n2 + self.a22 * n2 * n2 + self.b1 * n1 + self.b2 * n2
    }

    /// Exact value; `None` if the numerator is not divisible.
    pub fn eval(&self, n1: usize, n2: usize) -> Option<i64> {
        let v = self.numerator(n1 as i64, n2 as i64);
        (v % self.divisor == 0).then(|| v / self.divisor)
    }

    /// Positive definite with a non-negative cross term, so each variable
    /// can be bounded separately.
    pub fn check(&self) -> Result<()> {
        let disc = self.a12 * self.a12 - 4 * self.a11 * self.a22;
        if self.divisor <= 0 || self.a11 <= 0 || self.a22 <= 0 || disc >= 0 || self.a12 < 0 {
            return Err(Error::InvalidMultisum(format!("{self:?} is not positive definite")));
        }
        Ok(())
    }
}

/// `L(n1, n2) = c1 n1 + c2 n2 + c0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Linear {
    pub c1: i64,
    pub c2: i64,
    pub c0: i64,
}

impl Linear {
    pub fn eval(&self, n1: usize, n2: usize) -> i64 {
        self.c1 * n1 as i64 + self.c2 * n2 as i64 + self.c0
    }
}

/// `Σ q^{Q(n1,n2)} x^{n1 + 2 n2} (1 + x q^{L(n1,n2)}) / ((q;q)_{n1} (q^d;q^d)_{n2})`,
/// the anchor factor being optional.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct MultisumSpec {
    pub family: ConstraintFamily,
    pub exponent: QuadForm,
    /// Modulus `d` of the `n2` denominator.
    pub pair_modulus: usize,
    pub anchor: Option<Linear>,
}

impl MultisumSpec {
    pub fn for_family(family: ConstraintFamily) -> Result<Self> {
        use ConstraintFamily::*;
        let lin = |c1, c2, c0| Some(Linear { c1, c2, c0 });
        let (exponent, pair_modulus, anchor) = match family {
            Cp1 => (QuadForm::new(2, 6, 6, 0, 0, 1), 3, None),
            Cp2 => (QuadForm::new(2, 6, 6, 1, 3, 1), 3, lin(2, 3, 1)),
            Cp0 => (QuadForm::new(2, 6, 6, 0, 0, 1), 3, lin(3, 6, 1)),
            Cp1m1 => (QuadForm::new(2, 6, 6, -1, -2, 1), 3, None),
            Cp1m2 => (QuadForm::new(2, 6, 6, -1, -1, 1), 3, None),
            Gg22 => (QuadForm::new(3, 8, 8, -1, 0, 2), 4, None),
            Gg21 => (QuadForm::new(3, 8, 8, 3, 8, 2), 4, None),
            Ggo21 => (QuadForm::new(3, 8, 8, 3, 8, 2), 4, lin(2, 4, 2)),
            Gge22 => (QuadForm::new(3, 8, 8, 1, 4, 2), 4, lin(2, 4, 1)),
            f => return Err(Error::NoBijection(f)),
        };
        let spec = Self {
            family,
            exponent,
            pair_modulus,
            anchor,
        };
        spec.exponent.check()?;
        Ok(spec)
    }

    /// All `(n1, n2)` whose term can reach `q^order`.
    pub fn indices(&self, order: usize) -> Result<Vec<(usize, usize, usize)>> {
        let q = &self.exponent;
        q.check()?;
        let cap = order as i64 * q.divisor;
        // Q >= f1(n1) + f2(n2) because the cross term is non-negative
        let f1 = |n: i64| q.a11 * n * n + q.b1 * n;
        let f2 = |n: i64| q.a22 * n * n + q.b2 * n;
        let min1 = (0..=q.b1.unsigned_abs() as i64).map(f1).min().unwrap_or(0);
        let min2 = (0..=q.b2.unsigned_abs() as i64).map(f2).min().unwrap_or(0);
        let past = |a: i64, b: i64, n: i64| 2 * a * n + b > 0;
        let mut out = Vec::new();
        let mut n2 = 0i64;
        while !(past(q.a22, q.b2, n2) && f2(n2) + min1 > cap) {
            let mut n1 = 0i64;
            while !(past(q.a11, q.b1, n1) && f1(n1) + min2 > cap) {
                let v = q.numerator(n1, n2);
                if v <= cap {
                    let e = q.eval(n1 as usize, n2 as usize).ok_or_else(|| {
                        Error::InvalidMultisum(format!("exponent not integral at ({n1}, {n2})"))
                    })?;
                    if e < 0 {
                        return Err(Error::InvalidMultisum(format!("negative exponent at ({n1}, {n2})")));
                    }
                    out.push((n1 as usize, n2 as usize, e as usize));
                }
                n1 += 1;
            }
            n2 += 1;
        }
        Ok(out)
    }

    pub fn expand(&self, order: usize) -> Result<BivariateSeries> {
        let terms = self.indices(order)?;
        let max1 = terms.iter().map(|t| t.0).max().unwrap_or(0);
        let max2 = terms.iter().map(|t| t.1).max().unwrap_or(0);
        let inv1 = inverse_pochhammers(1, max1, order);
        let inv2 = inverse_pochhammers(self.pair_modulus, max2, order);
        let mut out = BivariateSeries::zero(order, order);
        for (n1, n2, e) in terms {
            let term = inv1[n1].mul_truncated(&inv2[n2], order).shift(e);
            let m = n1 + 2 * n2;
            out.add_term(m, &term);
            if let Some(l) = self.anchor {
                let shift = usize::try_from(l.eval(n1, n2))
                    .map_err(|_| Error::InvalidMultisum("negative anchor exponent".into()))?;
                out.add_term(m + 1, &term.shift(shift));
            }
        }
        Ok(out)
    }
}

/// `1/(q^d; q^d)_n` for `n = 0..=count`.
pub(crate) fn inverse_pochhammers(d: usize, count: usize, order: usize) -> Vec<TruncatedSeries> {
    let mut out = Vec::with_capacity(count + 1);
    let mut cur = TruncatedSeries::one(order);
    out.push(cur.clone());
    for n in 1..=count {
        cur.div_binomial(Sign::Plus, d * n);
        out.push(cur.clone());
    }
    out
}

/// The double-sum generating function of any of the nine bijective
/// families; `x` counts parts.
pub fn family_multisum(family: ConstraintFamily, order: usize) -> Result<BivariateSeries> {
    MultisumSpec::for_family(family)?.expand(order)
}

pub fn capparelli_family_multisum(family: ConstraintFamily, order: usize) -> Result<BivariateSeries> {
    match family.pair_rule() {
        Some(crate::partitions::PairRule::Capparelli { .. }) => family_multisum(family, order),
        _ => Err(Error::InvalidMultisum(format!("{family} is not a Capparelli family"))),
    }
}

pub fn gg_family_multisum(family: ConstraintFamily, order: usize) -> Result<BivariateSeries> {
    match family.pair_rule() {
        Some(crate::partitions::PairRule::GollnitzGordon { .. }) => family_multisum(family, order),
        _ => Err(Error::InvalidMultisum(format!("{family} is not a Göllnitz-Gordon family"))),
    }
}

/// `Σ q^{N_1² + ... + N_{k-1}² + N_a + ... + N_{k-1}} x^{N_1 + ... + N_{k-1}}
/// / ((q;q)_{n_1} ... (q;q)_{n_{k-1}})` with `N_r = n_r + ... + n_{k-1}`.
pub fn andrews_gordon_multisum(k: u32, a: u32, order: usize) -> Result<BivariateSeries> {
    ConstraintFamily::gordon(k, a)?;
    let inv = inverse_pochhammers(1, order, order);
    let mut out = BivariateSeries::zero(order, order);
    // big_n[r] holds N_{r+1}; fill from the innermost index outwards
    let mut big_n = vec![0usize; (k - 1) as usize];
    #[allow(clippy::too_many_arguments)]
    fn go(
        r: usize,
        a: usize,
        prev: usize,
        exp: usize,
        big_n: &mut Vec<usize>,
        inv: &[TruncatedSeries],
        order: usize,
        out: &mut BivariateSeries,
    ) {
        if r == 0 {
            let mut term = TruncatedSeries::one(order);
            for i in 0..big_n.len() {
                let next = big_n.get(i + 1).copied().unwrap_or(0);
                term = term.mul_truncated(&inv[big_n[i] - next], order);
            }
            out.add_term(big_n.iter().sum(), &term.shift(exp));
            return;
        }
        let mut n = prev;
        loop {
            let e = exp + n * n + if r >= a { n } else { 0 };
            if e > order {
                break;
            }
            big_n[r - 1] = n;
            go(r - 1, a, n, e, big_n, inv, order, out);
            n += 1;
        }
    }
    go((k - 1) as usize, a as usize, 0, 0, &mut big_n, &inv, order, &mut out);
    Ok(out)
}
