use serde::Serialize;

use super::multisum::inverse_pochhammers;
use crate::error::{Error, Result};
use crate::qseries::{
    pochhammer_finite, pochhammer_infinite, BivariateSeries, Sign, TruncatedSeries,
};

/// `which = 1`: `Σ q^{n²} (-q;q²)_n xⁿ / (q²;q²)_n`;
/// `which = 2`: `Σ q^{n²+2n} (-q;q²)_n xⁿ / (q²;q²)_n`.
pub fn classical_gg_series(which: u8, order: usize) -> Result<BivariateSeries> {
    let extra = match which {
        1 => 0,
        2 => 2,
        _ => return Err(Error::UnknownSeries(format!("classical Göllnitz-Gordon series {which}"))),
    };
    let mut out = BivariateSeries::zero(order, order);
    let mut n = 0;
    while n * n + extra * n <= order {
        let term = pochhammer_finite(Sign::Minus, 1, 2, n, order)
            .mul_truncated(&inverse_pochhammers(2, n, order)[n], order)
            .shift(n * n + extra * n);
        out.add_term(n, &term);
        n += 1;
    }
    Ok(out)
}

/// `(-q⁴;q⁶)_∞ (-q²;q⁶)_∞ Σ q^{6n²-3n} / (q³;q³)_{2n}`.
pub fn aag_capparelli_series(order: usize) -> TruncatedSeries {
    let inv = inverse_pochhammers(3, 2 * (order / 3 + 1), order);
    let mut sum = TruncatedSeries::zero(order);
    let mut n = 0;
    while 6 * n * n - 3 * n <= order {
        sum += &inv[2 * n].shift(6 * n * n - 3 * n);
        n += 1;
    }
    let front = pochhammer_infinite(Sign::Minus, 4, 6, order)
        .and_then(|a| Ok(&a * &pochhammer_infinite(Sign::Minus, 2, 6, order)?))
        .expect("offsets are positive");
    &front * &sum
}

/// The Legendre symbol `(x/3)`.
pub fn legendre3(x: i64) -> i64 {
    [0, 1, -1][x.rem_euclid(3) as usize]
}

/// `Σ_{n ≥ 0} Σ_{j=0}^{2n} q^{n²} ((n-j+1)/3) / ((q;q)_{2n-j} (q;q)_j)`.
pub fn sills_capparelli_series(order: usize) -> TruncatedSeries {
    let mut n = 0;
    while (n + 1) * (n + 1) <= order {
        n += 1;
    }
    let inv = inverse_pochhammers(1, 2 * n, order);
    let mut sum = TruncatedSeries::zero(order);
    for n in 0..=n {
        for j in 0..=2 * n {
            let sign = legendre3(n as i64 - j as i64 + 1);
            if sign == 0 {
                continue;
            }
            let term = inv[2 * n - j].mul_truncated(&inv[j], order).shift(n * n);
            sum += &term.scale(&sign.into());
        }
    }
    sum
}

/// The three forms of Euler's distinct/odd parts generating function.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum EulerForm {
    /// `Σ q^{(n²+n)/2} / (q;q)_n`
    DistinctSum,
    /// `(q²;q²)_∞ / (q;q)_∞`
    InclusionExclusion,
    /// `1 / (q;q²)_∞`
    OddProduct,
}

pub fn euler_series(form: EulerForm, order: usize) -> TruncatedSeries {
    let poch = |j, d| pochhammer_infinite(Sign::Plus, j, d, order).expect("offsets are positive");
    match form {
        EulerForm::DistinctSum => {
            let inv = inverse_pochhammers(1, order, order);
            let mut sum = TruncatedSeries::zero(order);
            let mut n = 0;
            while n * (n + 1) / 2 <= order {
                sum += &inv[n].shift(n * (n + 1) / 2);
                n += 1;
            }
            sum
        }
        EulerForm::InclusionExclusion => poch(2, 2).div(&poch(1, 1)).expect("unit constant term"),
        EulerForm::OddProduct => poch(1, 2).invert().expect("unit constant term"),
    }
}

/// `Σ q^{n²} xⁿ / (q;q)_n`.
pub fn rogers_ramanujan_series(order: usize) -> BivariateSeries {
    let inv = inverse_pochhammers(1, order, order);
    let mut out = BivariateSeries::zero(order, order);
    let mut n = 0;
    while n * n <= order {
        out.add_term(n, &inv[n].shift(n * n));
        n += 1;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::family_multisum;
    use crate::partitions::{count_table, ConstraintFamily};
    use num_bigint::BigInt;

    #[test]
    fn classical_gg_matches_multisum() {
        let gg1 = classical_gg_series(1, 30).unwrap().at_x_one();
        assert_eq!(gg1, family_multisum(ConstraintFamily::Gg22, 30).unwrap().at_x_one());
        let gg2 = classical_gg_series(2, 30).unwrap().at_x_one();
        assert_eq!(gg2[3], BigInt::from(1));
        assert_eq!(gg2[0], BigInt::from(1));
        assert_eq!(gg2, count_table(ConstraintFamily::Gg21, 30).totals_series());
        assert!(classical_gg_series(3, 5).is_err());
    }

    #[test]
    fn capparelli_cross_checks() {
        let cp1 = count_table(ConstraintFamily::Cp1, 30).totals_series();
        let aag = aag_capparelli_series(30);
        assert_eq!(aag[6], BigInt::from(2));
        assert_eq!(aag, cp1);
        let sills = sills_capparelli_series(30);
        assert_eq!(sills[0], BigInt::from(1));
        assert_eq!(sills, cp1);
    }

    #[test]
    fn legendre_values() {
        assert_eq!([0, 1, 2, -1, -2].map(legendre3), [0, 1, -1, -1, 1]);
    }

    #[test]
    fn euler_forms_agree() {
        let a = euler_series(EulerForm::DistinctSum, 30);
        assert_eq!(a, euler_series(EulerForm::InclusionExclusion, 30));
        assert_eq!(a, euler_series(EulerForm::OddProduct, 30));
        assert_eq!(a[4], BigInt::from(2));
    }

    #[test]
    fn rogers_ramanujan_coefficient_four() {
        assert_eq!(rogers_ramanujan_series(10).at_x_one()[4], BigInt::from(2));
    }
}
