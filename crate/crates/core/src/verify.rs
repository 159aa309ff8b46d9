//! Side-by-side comparison of enumeration, double sums, products and
//! cross-check series for a named identity.

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::generators::{
    aag_capparelli_series, andrews_gordon_multisum, classical_gg_series, euler_series, family_multisum,
    product_side, rogers_ramanujan_series, schur_series, sills_capparelli_series, EulerForm, ProductIdentity,
    SchurForm,
};
use crate::partitions::{count_table, shift_mismatch, ConstraintFamily};
use crate::qseries::{BivariateSeries, TruncatedSeries};

/// Something that can be checked with `verify`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Identity {
    /// Enumeration, sum side(s) and product agree.
    Product(ProductIdentity),
    /// Enumeration and the bivariate double sum of a bijective family agree.
    Family(ConstraintFamily),
    /// Enumeration against both Schur double sums.
    Schur,
    /// The three count shift relations, read as `c_left(n + s m, m) = c_right(n, m)`.
    Shifts,
}

impl Identity {
    /// One entry per identity that `verify` knows, with Gordon parameters
    /// up to `k = 4`.
    pub fn catalogue() -> Vec<Identity> {
        use ProductIdentity::*;
        let mut out: Vec<Identity> = [Capparelli1, Capparelli2, Gg1, Gg2, Euler]
            .into_iter()
            .map(Identity::Product)
            .collect();
        for k in 2..=4 {
            for a in 1..=k {
                out.push(Identity::Product(Gordon { k, a }));
            }
        }
        out.extend(ConstraintFamily::BIJECTIVE.map(Identity::Family));
        out.push(Identity::Schur);
        out.push(Identity::Shifts);
        out
    }
}

impl fmt::Display for Identity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Identity::Product(p) => write!(f, "{p}"),
            Identity::Family(c) => write!(f, "{c}"),
            Identity::Schur => f.write_str("schur"),
            Identity::Shifts => f.write_str("shifts"),
        }
    }
}

impl FromStr for Identity {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim().to_ascii_lowercase();
        match t.as_str() {
            "schur" => return Ok(Identity::Schur),
            "shifts" => return Ok(Identity::Shifts),
            "rr" | "rr1" => return Ok(Identity::Product(ProductIdentity::Gordon { k: 2, a: 2 })),
            _ => {}
        }
        if let Ok(p) = t.parse::<ProductIdentity>() {
            return Ok(Identity::Product(p));
        }
        match t.parse::<ConstraintFamily>() {
            Ok(f) if f.pair_rule().is_some() => Ok(Identity::Family(f)),
            _ => Err(Error::UnknownIdentity(s.to_string())),
        }
    }
}

impl Serialize for Identity {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// An exact coefficient; serialized as a number when it fits in 128 bits.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Coefficient(pub BigInt);

impl Serialize for Coefficient {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        match self.0.to_i128() {
            Some(v) => serializer.serialize_i128(v),
            None => serializer.collect_str(&self.0),
        }
    }
}

impl fmt::Display for Coefficient {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Mismatch {
    pub n: usize,
    /// Part count, for bivariate comparisons.
    pub m: Option<usize>,
    pub left: Coefficient,
    pub right: Coefficient,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Comparison {
    pub left: String,
    pub right: String,
    pub bivariate: bool,
    pub compared: usize,
    pub status: Status,
    pub first_mismatch: Option<Mismatch>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SideTiming {
    pub side: String,
    pub millis: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct VerificationReport {
    pub identity: Identity,
    pub max_n: usize,
    pub status: Status,
    pub comparisons: Vec<Comparison>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timings: Option<Vec<SideTiming>>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    pub fn first_failure(&self) -> Option<&Comparison> {
        self.comparisons.iter().find(|c| c.status == Status::Fail)
    }
}

pub fn compare_series(left: (&str, &TruncatedSeries), right: (&str, &TruncatedSeries)) -> Comparison {
    let n = left.1.order().min(right.1.order());
    let first_mismatch = (0..=n).find(|&i| left.1[i] != right.1[i]).map(|i| Mismatch {
        n: i,
        m: None,
        left: Coefficient(left.1[i].clone()),
        right: Coefficient(right.1[i].clone()),
    });
    Comparison {
        left: left.0.to_string(),
        right: right.0.to_string(),
        bivariate: false,
        compared: n + 1,
        status: if first_mismatch.is_none() { Status::Pass } else { Status::Fail },
        first_mismatch,
    }
}

/// Compares every `(n, m)` with `n, m <= order`, ordered by `n` then `m`.
pub fn compare_bivariate(left: (&str, &BivariateSeries), right: (&str, &BivariateSeries)) -> Comparison {
    let n_max = left.1.order().min(right.1.order());
    let mut first_mismatch = None;
    'outer: for n in 0..=n_max {
        for m in 0..=n_max {
            let (l, r) = (left.1.coefficient(n, m), right.1.coefficient(n, m));
            if l != r {
                first_mismatch = Some(Mismatch {
                    n,
                    m: Some(m),
                    left: Coefficient(l),
                    right: Coefficient(r),
                });
                break 'outer;
            }
        }
    }
    Comparison {
        left: left.0.to_string(),
        right: right.0.to_string(),
        bivariate: true,
        compared: (n_max + 1) * (n_max + 1),
        status: if first_mismatch.is_none() { Status::Pass } else { Status::Fail },
        first_mismatch,
    }
}

struct Clock {
    enabled: bool,
    timings: Vec<SideTiming>,
}

impl Clock {
    fn time<T>(&mut self, side: &str, f: impl FnOnce() -> Result<T>) -> Result<T> {
        let start = Instant::now();
        let out = f()?;
        if self.enabled {
            self.timings.push(SideTiming {
                side: side.to_string(),
                millis: start.elapsed().as_secs_f64() * 1e3,
            });
        }
        Ok(out)
    }
}

/// Computes every side of `identity` up to `q^max_n` and compares them
/// exactly. Wall times are recorded only when `timings` is set, so the
/// default report is deterministic.
pub fn verify(identity: Identity, max_n: usize, timings: bool) -> Result<VerificationReport> {
    let mut clock = Clock {
        enabled: timings,
        timings: Vec::new(),
    };
    let mut comparisons = Vec::new();
    match identity {
        Identity::Product(id) => {
            let table = clock.time("oracle", || Ok(count_table(id.family(), max_n)))?;
            let oracle = table.totals_series();
            let product = clock.time("product", || product_side(id, max_n))?;
            comparisons.push(compare_series(("oracle", &oracle), ("product", &product)));
            let multisum = match id {
                ProductIdentity::Capparelli1 => Some(ConstraintFamily::Cp1),
                ProductIdentity::Capparelli2 => Some(ConstraintFamily::Cp2),
                ProductIdentity::Gg1 => Some(ConstraintFamily::Gg22),
                ProductIdentity::Gg2 => Some(ConstraintFamily::Gg21),
                ProductIdentity::Gordon { .. } | ProductIdentity::Euler => None,
            };
            let multisum = match (multisum, id) {
                (Some(f), _) => Some(clock.time("multisum", || family_multisum(f, max_n))?),
                (None, ProductIdentity::Gordon { k, a }) => {
                    Some(clock.time("multisum", || andrews_gordon_multisum(k, a, max_n))?)
                }
                _ => None,
            };
            if let Some(ms) = multisum {
                comparisons.push(compare_series(("multisum", &ms.at_x_one()), ("product", &product)));
                comparisons.push(compare_bivariate(("oracle", &table.to_bivariate()), ("multisum", &ms)));
            }
            let mut cross: Vec<(&str, TruncatedSeries)> = Vec::new();
            match id {
                ProductIdentity::Capparelli1 => {
                    cross.push(("aag", clock.time("aag", || Ok(aag_capparelli_series(max_n)))?));
                    cross.push(("sills", clock.time("sills", || Ok(sills_capparelli_series(max_n)))?));
                }
                ProductIdentity::Gg1 | ProductIdentity::Gg2 => {
                    let which = if id == ProductIdentity::Gg1 { 1 } else { 2 };
                    let s = clock.time("classical", || classical_gg_series(which, max_n))?;
                    cross.push(("classical", s.at_x_one()));
                }
                ProductIdentity::Gordon { k: 2, a: 2 } => {
                    cross.push(("rr", clock.time("rr", || Ok(rogers_ramanujan_series(max_n)))?.at_x_one()));
                }
                ProductIdentity::Euler => {
                    for (name, form) in [
                        ("euler-distinct", EulerForm::DistinctSum),
                        ("euler-incl-excl", EulerForm::InclusionExclusion),
                        ("euler-odd", EulerForm::OddProduct),
                    ] {
                        cross.push((name, clock.time(name, || Ok(euler_series(form, max_n)))?));
                    }
                }
                _ => {}
            }
            for (name, s) in &cross {
                comparisons.push(compare_series(("oracle", &oracle), (name, s)));
            }
        }
        Identity::Family(f) => {
            let table = clock.time("oracle", || Ok(count_table(f, max_n)))?;
            let ms = clock.time("multisum", || family_multisum(f, max_n))?;
            comparisons.push(compare_bivariate(("oracle", &table.to_bivariate()), ("multisum", &ms)));
        }
        Identity::Schur => {
            let table = clock.time("oracle", || Ok(count_table(ConstraintFamily::Schur, max_n)))?;
            let oracle = table.to_bivariate();
            for (name, form) in [("schur-a", SchurForm::A), ("schur-alpha", SchurForm::Alpha)] {
                let s = clock.time(name, || schur_series(form, max_n))?;
                comparisons.push(compare_bivariate(("oracle", &oracle), (name, &s)));
            }
        }
        Identity::Shifts => {
            use ConstraintFamily::*;
            for (left, right, shift) in [(Cp1m1, Cp1, 1), (Gg22, Gg21, 2), (Gge22, Ggo21, 1)] {
                let coef = if shift == 1 { String::new() } else { shift.to_string() };
                let side = format!("{left}(n+{coef}m,m)");
                let bad = clock.time(&side, || shift_mismatch(left, right, shift, max_n))?;
                comparisons.push(Comparison {
                    left: side,
                    right: format!("{right}(n,m)"),
                    bivariate: true,
                    compared: (max_n + 1) * (max_n + 1),
                    status: if bad.is_none() { Status::Pass } else { Status::Fail },
                    first_mismatch: bad.map(|b| Mismatch {
                        n: b.n,
                        m: Some(b.m),
                        left: Coefficient(b.left.into()),
                        right: Coefficient(b.right.into()),
                    }),
                });
            }
        }
    }
    let status = if comparisons.iter().all(|c| c.status == Status::Pass) {
        Status::Pass
    } else {
        Status::Fail
    };
    Ok(VerificationReport {
        identity,
        max_n,
        status,
        comparisons,
        timings: timings.then_some(clock.timings),
    })
}
