//! Every series and product side: double sums for the bijective families,
//! the Andrews-Gordon multisum, cross-check series and the Schur sums.

mod classical;
mod multisum;
mod products;
mod schur;

pub use classical::{
    aag_capparelli_series, classical_gg_series, euler_series, legendre3, rogers_ramanujan_series,
    sills_capparelli_series, EulerForm,
};
pub use multisum::{
    andrews_gordon_multisum, capparelli_family_multisum, family_multisum, gg_family_multisum, Linear,
    MultisumSpec, QuadForm,
};
pub use products::{product_side, ProductIdentity};
pub use schur::{first_negative, schur_polys, schur_series, schur_series_with, Recurrence, SchurForm};

use crate::error::{Error, Result};
use crate::partitions::{parse_params, ConstraintFamily};
use crate::qseries::{BivariateSeries, TruncatedSeries};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expansion {
    Univariate(TruncatedSeries),
    Bivariate(BivariateSeries),
}

impl Expansion {
    pub fn at_x_one(&self) -> TruncatedSeries {
        match self {
            Expansion::Univariate(s) => s.clone(),
            Expansion::Bivariate(b) => b.at_x_one(),
        }
    }
}

/// Names accepted by [`expand_named`].
pub const SERIES_NAMES: &[&str] = &[
    "<family>          double sum of a bijective family (cp1, ..., gge22)",
    "ag(k,a)           Andrews-Gordon multisum",
    "product:<id>      capparelli1, capparelli2, gg1, gg2, gordon(k,a), euler",
    "gg-classical1     classical Göllnitz-Gordon single sums",
    "gg-classical2",
    "aag               Alladi-Andrews-Gordon form of the first Capparelli sum",
    "sills             Sills' Legendre symbol double sum",
    "schur-a           Schur double sums as printed",
    "schur-alpha",
    "schur-a-dilated   the same with q -> q² in the recurrence",
    "schur-alpha-dilated",
    "euler-distinct    Euler's three forms",
    "euler-incl-excl",
    "euler-odd",
    "rr                first Rogers-Ramanujan sum",
];

pub fn expand_named(name: &str, order: usize) -> Result<Expansion> {
    use Expansion::*;
    let t = name.trim().to_ascii_lowercase();
    if let Some(id) = t.strip_prefix("product:") {
        return Ok(Univariate(product_side(id.parse()?, order)?));
    }
    if let Some((k, a)) = parse_params(&t, "ag") {
        return Ok(Bivariate(andrews_gordon_multisum(k, a, order)?));
    }
    Ok(match t.as_str() {
        "gg-classical1" => Bivariate(classical_gg_series(1, order)?),
        "gg-classical2" => Bivariate(classical_gg_series(2, order)?),
        "aag" => Univariate(aag_capparelli_series(order)),
        "sills" => Univariate(sills_capparelli_series(order)),
        "schur-a" => Bivariate(schur_series(SchurForm::A, order)?),
        "schur-alpha" => Bivariate(schur_series(SchurForm::Alpha, order)?),
        "schur-a-dilated" => Bivariate(schur_series_with(SchurForm::A, Recurrence::Dilated, order)?),
        "schur-alpha-dilated" => Bivariate(schur_series_with(SchurForm::Alpha, Recurrence::Dilated, order)?),
        "euler-distinct" => Univariate(euler_series(EulerForm::DistinctSum, order)),
        "euler-incl-excl" => Univariate(euler_series(EulerForm::InclusionExclusion, order)),
        "euler-odd" => Univariate(euler_series(EulerForm::OddProduct, order)),
        "rr" => Bivariate(rogers_ramanujan_series(order)),
        _ => match t.parse::<ConstraintFamily>() {
            Ok(f) if f.pair_rule().is_some() => Bivariate(family_multisum(f, order)?),
            _ => return Err(Error::UnknownSeries(name.to_string())),
        },
    })
}
