//! Partitions, the constraint families, and brute-force enumeration.
//!
//! Enumeration here is the ground truth every generating function and every
//! bijection is checked against, so it is deliberately naive: a depth-first
//! walk over weakly increasing parts that prunes as soon as a family
//! condition fails.

mod family;

pub use family::{ConstraintFamily, PairRule};
pub(crate) use family::parse_params;

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::qseries::{BivariateSeries, TruncatedSeries};

/// Weakly increasing positive parts.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Partition(Vec<u32>);

impl Partition {
    /// Sorts the parts; rejects zeros.
    pub fn new(mut parts: Vec<u32>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::NonPositivePart);
        }
        parts.sort_unstable();
        Ok(Self(parts))
    }

    pub fn empty() -> Self {
        Self(Vec::new())
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn weight(&self) -> u64 {
        self.0.iter().map(|&p| u64::from(p)).sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn into_parts(self) -> Vec<u32> {
        self.0
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_list(f, &self.0)
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Partition::new(parse_list(s)?)
    }
}

/// Weakly increasing non-negative parts of a fixed length ("counting
/// zeros").
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize)]
pub struct PaddedPartition(Vec<u32>);

impl PaddedPartition {
    pub fn new(mut parts: Vec<u32>) -> Self {
        parts.sort_unstable();
        Self(parts)
    }

    pub fn zeros(len: usize) -> Self {
        Self(vec![0; len])
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn weight(&self) -> u64 {
        self.0.iter().map(|&p| u64::from(p)).sum()
    }
}

impl fmt::Display for PaddedPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_list(f, &self.0)
    }
}

impl FromStr for PaddedPartition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(PaddedPartition::new(parse_list(s)?))
    }
}

fn write_list(f: &mut fmt::Formatter<'_>, parts: &[u32]) -> fmt::Result {
    for (i, p) in parts.iter().enumerate() {
        if i > 0 {
            f.write_str(",")?;
        }
        write!(f, "{p}")?;
    }
    Ok(())
}

fn parse_list(s: &str) -> Result<Vec<u32>> {
    let s = s.trim();
    if s.is_empty() {
        return Ok(Vec::new());
    }
    s.split([',', '+'])
        .map(|t| {
            t.trim()
                .parse::<u32>()
                .map_err(|_| Error::Parse(format!("bad part `{}` in `{s}`", t.trim())))
        })
        .collect()
}

pub fn satisfies(family: ConstraintFamily, p: &Partition) -> bool {
    family.satisfies_parts(p.parts())
}

/// Depth-first walk over every family partition of weight `<= max_weight`.
/// The visitor sees each partition once (prefixes are partitions too) and
/// returns `false` to stop descending below it.
fn walk<F>(family: ConstraintFamily, max_weight: u64, visit: &mut F)
where
    F: FnMut(&[u32], u64) -> bool,
{
    fn go<F: FnMut(&[u32], u64) -> bool>(
        family: ConstraintFamily,
        max_weight: u64,
        parts: &mut Vec<u32>,
        weight: u64,
        visit: &mut F,
    ) {
        if !visit(parts, weight) {
            return;
        }
        let start = parts.last().copied().unwrap_or(1).max(1);
        let mut x = start;
        while weight + u64::from(x) <= max_weight {
            if family.admits_next(parts, x) {
                parts.push(x);
                go(family, max_weight, parts, weight + u64::from(x), visit);
                parts.pop();
            }
            x += 1;
        }
    }
    go(family, max_weight, &mut Vec::new(), 0, visit);
}

/// All family partitions of `n`, in lexicographic order of their parts.
pub fn enumerate(family: ConstraintFamily, n: u64) -> Vec<Partition> {
    let mut out = Vec::new();
    walk(family, n, &mut |parts, w| {
        if w == n {
            out.push(Partition(parts.to_vec()));
            return false;
        }
        // the next part is at least the last one, so it must still fit
        let last = u64::from(parts.last().copied().unwrap_or(1));
        n - w >= last
    });
    out
}

/// `counts[n][m]`: number of family partitions of `n` with `m` parts.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CountTable {
    family: ConstraintFamily,
    counts: Vec<Vec<u64>>,
}

impl CountTable {
    pub fn family(&self) -> ConstraintFamily {
        self.family
    }

    pub fn n_max(&self) -> usize {
        self.counts.len() - 1
    }

    pub fn get(&self, n: usize, m: usize) -> u64 {
        self.counts
            .get(n)
            .and_then(|row| row.get(m))
            .copied()
            .unwrap_or(0)
    }

    pub fn total(&self, n: usize) -> u64 {
        self.counts.get(n).map_or(0, |row| row.iter().sum())
    }

    /// Rows `(n, m, count)` with non-zero count, ordered by `n` then `m`.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, u64)> + '_ {
        self.counts.iter().enumerate().flat_map(|(n, row)| {
            row.iter()
                .enumerate()
                .filter(|(_, &c)| c != 0)
                .map(move |(m, &c)| (n, m, c))
        })
    }

    pub fn totals_series(&self) -> TruncatedSeries {
        TruncatedSeries::from_coeffs(self.n_max(), (0..=self.n_max()).map(|n| self.total(n)))
    }

    pub fn to_bivariate(&self) -> BivariateSeries {
        let n_max = self.n_max();
        let rows = (0..=n_max)
            .map(|m| TruncatedSeries::from_coeffs(n_max, (0..=n_max).map(|n| self.get(n, m))))
            .collect();
        BivariateSeries::from_rows(rows)
    }
}

pub fn count_table(family: ConstraintFamily, n_max: usize) -> CountTable {
    let mut counts: Vec<Vec<u64>> = (0..=n_max).map(|n| vec![0; n + 1]).collect();
    walk(family, n_max as u64, &mut |parts, w| {
        counts[w as usize][parts.len()] += 1;
        true
    });
    CountTable { family, counts }
}

/// First `(n, m)` at which `c_left[n + shift*m][m] != c_right[n][m]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ShiftMismatch {
    pub n: usize,
    pub m: usize,
    pub left: u64,
    pub right: u64,
}

/// Compares `c_left[n + shift*m][m]` with `c_right[n][m]` for every
/// `n <= n_max` and `m <= n_max`.
pub fn shift_mismatch(
    left: ConstraintFamily,
    right: ConstraintFamily,
    shift: u32,
    n_max: usize,
) -> Result<Option<ShiftMismatch>> {
    if !(1..=2).contains(&shift) {
        return Err(Error::InvalidShift(shift));
    }
    let s = u64::from(shift);
    let cap = n_max as u64;
    // left[w][m] only matters where w - s*m lands in 0..=n_max
    let mut reduced = vec![vec![0u64; n_max + 1]; n_max + 1];
    walk(left, cap + s * cap, &mut |parts, w| {
        let m = parts.len() as u64;
        if m > cap {
            return false;
        }
        if w >= s * m && w - s * m <= cap {
            reduced[(w - s * m) as usize][m as usize] += 1;
        }
        // once parts are >= s, adding one never lowers w - s*m
        let last = u64::from(parts.last().copied().unwrap_or(0));
        !(last >= s && w > s * m + cap)
    });
    let right = count_table(right, n_max);
    for (n, row) in reduced.iter().enumerate() {
        for (m, &l) in row.iter().enumerate() {
            let r = right.get(n, m);
            if l != r {
                return Ok(Some(ShiftMismatch { n, m, left: l, right: r }));
            }
        }
    }
    Ok(None)
}

pub fn shift_check(
    left: ConstraintFamily,
    right: ConstraintFamily,
    shift: u32,
    n_max: usize,
) -> Result<bool> {
    Ok(shift_mismatch(left, right, shift, n_max)?.is_none())
}
