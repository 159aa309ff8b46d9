use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::error::Error;

/// The partition classes studied here, each defined by difference and
/// smallest-part conditions on weakly increasing parts.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ConstraintFamily {
    /// Parts ≥ 2, gaps ≥ 2, gaps ≥ 4 unless adjacent parts sum to 0 mod 3.
    Cp1,
    /// As `Cp1` but parts ≥ 1 and no part equal to 2.
    Cp2,
    /// As `Cp1` without any smallest-part condition.
    Cp0,
    /// Gaps ≥ 2, gaps ≥ 4 unless adjacent parts sum to 1 mod 3.
    Cp1m1,
    /// Gaps ≥ 2, gaps ≥ 4 unless adjacent parts sum to 2 mod 3.
    Cp1m2,
    /// Gaps ≥ 2, gaps ≥ 3 unless both parts are odd.
    Gg22,
    /// `Gg22` with smallest part ≥ 3.
    Gg21,
    /// `Gg22` with smallest part ≥ 2.
    Ggo21,
    /// Gaps ≥ 2, gaps ≥ 3 unless both parts are even.
    Gge22,
    /// Gaps ≥ 3 and no two adjacent multiples of 3 differing by 3.
    Schur,
    /// At most `a - 1` ones and `λ_{i+k-1} - λ_i ≥ 2`.
    Gordon { k: u32, a: u32 },
    EulerDistinct,
    EulerOdd,
    /// Distinct, non-consecutive parts.
    Rr1,
}

/// Which move engine a bijective family runs on.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PairRule {
    /// Pairs at distance 2 or 3 summing to `residue` mod 3; moves add 3.
    Capparelli { residue: u32 },
    /// Pairs at distance 2 with both parts of the given parity; moves add 4.
    GollnitzGordon { parity: u32 },
}

impl PairRule {
    pub fn step(self) -> u32 {
        match self {
            PairRule::Capparelli { .. } => 3,
            PairRule::GollnitzGordon { .. } => 4,
        }
    }

    /// Whether adjacent parts `a <= b` may form a pair.
    pub fn pairable(self, a: u32, b: u32) -> bool {
        match self {
            PairRule::Capparelli { residue } => {
                matches!(b - a, 2 | 3) && (a + b) % 3 == residue
            }
            PairRule::GollnitzGordon { parity } => b - a == 2 && a % 2 == parity,
        }
    }
}

impl ConstraintFamily {
    pub const BIJECTIVE: [ConstraintFamily; 9] = [
        ConstraintFamily::Cp1,
        ConstraintFamily::Cp2,
        ConstraintFamily::Cp0,
        ConstraintFamily::Cp1m1,
        ConstraintFamily::Cp1m2,
        ConstraintFamily::Gg22,
        ConstraintFamily::Gg21,
        ConstraintFamily::Ggo21,
        ConstraintFamily::Gge22,
    ];

    pub fn gordon(k: u32, a: u32) -> Result<Self, Error> {
        if k < 2 || a < 1 || a > k {
            return Err(Error::InvalidGordonParams { k, a });
        }
        Ok(ConstraintFamily::Gordon { k, a })
    }

    pub fn pair_rule(self) -> Option<PairRule> {
        use ConstraintFamily::*;
        match self {
            Cp1 | Cp2 | Cp0 => Some(PairRule::Capparelli { residue: 0 }),
            Cp1m1 => Some(PairRule::Capparelli { residue: 1 }),
            Cp1m2 => Some(PairRule::Capparelli { residue: 2 }),
            Gg22 | Gg21 | Ggo21 => Some(PairRule::GollnitzGordon { parity: 1 }),
            Gge22 => Some(PairRule::GollnitzGordon { parity: 0 }),
            _ => None,
        }
    }

    /// The immovable smallest part of the anchored base partition, if the
    /// family has one.
    pub fn anchor_part(self) -> Option<u32> {
        use ConstraintFamily::*;
        match self {
            Cp2 | Cp0 | Gge22 => Some(1),
            Ggo21 => Some(2),
            _ => None,
        }
    }

    fn min_part(self) -> u32 {
        use ConstraintFamily::*;
        match self {
            Cp1 | Ggo21 => 2,
            Gg21 => 3,
            _ => 1,
        }
    }

    fn adjacent_ok(self, a: u32, b: u32) -> bool {
        use ConstraintFamily::*;
        let d = b - a;
        let capparelli = |r: u32| d >= 4 || (d >= 2 && (a + b) % 3 == r);
        match self {
            Cp1 | Cp2 | Cp0 => capparelli(0),
            Cp1m1 => capparelli(1),
            Cp1m2 => capparelli(2),
            Gg22 | Gg21 | Ggo21 => d >= 3 || (d == 2 && a % 2 == 1),
            Gge22 => d >= 3 || (d == 2 && a.is_multiple_of(2)),
            Schur => d > 3 || (d == 3 && !a.is_multiple_of(3)),
            EulerDistinct => d >= 1,
            Rr1 => d >= 2,
            EulerOdd | Gordon { .. } => true,
        }
    }

    /// Whether `next` may follow `prefix` (which already satisfies the
    /// family). Every family condition is local, so checking each extension
    /// decides membership.
    pub fn admits_next(self, prefix: &[u32], next: u32) -> bool {
        if next < self.min_part() {
            return false;
        }
        if let Some(&last) = prefix.last() {
            if next < last || !self.adjacent_ok(last, next) {
                return false;
            }
        }
        match self {
            ConstraintFamily::Cp2 => next != 2,
            ConstraintFamily::EulerOdd => next % 2 == 1,
            ConstraintFamily::Gordon { k, a } => {
                if next == 1 && prefix.iter().filter(|&&p| p == 1).count() + 1 > (a - 1) as usize {
                    return false;
                }
                let span = (k - 1) as usize;
                prefix.len() < span || next - prefix[prefix.len() - span] >= 2
            }
            _ => true,
        }
    }

    pub fn satisfies_parts(self, parts: &[u32]) -> bool {
        (0..parts.len()).all(|i| self.admits_next(&parts[..i], parts[i]))
    }
}

impl fmt::Display for ConstraintFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use ConstraintFamily::*;
        match self {
            Cp1 => f.write_str("cp1"),
            Cp2 => f.write_str("cp2"),
            Cp0 => f.write_str("cp0"),
            Cp1m1 => f.write_str("cp1m1"),
            Cp1m2 => f.write_str("cp1m2"),
            Gg22 => f.write_str("gg22"),
            Gg21 => f.write_str("gg21"),
            Ggo21 => f.write_str("ggo21"),
            Gge22 => f.write_str("gge22"),
            Schur => f.write_str("schur"),
            Gordon { k, a } => write!(f, "gordon({k},{a})"),
            EulerDistinct => f.write_str("euler_distinct"),
            EulerOdd => f.write_str("euler_odd"),
            Rr1 => f.write_str("rr1"),
        }
    }
}

/// Parses `gordon(k,a)` style parameter lists.
pub(crate) fn parse_params(s: &str, name: &str) -> Option<(u32, u32)> {
    let inner = s.strip_prefix(name)?.strip_prefix('(')?.strip_suffix(')')?;
    let (k, a) = inner.split_once(',')?;
    Some((k.trim().parse().ok()?, a.trim().parse().ok()?))
}

impl FromStr for ConstraintFamily {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        use ConstraintFamily::*;
        let t = s.trim().to_ascii_lowercase();
        Ok(match t.as_str() {
            "cp1" => Cp1,
            "cp2" => Cp2,
            "cp0" => Cp0,
            "cp1m1" | "cp1-1" => Cp1m1,
            "cp1m2" | "cp1-2" => Cp1m2,
            "gg22" => Gg22,
            "gg21" => Gg21,
            "ggo21" => Ggo21,
            "gge22" => Gge22,
            "schur" => Schur,
            "euler_distinct" | "euler-distinct" => EulerDistinct,
            "euler_odd" | "euler-odd" => EulerOdd,
            "rr1" => Rr1,
            _ => match parse_params(&t, "gordon") {
                Some((k, a)) => ConstraintFamily::gordon(k, a)?,
                None => return Err(Error::UnknownFamily(s.to_string())),
            },
        })
    }
}

impl Serialize for ConstraintFamily {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}
