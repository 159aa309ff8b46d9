use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::partitions::{parse_params, ConstraintFamily};
use crate::qseries::{product_series, ProductSpec, Sign, TruncatedSeries};

/// The product sides of the identities.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ProductIdentity {
    /// `(-q², -q³, -q⁴, -q⁶; q⁶)_∞`
    Capparelli1,
    /// `(-q, -q³, -q⁵, -q⁶; q⁶)_∞`
    Capparelli2,
    /// `1 / (q, q⁴, q⁷; q⁸)_∞`
    Gg1,
    /// `1 / (q³, q⁴, q⁵; q⁸)_∞`
    Gg2,
    /// `∏ 1/(1 - q^n)` over `n ≢ 0, ±a (mod 2k+1)`
    Gordon { k: u32, a: u32 },
    /// `1 / (q; q²)_∞`
    Euler,
}

impl ProductIdentity {
    pub fn spec(self) -> Result<ProductSpec> {
        use ProductIdentity::*;
        Ok(match self {
            Capparelli1 => ProductSpec::new().numerator_list(Sign::Minus, &[2, 3, 4, 6], 6),
            Capparelli2 => ProductSpec::new().numerator_list(Sign::Minus, &[1, 3, 5, 6], 6),
            Gg1 => ProductSpec::new().denominator_list(Sign::Plus, &[1, 4, 7], 8),
            Gg2 => ProductSpec::new().denominator_list(Sign::Plus, &[3, 4, 5], 8),
            Gordon { k, a } => {
                ConstraintFamily::gordon(k, a)?;
                let m = 2 * k + 1;
                let offsets: Vec<usize> = (1..m)
                    .filter(|&r| r != a && r != m - a)
                    .map(|r| r as usize)
                    .collect();
                ProductSpec::new().denominator_list(Sign::Plus, &offsets, m as usize)
            }
            Euler => ProductSpec::new().denominator(Sign::Plus, 1, 2),
        })
    }

    /// The family whose partitions the product counts.
    pub fn family(self) -> ConstraintFamily {
        use ProductIdentity::*;
        match self {
            Capparelli1 => ConstraintFamily::Cp1,
            Capparelli2 => ConstraintFamily::Cp2,
            Gg1 => ConstraintFamily::Gg22,
            Gg2 => ConstraintFamily::Gg21,
            Gordon { k, a } => ConstraintFamily::Gordon { k, a },
            Euler => ConstraintFamily::EulerDistinct,
        }
    }
}

pub fn product_side(identity: ProductIdentity, order: usize) -> Result<TruncatedSeries> {
    product_series(&identity.spec()?, order)
}

impl fmt::Display for ProductIdentity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use ProductIdentity::*;
        match self {
            Capparelli1 => f.write_str("capparelli1"),
            Capparelli2 => f.write_str("capparelli2"),
            Gg1 => f.write_str("gg1"),
            Gg2 => f.write_str("gg2"),
            Gordon { k, a } => write!(f, "gordon({k},{a})"),
            Euler => f.write_str("euler"),
        }
    }
}

impl FromStr for ProductIdentity {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        use ProductIdentity::*;
        let t = s.trim().to_ascii_lowercase();
        Ok(match t.as_str() {
            "capparelli1" => Capparelli1,
            "capparelli2" => Capparelli2,
            "gg1" => Gg1,
            "gg2" => Gg2,
            "euler" => Euler,
            _ => match parse_params(&t, "gordon") {
                Some((k, a)) => {
                    ConstraintFamily::gordon(k, a)?;
                    Gordon { k, a }
                }
                None => return Err(Error::UnknownIdentity(s.to_string())),
            },
        })
    }
}

impl Serialize for ProductIdentity {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::count_table;
    use num_bigint::BigInt;

    #[test]
    fn capparelli1_coefficient_six() {
        let p = product_side(ProductIdentity::Capparelli1, 6).unwrap();
        assert_eq!(p[6], BigInt::from(2));
        assert_eq!(p[0], BigInt::from(1));
    }

    #[test]
    fn rogers_ramanujan_product() {
        let rr = ProductSpec::new()
            .denominator(Sign::Plus, 1, 5)
            .denominator(Sign::Plus, 4, 5);
        assert_eq!(
            product_side(ProductIdentity::Gordon { k: 2, a: 2 }, 30).unwrap(),
            product_series(&rr, 30).unwrap()
        );
    }

    #[test]
    fn products_count_their_families() {
        for id in [
            ProductIdentity::Capparelli1,
            ProductIdentity::Capparelli2,
            ProductIdentity::Gg1,
            ProductIdentity::Gg2,
            ProductIdentity::Gordon { k: 3, a: 2 },
            ProductIdentity::Euler,
        ] {
            assert_eq!(product_side(id, 25).unwrap(), count_table(id.family(), 25).totals_series(), "{id}");
        }
    }

    #[test]
    fn names() {
        for s in ["capparelli1", "capparelli2", "gg1", "gg2", "gordon(4,3)", "euler"] {
            assert_eq!(s.parse::<ProductIdentity>().unwrap().to_string(), s);
        }
        assert!("gordon(3,4)".parse::<ProductIdentity>().is_err());
        assert!("bogus".parse::<ProductIdentity>().is_err());
    }
}
