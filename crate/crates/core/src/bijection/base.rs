use serde::Serialize;

use super::paired::{Direction, Item, PairedPartition};
use crate::error::{Error, Result};
use crate::partitions::ConstraintFamily;

/// Selects between the two base partitions of families that have an
/// anchored one.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize)]
pub enum BaseVariant {
    #[default]
    Plain,
    Anchored,
}

/// `(first pair low end, pair gap, pair period, first singleton offset,
/// singleton spacing)`: pair `j` (from 1) is `[p + t(j-1), p + g + t(j-1)]`
/// and singleton `i` (from 0) is `t n2 + s + d i`.
fn layout(family: ConstraintFamily, variant: BaseVariant) -> Result<(u32, u32, u32, u32, u32)> {
    use BaseVariant::*;
    use ConstraintFamily::*;
    Ok(match (family, variant) {
        (Cp1 | Cp0, Plain) => (2, 2, 6, 2, 4),
        (Cp2 | Cp0, Anchored) => (5, 2, 6, 5, 4),
        (Cp2, Plain) => (3, 3, 6, 3, 4),
        (Cp1m1, Plain) => (1, 2, 6, 1, 4),
        (Cp1m2, Plain) => (1, 3, 6, 1, 4),
        (Gg22, Plain) => (1, 2, 4, 1, 3),
        (Gg21 | Ggo21, Plain) => (3, 2, 4, 3, 3),
        (Ggo21, Anchored) => (5, 2, 4, 5, 3),
        (Gge22, Plain) => (2, 2, 4, 2, 3),
        (Gge22, Anchored) => (4, 2, 4, 4, 3),
        (f, Anchored) if f.pair_rule().is_some() => return Err(Error::InvalidVariant(f)),
        (f, _) => return Err(Error::NoBijection(f)),
    })
}

/// Lowest-weight partition of the family with `n2` pairs and `n1` movable
/// singletons, split for backward moves.
pub fn base_partition(
    family: ConstraintFamily,
    n1: usize,
    n2: usize,
    variant: BaseVariant,
) -> Result<PairedPartition> {
    let (p, g, t, s, d) = layout(family, variant)?;
    let (n1, n2) = (n1 as u32, n2 as u32);
    let pairs = (0..n2).map(|j| Item::Pair(p + t * j, p + g + t * j));
    let singles = (0..n1).map(|i| Item::Singleton(t * n2 + s + d * i));
    Ok(PairedPartition {
        anchor: match variant {
            BaseVariant::Plain => None,
            BaseVariant::Anchored => family.anchor_part(),
        },
        items: pairs.chain(singles).collect(),
        family,
        direction: Direction::Backward,
    })
}
