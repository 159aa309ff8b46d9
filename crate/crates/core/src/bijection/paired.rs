use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::partitions::{ConstraintFamily, PairRule, Partition};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Item {
    Pair(u32, u32),
    Singleton(u32),
}

impl Item {
    pub fn parts(self) -> impl Iterator<Item = u32> {
        let (a, b) = match self {
            Item::Pair(a, b) => (a, Some(b)),
            Item::Singleton(a) => (a, None),
        };
        std::iter::once(a).chain(b)
    }

    pub fn low(self) -> u32 {
        match self {
            Item::Pair(a, _) | Item::Singleton(a) => a,
        }
    }

    pub fn high(self) -> u32 {
        match self {
            Item::Pair(_, b) | Item::Singleton(b) => b,
        }
    }

    pub fn is_pair(self) -> bool {
        matches!(self, Item::Pair(..))
    }
}

impl fmt::Display for Item {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Item::Pair(a, b) => write!(f, "[{a},{b}]"),
            Item::Singleton(a) => write!(f, "{a}"),
        }
    }
}

/// Which way a streak of pairable parts is split.
///
/// An odd chain of pairable parts leaves one part unpaired: the smallest
/// when moving forward, the largest when moving backward.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Direction {
    Forward,
    Backward,
}

impl fmt::Display for Direction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Direction::Forward => "forward",
            Direction::Backward => "backward",
        })
    }
}

/// A partition split into pairs and singletons, plus the immovable anchor
/// part of anchored variants.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct PairedPartition {
    pub anchor: Option<u32>,
    pub items: Vec<Item>,
    pub family: ConstraintFamily,
    pub direction: Direction,
}

impl PairedPartition {
    /// Parts excluding the anchor, ascending.
    pub fn movable_parts(&self) -> Vec<u32> {
        self.items.iter().flat_map(|it| it.parts()).collect()
    }

    pub fn to_partition(&self) -> Partition {
        let parts = self.anchor.into_iter().chain(self.movable_parts()).collect();
        Partition::new(parts).expect("paired partitions hold positive parts")
    }

    pub fn weight(&self) -> u64 {
        self.to_partition().weight()
    }

    pub fn pair_count(&self) -> usize {
        self.items.iter().filter(|it| it.is_pair()).count()
    }

    pub fn singleton_count(&self) -> usize {
        self.items.len() - self.pair_count()
    }

    pub fn pairs(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        self.items.iter().filter_map(|it| match *it {
            Item::Pair(a, b) => Some((a, b)),
            Item::Singleton(_) => None,
        })
    }

    pub fn singletons(&self) -> impl Iterator<Item = u32> + '_ {
        self.items.iter().filter_map(|it| match *it {
            Item::Singleton(a) => Some(a),
            Item::Pair(..) => None,
        })
    }

    /// Position in `items` of the `index`-th pair (ascending).
    pub fn pair_position(&self, index: usize) -> Result<usize> {
        self.items
            .iter()
            .enumerate()
            .filter(|(_, it)| it.is_pair())
            .nth(index)
            .map(|(k, _)| k)
            .ok_or(Error::PairIndexOutOfRange {
                index,
                pairs: self.pair_count(),
            })
    }

    /// Same parts, pairing recomputed for `direction`.
    pub fn regrouped(&self, direction: Direction) -> Self {
        let rule = self.family.pair_rule().expect("paired partitions have a pair rule");
        Self {
            anchor: self.anchor,
            items: pair_up(rule, &self.movable_parts(), direction),
            family: self.family,
            direction,
        }
    }

    /// Renders with `*` in front of item `focus`.
    pub fn render(&self, focus: Option<usize>) -> String {
        let mut out = String::new();
        if let Some(a) = self.anchor {
            out.push_str(&format!("!{a}"));
        }
        for (k, it) in self.items.iter().enumerate() {
            if !out.is_empty() {
                out.push(',');
            }
            if focus == Some(k) {
                out.push('*');
            }
            out.push_str(&it.to_string());
        }
        out
    }

    /// Parses the bracketed text form and checks that the bracketing is the
    /// canonical one for `direction`. A bare list of parts is accepted and
    /// paired automatically.
    pub fn parse(s: &str, family: ConstraintFamily, direction: Direction) -> Result<Self> {
        let (anchor, items) = parse_items(s)?;
        let bracketed = items.iter().any(|it| it.is_pair()) || anchor.is_some();
        let parts: Vec<u32> = anchor
            .into_iter()
            .chain(items.iter().flat_map(|it| it.parts()))
            .collect();
        if parts.windows(2).any(|w| w[0] > w[1]) {
            return Err(Error::Parse(format!("parts of `{s}` are not ascending")));
        }
        let pp = decompose(family, &Partition::new(parts)?, direction)?;
        if bracketed && (pp.anchor != anchor || pp.items != items) {
            return Err(Error::Parse(format!(
                "`{s}` is not the {direction} pairing of its parts, expected `{pp}`"
            )));
        }
        Ok(pp)
    }
}

impl fmt::Display for PairedPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(None))
    }
}

/// Splits `s` into an optional `!anchor` and bracketed items, without any
/// family checks.
pub fn parse_items(s: &str) -> Result<(Option<u32>, Vec<Item>)> {
    let bad = |why: &str| Error::Parse(format!("{why} in `{s}`"));
    let num = |t: &str| t.trim().parse::<u32>().map_err(|_| bad(&format!("bad number `{}`", t.trim())));
    let mut anchor = None;
    let mut items = Vec::new();
    let mut rest = s.trim();
    while !rest.is_empty() {
        let (token, tail) = if rest.starts_with('[') {
            let close = rest.find(']').ok_or_else(|| bad("unclosed `[`"))?;
            (&rest[..=close], &rest[close + 1..])
        } else {
            match rest.find(',') {
                Some(i) => (&rest[..i], &rest[i..]),
                None => (rest, ""),
            }
        };
        let token = token.trim();
        if let Some(inner) = token.strip_prefix('[') {
            let inner = &inner[..inner.len() - 1];
            let (a, b) = inner.split_once(',').ok_or_else(|| bad("pair needs two parts"))?;
            let (a, b) = (num(a)?, num(b)?);
            if a >= b {
                return Err(bad("pair parts must increase"));
            }
            items.push(Item::Pair(a, b));
        } else if let Some(a) = token.strip_prefix('!') {
            if anchor.is_some() || !items.is_empty() {
                return Err(bad("anchor must come first"));
            }
            anchor = Some(num(a)?);
        } else {
            items.push(Item::Singleton(num(token)?));
        }
        rest = tail.trim_start();
        if let Some(t) = rest.strip_prefix(',') {
            rest = t.trim_start();
            if rest.is_empty() {
                return Err(bad("trailing comma"));
            }
        } else if !rest.is_empty() {
            return Err(bad("expected `,`"));
        }
    }
    if items.iter().chain(anchor.map(Item::Singleton).iter()).any(|it| it.low() == 0) {
        return Err(Error::NonPositivePart);
    }
    Ok((anchor, items))
}

/// Pairs ascending `parts` by maximal chains of pairable neighbours.
pub(crate) fn pair_up(rule: PairRule, parts: &[u32], direction: Direction) -> Vec<Item> {
    let mut items = Vec::with_capacity(parts.len());
    let mut i = 0;
    while i < parts.len() {
        let mut j = i;
        while j + 1 < parts.len() && rule.pairable(parts[j], parts[j + 1]) {
            j += 1;
        }
        let mut chain = &parts[i..=j];
        let odd = chain.len() % 2 == 1;
        if odd && direction == Direction::Forward {
            items.push(Item::Singleton(chain[0]));
            chain = &chain[1..];
        }
        let tail = if odd && direction == Direction::Backward {
            chain.last().copied()
        } else {
            None
        };
        items.extend(chain.chunks_exact(2).map(|c| Item::Pair(c[0], c[1])));
        items.extend(tail.map(Item::Singleton));
        i = j + 1;
    }
    items
}

pub fn decompose(family: ConstraintFamily, p: &Partition, direction: Direction) -> Result<PairedPartition> {
    let rule = family.pair_rule().ok_or(Error::NoBijection(family))?;
    if !family.satisfies_parts(p.parts()) {
        return Err(Error::ConstraintViolation {
            family,
            parts: p.to_string(),
        });
    }
    let mut parts = p.parts();
    let anchor = match (family.anchor_part(), parts.first()) {
        (Some(a), Some(&first)) if a == first => {
            parts = &parts[1..];
            Some(a)
        }
        _ => None,
    };
    Ok(PairedPartition {
        anchor,
        items: pair_up(rule, parts, direction),
        family,
        direction,
    })
}
