use std::fmt;

use serde::Serialize;

use super::base::{base_partition, BaseVariant};
use super::paired::{pair_up, Direction, Item, PairedPartition};
use crate::error::{Error, Result};
use crate::partitions::{satisfies, PairRule};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum StepLabel {
    Start,
    /// A part of `μ` added to (or removed from) a singleton.
    Singleton,
    Ia,
    IIa,
    Ib,
    IIb,
    #[serde(rename = "I'a")]
    IPrimeA,
    #[serde(rename = "II'a")]
    IIPrimeA,
    #[serde(rename = "I'b")]
    IPrimeB,
    #[serde(rename = "II'b")]
    IIPrimeB,
    #[serde(rename = "GG-a")]
    GgA,
    #[serde(rename = "GG-b")]
    GgB,
    #[serde(rename = "GG'-a")]
    GgPrimeA,
    #[serde(rename = "GG'-b")]
    GgPrimeB,
    Adjust,
    Regroup,
}

impl StepLabel {
    /// Weight change of a step with this label, in units of the move step.
    pub fn move_sign(self) -> i64 {
        use StepLabel::*;
        match self {
            Ia | IIa | Ib | IIb | GgA | GgB => 1,
            IPrimeA | IIPrimeA | IPrimeB | IIPrimeB | GgPrimeA | GgPrimeB => -1,
            Start | Singleton | Adjust | Regroup => 0,
        }
    }

    /// The snapshot right after a b-case move, before its adjustment, need
    /// not satisfy the family conditions.
    pub fn is_transient(self) -> bool {
        use StepLabel::*;
        matches!(self, Ib | IIb | IPrimeB | IIPrimeB | GgB | GgPrimeB)
    }
}

impl fmt::Display for StepLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use StepLabel::*;
        f.write_str(match self {
            Start => "start",
            Singleton => "singleton",
            Ia => "Ia",
            IIa => "IIa",
            Ib => "Ib",
            IIb => "IIb",
            IPrimeA => "I'a",
            IIPrimeA => "II'a",
            IPrimeB => "I'b",
            IIPrimeB => "II'b",
            GgA => "GG-a",
            GgB => "GG-b",
            GgPrimeA => "GG'-a",
            GgPrimeB => "GG'-b",
            Adjust => "adjust",
            Regroup => "regroup",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Step {
    pub label: StepLabel,
    pub snapshot: PairedPartition,
    /// Item of `snapshot` the step acted on.
    pub focus: Option<usize>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct MoveTrace {
    pub steps: Vec<Step>,
}

impl MoveTrace {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn push(&mut self, label: StepLabel, snapshot: PairedPartition, focus: Option<usize>) {
        self.steps.push(Step {
            label,
            snapshot,
            focus,
        });
    }

    pub fn extend(&mut self, other: MoveTrace) {
        self.steps.extend(other.steps);
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn labels(&self) -> impl Iterator<Item = StepLabel> + '_ {
        self.steps.iter().map(|s| s.label)
    }

    pub fn move_count(&self) -> usize {
        self.labels().filter(|l| l.move_sign() != 0).count()
    }

    pub fn contains_snapshot(&self, text: &str) -> bool {
        self.steps.iter().any(|s| s.snapshot.to_string() == text)
    }

    /// Checks that every move changes the weight by exactly `±step`,
    /// adjustments and regroupings keep it, and every non-transient snapshot
    /// satisfies the family.
    pub fn check(&self) -> Result<()> {
        let fail = |k: usize, why: String| Err(Error::BijectionInvariant(format!("step {k}: {why}")));
        for (k, s) in self.steps.iter().enumerate() {
            let family = s.snapshot.family;
            if !s.label.is_transient() && !satisfies(family, &s.snapshot.to_partition()) {
                return fail(k, format!("{} violates {family}", s.snapshot));
            }
            let Some(prev) = k.checked_sub(1).map(|j| &self.steps[j]) else {
                continue;
            };
            let delta = s.snapshot.weight() as i64 - prev.snapshot.weight() as i64;
            let step = family.pair_rule().map_or(0, |r| r.step()) as i64;
            let ok = match s.label {
                StepLabel::Start => false,
                StepLabel::Singleton => delta != 0,
                l => delta == l.move_sign() * step,
            };
            if !ok {
                return fail(k, format!("{} changed the weight by {delta}", s.label));
            }
        }
        Ok(())
    }

    /// One line per step: label, then the snapshot with `*` before the
    /// focused item.
    pub fn render(&self) -> String {
        let width = self.labels().map(|l| l.to_string().len()).max().unwrap_or(0);
        self.steps
            .iter()
            .map(|s| format!("{:<width$}  {}\n", s.label.to_string(), s.snapshot.render(s.focus)))
            .collect()
    }
}

struct Outcome {
    label: StepLabel,
    /// Items right after the move, the moved pair at `focus`.
    moved: Vec<Item>,
    focus: usize,
    /// Items after the b-case adjustment and the position of the new pair.
    adjusted: Option<(Vec<Item>, usize)>,
}

fn inadmissible(pp: &PairedPartition, k: usize, reason: &'static str) -> Error {
    Error::InadmissibleMove {
        pair: (pp.items[k].low(), pp.items[k].high()),
        snapshot: pp.to_string(),
        reason,
    }
}

fn forward_case(rule: PairRule, pp: &PairedPartition, k: usize) -> Result<Outcome> {
    let Item::Pair(a, b) = pp.items[k] else {
        unreachable!("pair_position returns pairs")
    };
    let next = pp.items.get(k + 1).copied();
    let y = next.map(Item::low);
    let single_next = matches!(next, Some(Item::Singleton(_)));
    let mut moved = pp.items.clone();
    let (label, pair, adjusted) = match rule {
        PairRule::Capparelli { .. } => {
            let gap2 = b - a == 2;
            let pair = if gap2 { (a + 1, b + 2) } else { (a + 2, b + 1) };
            if y.is_none_or(|y| y >= b + 5) {
                (if gap2 { StepLabel::Ia } else { StepLabel::IIa }, pair, None)
            } else if y == Some(b + 4) && single_next {
                let (s, p) = if gap2 {
                    (a, Item::Pair(b + 2, b + 5))
                } else {
                    (a + 1, Item::Pair(b + 2, b + 4))
                };
                (if gap2 { StepLabel::Ib } else { StepLabel::IIb }, pair, Some([Item::Singleton(s), p]))
            } else {
                return Err(inadmissible(pp, k, "the next part blocks the forward move"));
            }
        }
        PairRule::GollnitzGordon { .. } => {
            let pair = (a + 2, b + 2);
            if y.is_none_or(|y| y >= a + 6) {
                (StepLabel::GgA, pair, None)
            } else if y == Some(a + 5) && single_next {
                let adj = [Item::Singleton(a + 1), Item::Pair(a + 4, a + 6)];
                (StepLabel::GgB, pair, Some(adj))
            } else {
                return Err(inadmissible(pp, k, "the next part blocks the forward move"));
            }
        }
    };
    moved[k] = Item::Pair(pair.0, pair.1);
    let adjusted = adjusted.map(|adj| {
        let mut items = pp.items.clone();
        items.splice(k..k + 2, adj);
        (items, k + 1)
    });
    Ok(Outcome {
        label,
        moved,
        focus: k,
        adjusted,
    })
}

fn backward_case(rule: PairRule, pp: &PairedPartition, k: usize) -> Result<Outcome> {
    let Item::Pair(a, b) = pp.items[k] else {
        unreachable!("pair_position returns pairs")
    };
    let prev = k.checked_sub(1).map(|j| pp.items[j]);
    let x = prev.map(Item::high);
    let single_prev = matches!(prev, Some(Item::Singleton(_)));
    let mut moved = pp.items.clone();
    let (label, pair, adjusted) = match rule {
        PairRule::Capparelli { .. } => {
            let gap3 = b - a == 3;
            if a < if gap3 { 2 } else { 3 } {
                return Err(inadmissible(pp, k, "the pair cannot move below 1"));
            }
            let pair = if gap3 { (a - 1, b - 2) } else { (a - 2, b - 1) };
            if x.is_none_or(|x| x + 5 <= a) {
                (if gap3 { StepLabel::IPrimeA } else { StepLabel::IIPrimeA }, pair, None)
            } else if x == Some(a - 4) && single_prev {
                let x = a - 4;
                let adj = if gap3 {
                    [Item::Pair(x, x + 2), Item::Singleton(a + 2)]
                } else {
                    if x < 2 {
                        return Err(inadmissible(pp, k, "the pair cannot move below 1"));
                    }
                    [Item::Pair(x - 1, x + 2), Item::Singleton(b)]
                };
                let label = if gap3 { StepLabel::IPrimeB } else { StepLabel::IIPrimeB };
                (label, pair, Some(adj))
            } else {
                return Err(inadmissible(pp, k, "the previous part blocks the backward move"));
            }
        }
        PairRule::GollnitzGordon { .. } => {
            if a < 3 {
                return Err(inadmissible(pp, k, "the pair cannot move below 1"));
            }
            let pair = (a - 2, b - 2);
            if x.is_none_or(|x| x + 4 <= a) {
                (StepLabel::GgPrimeA, pair, None)
            } else if x == Some(a - 3) && single_prev && a > 4 {
                let adj = [Item::Pair(a - 4, a - 2), Item::Singleton(a + 1)];
                (StepLabel::GgPrimeB, pair, Some(adj))
            } else {
                return Err(inadmissible(pp, k, "the previous part blocks the backward move"));
            }
        }
    };
    moved[k] = Item::Pair(pair.0, pair.1);
    let adjusted = adjusted.map(|adj| {
        let mut items = pp.items.clone();
        items.splice(k - 1..=k, adj);
        (items, k - 1)
    });
    Ok(Outcome {
        label,
        moved,
        focus: k,
        adjusted,
    })
}

fn apply(pp: &PairedPartition, out: Outcome) -> (PairedPartition, MoveTrace) {
    let rule = pp.family.pair_rule().expect("checked by caller");
    let with = |items: Vec<Item>| PairedPartition {
        items,
        ..pp.clone()
    };
    let mut trace = MoveTrace::new();
    let mut cur = with(out.moved);
    let mut focus = out.focus;
    trace.push(out.label, cur.clone(), Some(focus));
    if let Some((items, f)) = out.adjusted {
        cur = with(items);
        focus = f;
        trace.push(StepLabel::Adjust, cur.clone(), Some(focus));
    }
    let regrouped = pair_up(rule, &cur.movable_parts(), pp.direction);
    if regrouped != cur.items {
        let moved = cur.items[focus];
        cur = with(regrouped);
        let focus = cur.items.iter().position(|&it| it == moved);
        trace.push(StepLabel::Regroup, cur.clone(), focus);
    }
    (cur, trace)
}

/// One forward move on the `pair_index`-th pair (ascending) of the forward
/// pairing of `pp`.
pub fn forward_move(pp: &PairedPartition, pair_index: usize) -> Result<(PairedPartition, MoveTrace)> {
    let rule = pp.family.pair_rule().ok_or(Error::NoBijection(pp.family))?;
    let pp = pp.regrouped(Direction::Forward);
    let k = pp.pair_position(pair_index)?;
    let out = forward_case(rule, &pp, k)?;
    Ok(apply(&pp, out))
}

/// One backward move on the `pair_index`-th pair (ascending) of the backward
/// pairing of `pp`. Fails once the pair sits where the base partition puts
/// it.
pub fn backward_move(pp: &PairedPartition, pair_index: usize) -> Result<(PairedPartition, MoveTrace)> {
    let rule = pp.family.pair_rule().ok_or(Error::NoBijection(pp.family))?;
    let pp = pp.regrouped(Direction::Backward);
    let k = pp.pair_position(pair_index)?;
    let variant = if pp.anchor.is_some() {
        BaseVariant::Anchored
    } else {
        BaseVariant::Plain
    };
    let base = base_partition(pp.family, pp.singleton_count(), pp.pair_count(), variant)?;
    if base.pairs().nth(pair_index) == Some((pp.items[k].low(), pp.items[k].high())) {
        return Err(inadmissible(&pp, k, "the pair is at its base position"));
    }
    let out = backward_case(rule, &pp, k)?;
    Ok(apply(&pp, out))
}
