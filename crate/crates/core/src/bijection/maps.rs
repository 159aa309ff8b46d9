use serde::Serialize;

use super::base::{base_partition, BaseVariant};
use super::moves::{backward_move, forward_move, MoveTrace, StepLabel};
use super::paired::{decompose, Direction, Item, PairedPartition};
use crate::error::{Error, Result};
use crate::partitions::{ConstraintFamily, PaddedPartition, Partition};

/// Numbers of singletons and pairs, what is added to the singletons, and
/// how far the pairs are moved.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Triple {
    pub n1: usize,
    pub n2: usize,
    pub mu: PaddedPartition,
    pub eta: PaddedPartition,
}

impl Triple {
    pub fn new(mu: Vec<u32>, eta: Vec<u32>) -> Self {
        Self {
            n1: mu.len(),
            n2: eta.len(),
            mu: PaddedPartition::new(mu),
            eta: PaddedPartition::new(eta),
        }
    }

    pub fn zero(n1: usize, n2: usize) -> Self {
        Self {
            n1,
            n2,
            mu: PaddedPartition::zeros(n1),
            eta: PaddedPartition::zeros(n2),
        }
    }

    pub fn weight(&self) -> u64 {
        self.mu.weight() + self.eta.weight()
    }

    /// Number of parts of the image (anchor excluded).
    pub fn length(&self) -> usize {
        self.n1 + 2 * self.n2
    }

    pub fn validate(&self, family: ConstraintFamily) -> Result<()> {
        let step = family.pair_rule().ok_or(Error::NoBijection(family))?.step();
        if self.mu.len() != self.n1 {
            return Err(Error::MalformedTriple(format!("mu has {} parts, n1 = {}", self.mu.len(), self.n1)));
        }
        if self.eta.len() != self.n2 {
            return Err(Error::MalformedTriple(format!("eta has {} parts, n2 = {}", self.eta.len(), self.n2)));
        }
        if let Some(e) = self.eta.parts().iter().find(|&&e| e % step != 0) {
            return Err(Error::MalformedTriple(format!("eta part {e} is not a multiple of {step}")));
        }
        Ok(())
    }
}

/// Builds the partition for `t`: the base partition, then `μ` added to the
/// singletons (largest first), then each pair moved forward `η_i / step`
/// times, largest pair first.
pub fn forward_map(
    family: ConstraintFamily,
    t: &Triple,
    variant: BaseVariant,
) -> Result<(Partition, MoveTrace)> {
    t.validate(family)?;
    let step = family.pair_rule().ok_or(Error::NoBijection(family))?.step();
    let mut pp = base_partition(family, t.n1, t.n2, variant)?;
    let mut trace = MoveTrace::new();
    trace.push(StepLabel::Start, pp.clone(), None);

    let mut singles: Vec<usize> = (0..pp.items.len()).filter(|&k| !pp.items[k].is_pair()).collect();
    singles.reverse();
    for (&k, &m) in singles.iter().zip(t.mu.parts().iter().rev()) {
        if m > 0 {
            pp.items[k] = Item::Singleton(pp.items[k].low() + m);
            trace.push(StepLabel::Singleton, pp.clone(), Some(k));
        }
    }

    pp = pp.regrouped(Direction::Forward);
    for (i, &e) in t.eta.parts().iter().enumerate().rev() {
        for _ in 0..e / step {
            let (next, steps) = forward_move(&pp, i)?;
            pp = next;
            trace.extend(steps);
        }
    }
    Ok((pp.to_partition(), trace))
}

/// Inverse of [`forward_map`]: moves each pair back to its base position,
/// smallest first, then reads `μ` off the singletons.
pub fn backward_map(
    family: ConstraintFamily,
    p: &Partition,
) -> Result<(Triple, BaseVariant, MoveTrace)> {
    let step = family.pair_rule().ok_or(Error::NoBijection(family))?.step();
    let mut pp = decompose(family, p, Direction::Backward)?;
    let variant = if pp.anchor.is_some() {
        BaseVariant::Anchored
    } else {
        BaseVariant::Plain
    };
    let (n1, n2) = (pp.singleton_count(), pp.pair_count());
    let base = base_partition(family, n1, n2, variant)?;
    let targets: Vec<(u32, u32)> = base.pairs().collect();
    let mut trace = MoveTrace::new();
    trace.push(StepLabel::Start, pp.clone(), None);

    let mut eta = Vec::with_capacity(n2);
    for (j, &target) in targets.iter().enumerate() {
        let mut moves = 0u32;
        while pp.pairs().nth(j) != Some(target) {
            let (next, steps) = backward_move(&pp, j)?;
            if next.pair_count() != n2 {
                return Err(Error::BijectionInvariant(format!("backward move changed the pair count at {next}")));
            }
            pp = next;
            trace.extend(steps);
            moves += 1;
        }
        eta.push(moves * step);
    }

    let base_singles: Vec<u32> = base.singletons().collect();
    let mut mu = Vec::with_capacity(n1);
    let singles: Vec<usize> = (0..pp.items.len()).filter(|&k| !pp.items[k].is_pair()).collect();
    for (&k, &b) in singles.iter().zip(&base_singles) {
        let s = pp.items[k].low();
        if s < b {
            return Err(Error::BijectionInvariant(format!("singleton {s} below its base value {b}")));
        }
        mu.push(s - b);
        if s > b {
            pp.items[k] = Item::Singleton(b);
            trace.push(StepLabel::Singleton, pp.clone(), Some(k));
        }
    }
    if pp.items != base.items {
        return Err(Error::BijectionInvariant(format!("ended at {pp}, not the base partition {base}")));
    }
    for (name, v) in [("mu", &mu), ("eta", &eta)] {
        if v.windows(2).any(|w| w[0] > w[1]) {
            return Err(Error::BijectionInvariant(format!("{name} = {v:?} is not weakly increasing")));
        }
    }
    Ok((Triple::new(mu, eta), variant, trace))
}

/// The base partition a triple starts from, for display.
pub fn base_of(family: ConstraintFamily, t: &Triple, variant: BaseVariant) -> Result<PairedPartition> {
    base_partition(family, t.n1, t.n2, variant)
}
