//! Fixtures shared by the benchmarks.

use pil_core::bijection::{forward_map, BaseVariant};
use pil_core::fuzz::triples_up_to;
use pil_core::{ConstraintFamily, Partition, Triple};

/// Every triple whose image has weight at most `max_n`.
pub fn triples(family: ConstraintFamily, max_n: usize) -> Vec<(BaseVariant, Triple)> {
    triples_up_to(family, max_n).expect("bijective family")
}

/// Images of [`triples`].
pub fn images(family: ConstraintFamily, max_n: usize) -> Vec<Partition> {
    triples(family, max_n)
        .iter()
        .map(|(v, t)| forward_map(family, t, *v).expect("valid triple").0)
        .collect()
}
