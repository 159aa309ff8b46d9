//! Constructive bijections between restricted partitions and triples
//! `(n1, n2, μ, η)` built from a base partition by pair moves.
//!
//! Capparelli type families move pairs by 3 per step, Göllnitz-Gordon type
//! families by 4. Pairing is recomputed after every move.

mod base;
mod maps;
mod moves;
mod paired;

pub use base::{base_partition, BaseVariant};
pub use maps::{backward_map, base_of, forward_map, Triple};
pub use moves::{backward_move, forward_move, MoveTrace, Step, StepLabel};
pub use paired::{decompose, parse_items, Direction, Item, PairedPartition};
