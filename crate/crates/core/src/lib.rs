//! Exact q-series, brute-force partition oracles and constructive
//! bijections for Andrews-Gordon type partition identities.
//!
//! ```
//! use pil_core::bijection::{forward_map, BaseVariant, Triple};
//! use pil_core::partitions::ConstraintFamily;
//!
//! let t = Triple::new(vec![1, 2], vec![3, 9]);
//! let (p, _) = forward_map(ConstraintFamily::Cp1, &t, BaseVariant::Plain).unwrap();
//! assert_eq!(p.to_string(), "3,6,9,14,18,21");
//! ```

pub mod bijection;
pub mod error;
pub mod fuzz;
pub mod generators;
pub mod partitions;
pub mod qseries;
pub mod verify;

pub use bijection::{Direction, Item, MoveTrace, PairedPartition, Triple};
pub use error::{Error, Result};
pub use partitions::{ConstraintFamily, PaddedPartition, Partition};
pub use qseries::{BivariateSeries, TruncatedSeries};
