//! Algebraic rank of right-angled Coxeter and Artin groups, with constructive
//! checks of the covering arguments behind it.
//!
//! * [`graph`]: defining graphs, join decomposition, doubled graphs.
//! * [`word`]: reduction, normal forms, parity, ball enumeration.
//! * [`essential`]: essentiality certificates and a bounded falsifier.
//! * [`cancellator`]: multiplier synthesis repairing missing and bad generators.
//! * [`subgroup`]: parity-kernel subgroups.
//! * [`classifier`]: rank reports.
//! * [`verifier`]: exhaustive checks with JSON reports.

pub mod cancellator;
pub mod classifier;
pub mod cli;
pub mod error;
pub mod essential;
pub mod graph;
pub mod subgroup;
pub mod verifier;
pub mod word;

pub use error::{Error, Result};
pub use graph::DefiningGraph;
pub use word::{ReducedWord, Word};
