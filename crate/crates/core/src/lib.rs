//! Overpartition statistics, Frobenius-symbol bijections, buffered Frobenius
//! representations and an exact truncated q-series engine used to check the
//! generating functions of their ranks.

pub mod buffered;
pub mod enumerate;
pub mod error;
pub mod frobenius;
pub mod partition;
pub mod qseries;
pub mod stats;
pub mod verify;

pub use error::{Error, Result};
pub use partition::{Part, Partition, Overpartition};
