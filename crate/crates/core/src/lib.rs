//! Decorated hypertrees: exhaustive enumeration, box-tree bijections, exponential
//! generating series and cycle index series, all in exact arithmetic.

pub mod boxtree;
pub mod cis;
pub mod egf;
mod error;
pub mod foundation;
pub mod hypertree;
pub mod species;
pub mod verify;

pub use error::{Error, Result};
