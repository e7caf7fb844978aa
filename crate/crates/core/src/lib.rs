//! Exact signed enumeration of generalized Gelfand-Tsetlin patterns.
//!
//! The crate counts generalized `(r, n, c)`-patterns with a fixed top row,
//! both by exhaustive enumeration and by the extended-summation recursion,
//! together with their `q`-weighted generating functions. On top of the two
//! counting engines it provides the closed-form product formulas for strict
//! plane partitions, semistandard tableaux and refined alternating sign
//! matrices, and instance-level checks of the operator identities that tie
//! them together.
//!
//! Everything is exact: scalars are [`BigRational`](num_rational::BigRational)
//! and generating functions are sparse [`LaurentPolyQ`] values.

pub mod asm;
pub mod closedforms;
pub mod counting;
pub mod error;
pub mod exact;
pub mod identities;
pub mod patterns;
pub mod suites;
pub mod tableaux;

pub use error::{Error, Result};
pub use exact::{ext_sum, pochhammer, q_bracket, q_poch, LaurentPolyQ, QFraction};
pub use counting::{CountResult, TopRowKey};
pub use patterns::{GenPattern, GtPattern, Partition, StrictPlanePartition};
