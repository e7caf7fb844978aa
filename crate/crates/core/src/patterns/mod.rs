//! Combinatorial objects: partitions, strict plane partitions,
//! Gelfand-Tsetlin patterns and their generalized signed variant,
//! semistandard tableaux and monotone triangles.
//!
//! Every type serializes to JSON as plain row-major integer arrays; the
//! generalized patterns additionally carry their `(r, n, c)` header.

mod gen;
mod spp;
mod tableau;

pub use gen::{GenPattern, GtPattern, MonotoneTriangle};
pub use spp::{enumerate_spps, gt_to_spp, spp_to_gt, StrictPlanePartition};
pub use tableau::{Partition, SemistandardTableau};
