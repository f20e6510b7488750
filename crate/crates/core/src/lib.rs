//! Realizability of candidate branched covers of the sphere.
//!
//! A candidate is a degree and a list of partitions of it, one per branching
//! point. [`decide`] settles it by the geometry of the induced orbifold cover,
//! [`witness`] builds explicit Euclidean certificates, and [`oracle`] checks
//! everything independently by searching for permutation tuples.

pub mod cli;
pub mod decide;
pub mod enumerate;
pub mod euler;
pub mod model;
pub mod oracle;
pub mod quadform;
pub mod selfcheck;
pub mod tables;
pub mod witness;

pub use decide::decide;
pub use model::{parse_candidate, CandidateCover, Decision, Orbifold, Partition, Verdict};
