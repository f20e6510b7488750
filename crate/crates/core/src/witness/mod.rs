//! Constructive certificates for the Euclidean cases.

pub mod affine;
pub mod lattice;
pub mod monodromy;
