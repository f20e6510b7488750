//! Independent permutation oracle: searches for tuples directly and counts
//! them by characters.

pub mod count;
pub mod perm;
pub mod search;

pub use count::{count_transitive, count_tuples};
pub use perm::{verify_permutation_witness, Permutation, PermutationWitness};
pub use search::{exhaustive_decide, find_witness, ExhaustiveVerdict, OracleError, SearchBudget, SearchMode, SearchOutcome};
