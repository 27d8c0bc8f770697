//! Saturated numerical semigroups with a fixed Frobenius number.
//!
//! The family `Sat(F)` of saturated numerical semigroups with Frobenius
//! number `F` is closed under intersection and under removing the
//! multiplicity, which arranges it into a rooted tree. This crate walks that
//! tree ([`sat_tree`]), describes its maximal elements and minimum genus
//! ([`extremal`]), computes least saturated closures and minimal
//! `Sat(F)`-systems of generators ([`sat_generators`]), enumerates by
//! `Sat(F)`-rank ([`rank_enum`]), and checks all of it against exhaustive
//! subset search ([`oracle`]).

mod bitmap;
pub mod error;
pub mod extremal;
pub mod format;
pub mod oracle;
pub mod rank_enum;
pub mod sat_generators;
pub mod sat_tree;
pub mod semigroup;

pub use error::{Error, Result};
pub use extremal::{maximal_elements, min_genus, minimal_non_divisors, non_divisors, tooth, ToothSemigroup};
pub use format::Summary;
pub use rank_enum::{
    coefficient_tuples, diophantine_solutions, enumerate_rank, feasible_rank, is_sat_sequence,
    list_sequences, witness_to_semigroup, RankWitness, SatSequence,
};
pub use sat_generators::{closure, is_minimal_system, is_sat_set, minimal_system, rank, SatFSet};
pub use sat_tree::{enumerate_sat, enumerate_sat_genus, SatTree, TreeNode};
pub use semigroup::{AperyTable, GeneratorSet, NumericalSemigroup};
