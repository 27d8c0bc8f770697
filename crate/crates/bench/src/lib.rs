//! Shared inputs for the criterion benches.

use satsemi::NumericalSemigroup;

/// Every member of `Sat(F)`; used as a corpus for per-semigroup benches.
pub fn corpus(frobenius: usize) -> Vec<NumericalSemigroup> {
    satsemi::enumerate_sat(frobenius).expect("positive frobenius")
}
