//! Shared inputs for the criterion benchmarks.

use sieve_core::tableau::{enumerate_shifted_syt, enumerate_syt};
use sieve_core::{Partition, ShiftedStandardTableau, StandardTableau, StrictPartition};

/// All square tableaux of side `n`.
pub fn squares(n: usize) -> Vec<StandardTableau> {
    enumerate_syt(&Partition::square(n)).expect("rank within the enumeration guard")
}

/// All doubled-staircase shifted tableaux of rank `n`.
pub fn staircases(n: usize) -> Vec<ShiftedStandardTableau> {
    enumerate_shifted_syt(&StrictPartition::doubled_staircase(n))
        .expect("rank within the enumeration guard")
}
