//! Exact combinatorics for cyclic sieving on reduced words of the longest
//! element of the hyperoctahedral group `B_n`.
//!
//! The crate provides standard and shifted tableaux with jeu de taquin
//! promotion ([`promotion`]), RSK and crystal operators ([`insertion`]),
//! Haiman's bijections between square tableaux, doubled-staircase shifted
//! tableaux and reduced words ([`haiman`]), signed permutations and word
//! statistics ([`bn`]), exact q-polynomials evaluated at roots of unity
//! ([`qpoly`]), and a harness that checks fixed-point counts against those
//! evaluations ([`csp`]).

pub mod bn;
pub mod csp;
pub mod error;
pub mod golden;
pub mod haiman;
pub mod insertion;
pub mod promotion;
pub mod qpoly;
pub mod suite;
pub mod tableau;
pub mod word;

pub use crate::bn::{DescentData, SignedPermutation};
pub use crate::csp::{CspReport, CyclicActionSpec, FixedPointTable, SetId, Verdict};
pub use crate::error::{Error, Result};
pub use crate::insertion::InsertionPair;
pub use crate::promotion::{Census, Delta, Orbit, Promote};
pub use crate::qpoly::IntPolynomial;
pub use crate::tableau::{
    AnyTableau, Partition, ShiftedStandardTableau, SkewShiftedTableau, StandardTableau,
    StrictPartition,
};
pub use crate::word::Word;
