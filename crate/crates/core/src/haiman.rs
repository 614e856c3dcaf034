//! Haiman's bijections: the promotion sequence `Φ` from doubled-staircase
//! shifted tableaux to reduced words, the square-to-staircase map `H`, and
//! their composite `Ψ = Φ ∘ H`.

use std::collections::HashMap;
use std::sync::OnceLock;

use crate::bn::{is_reduced_word_for_w0, MAX_EXHAUSTIVE_RANK};
use crate::error::{Error, Result};
use crate::promotion::{embed_square, rectify, Promote};
use crate::tableau::{
    enumerate_shifted_syt, enumerate_syt, Partition, ShiftedStandardTableau, StandardTableau,
    StrictPartition,
};
use crate::word::Word;

fn staircase_rank(s: &ShiftedStandardTableau) -> Result<usize> {
    s.shape().staircase_rank().ok_or_else(|| {
        Error::InvalidShape(format!(
            "expected a doubled staircase, got {:?}",
            s.shape().parts()
        ))
    })
}

/// Row of the largest entry, counted from the bottom (the bottom row is 1).
pub fn largest_entry_row(s: &ShiftedStandardTableau) -> usize {
    let (top_down, _) = s.position(s.size() as u32).expect("nonempty tableau");
    s.rows().len() + 1 - top_down
}

/// The promotion sequence `r_1 ... r_{n²}`, where `r_i` is the bottom-up row
/// of `n²` in the `i`-th promotion of `s`.
pub fn phi(s: &ShiftedStandardTableau) -> Result<Word> {
    let n = staircase_rank(s)?;
    let mut t = s.clone();
    let mut letters = Vec::with_capacity(n * n);
    for _ in 0..n * n {
        t = t.promote();
        letters.push(largest_entry_row(&t) as u8);
    }
    Ok(Word::from_letters_unchecked(letters))
}

/// `H(Q)`: rectification of the square `Q` placed in shifted coordinates.
pub fn h(q: &StandardTableau) -> Result<ShiftedStandardTableau> {
    Ok(rectify(&embed_square(q)?))
}

/// `Ψ(T) = Φ(H(T))`.
pub fn psi(t: &StandardTableau) -> Result<Word> {
    phi(&h(t)?)
}

/// Inverse lookups for `Φ` and `H` at one rank, built by running the
/// forward maps over the full enumerations.
#[derive(Debug)]
pub struct InverseTables {
    n: usize,
    phi_inverse: HashMap<Word, ShiftedStandardTableau>,
    h_inverse: HashMap<ShiftedStandardTableau, StandardTableau>,
}

impl InverseTables {
    pub fn build(n: usize) -> Result<Self> {
        let staircases = enumerate_shifted_syt(&StrictPartition::doubled_staircase(n))?;
        let squares = enumerate_syt(&Partition::square(n))?;
        let mut phi_inverse = HashMap::with_capacity(staircases.len());
        for s in staircases {
            let w = phi(&s)?;
            if let Some(prev) = phi_inverse.insert(w.clone(), s) {
                return Err(Error::InvalidTableau(format!(
                    "Φ is not injective: {w} from {prev}"
                )));
            }
        }
        let mut h_inverse = HashMap::with_capacity(squares.len());
        for q in squares {
            let s = h(&q)?;
            if let Some(prev) = h_inverse.insert(s.clone(), q) {
                return Err(Error::InvalidTableau(format!(
                    "H is not injective: {s} from {prev}"
                )));
            }
        }
        Ok(Self {
            n,
            phi_inverse,
            h_inverse,
        })
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn phi_inverse(&self, w: &Word) -> Option<&ShiftedStandardTableau> {
        self.phi_inverse.get(w)
    }

    pub fn h_inverse(&self, s: &ShiftedStandardTableau) -> Option<&StandardTableau> {
        self.h_inverse.get(s)
    }
}

static TABLES: [OnceLock<InverseTables>; MAX_EXHAUSTIVE_RANK + 1] =
    [const { OnceLock::new() }; MAX_EXHAUSTIVE_RANK + 1];

/// Shared inverse tables for rank `n`, built on first use.
pub fn inverse_tables(n: usize) -> Result<&'static InverseTables> {
    let slot = TABLES
        .get(n)
        .filter(|_| n >= 1)
        .ok_or(Error::GuardExceeded {
            what: "inverse lookup tables (rank)".into(),
            requested: n as u128,
            limit: MAX_EXHAUSTIVE_RANK as u128,
        })?;
    if let Some(t) = slot.get() {
        return Ok(t);
    }
    let built = InverseTables::build(n)?;
    Ok(slot.get_or_init(|| built))
}

fn rank_of_word(w: &Word) -> Option<usize> {
    let n = (w.len() as f64).sqrt().round() as usize;
    (n * n == w.len() && n > 0).then_some(n)
}

/// The unique staircase tableau whose promotion sequence is `w`.
pub fn phi_inverse(w: &Word) -> Result<ShiftedStandardTableau> {
    let n = rank_of_word(w)
        .filter(|&n| is_reduced_word_for_w0(w, n))
        .ok_or_else(|| Error::NotReducedWord(w.to_string()))?;
    inverse_tables(n)?
        .phi_inverse(w)
        .cloned()
        .ok_or_else(|| Error::NotReducedWord(w.to_string()))
}

/// The unique square `Q` with `H(Q) = s`.
pub fn h_inverse(s: &ShiftedStandardTableau) -> Result<StandardTableau> {
    let n = staircase_rank(s)?;
    let found = inverse_tables(n)?.h_inverse(s).cloned();
    Ok(found.expect("H is onto the doubled staircase tableaux"))
}

/// `Ψ^{-1} = H^{-1} ∘ Φ^{-1}`.
pub fn psi_inverse(w: &Word) -> Result<StandardTableau> {
    h_inverse(&phi_inverse(w)?)
}
