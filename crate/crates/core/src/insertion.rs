//! RSK row insertion, crystal raising operators, and square words.

use crate::error::{Error, Result};
use crate::promotion::{embed_straight, rectify};
use crate::tableau::{ShiftedStandardTableau, StandardTableau};
use crate::word::Word;

/// Weakly increasing rows, strictly increasing columns.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct InsertionTableau(Vec<Vec<u8>>);

impl InsertionTableau {
    pub fn rows(&self) -> &[Vec<u8>] {
        &self.0
    }

    /// Whether this is the `n × n` square with every entry of row `i` equal to `i`.
    pub fn is_superstandard_square(&self, n: usize) -> bool {
        self.0.len() == n
            && self
                .0
                .iter()
                .enumerate()
                .all(|(i, row)| row.len() == n && row.iter().all(|&v| v as usize == i + 1))
    }
}

/// Insertion tableau `P(w)` and recording tableau `Q(w)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InsertionPair {
    pub p: InsertionTableau,
    pub q: StandardTableau,
}

/// Robinson–Schensted–Knuth row insertion. A letter bumps the leftmost
/// entry strictly greater than itself.
pub fn rsk(word: &Word) -> InsertionPair {
    let mut p: Vec<Vec<u8>> = Vec::new();
    let mut q: Vec<Vec<u32>> = Vec::new();
    for (step, &letter) in word.letters().iter().enumerate() {
        let mut x = letter;
        let mut r = 0;
        loop {
            if r == p.len() {
                p.push(vec![x]);
                q.push(vec![step as u32 + 1]);
                break;
            }
            match p[r].iter().position(|&y| y > x) {
                Some(k) => {
                    std::mem::swap(&mut p[r][k], &mut x);
                    r += 1;
                }
                None => {
                    p[r].push(x);
                    q[r].push(step as u32 + 1);
                    break;
                }
            }
        }
    }
    InsertionPair {
        p: InsertionTableau(p),
        q: StandardTableau::from_rows_unchecked(q),
    }
}

/// Positions of the unpaired letters `j` when `j + 1` opens and `j` closes.
fn unpaired_lowers(letters: &[u8], j: u8) -> Vec<usize> {
    let mut open = 0usize;
    let mut lowers = Vec::new();
    for (i, &l) in letters.iter().enumerate() {
        if l == j + 1 {
            open += 1;
        } else if l == j {
            if open > 0 {
                open -= 1;
            } else {
                lowers.push(i);
            }
        }
    }
    lowers
}

/// The crystal raising operator `e_j`: after bracketing `j + 1` with a
/// later `j`, the rightmost unpaired `j` becomes `j + 1`.
pub fn crystal_e(word: &Word, j: u8) -> Result<Word> {
    if j == 0 {
        return Err(Error::LetterOutOfRange {
            letter: j,
            bound: u8::MAX,
        });
    }
    let Some(&pos) = unpaired_lowers(word.letters(), j).last() else {
        return Err(Error::OperatorUndefined {
            index: j,
            word: word.to_string(),
        });
    };
    let mut letters = word.letters().to_vec();
    letters[pos] = j + 1;
    Ok(Word::from_letters_unchecked(letters))
}

/// `e_1 ∘ e_2 ∘ ... ∘ e_{n-1}`, applying `e_{n-1}` first.
pub fn ebar(word: &Word, n: u8) -> Result<Word> {
    let mut w = word.clone();
    for j in (1..n).rev() {
        w = crystal_e(&w, j)?;
    }
    Ok(w)
}

/// Length `n²`, `n` copies of each letter, and every prefix has at least as
/// many `j + 1` as `j`.
pub fn is_square_word(word: &Word, n: usize) -> bool {
    if word.len() != n * n || word.check_alphabet(n as u8).is_err() {
        return false;
    }
    let mut counts = vec![0usize; n + 2];
    for &l in word.letters() {
        let l = l as usize;
        counts[l] += 1;
        if l < n && counts[l] > counts[l + 1] {
            return false;
        }
    }
    counts[1..=n].iter().all(|&c| c == n)
}

/// Reading left to right, position `i` with letter `j` goes to the leftmost
/// free cell of row `n + 1 - j`.
pub fn yamanouchi_to_square(word: &Word, n: usize) -> Result<StandardTableau> {
    if !is_square_word(word, n) {
        return Err(Error::NotSquareWord(word.to_string()));
    }
    let mut rows = vec![Vec::with_capacity(n); n];
    for (i, &l) in word.letters().iter().enumerate() {
        rows[n - l as usize].push(i as u32 + 1);
    }
    Ok(StandardTableau::from_rows_unchecked(rows))
}

/// Inverse of [`yamanouchi_to_square`].
pub fn square_to_yamanouchi(t: &StandardTableau) -> Result<Word> {
    let n = t.shape().square_side().ok_or_else(|| {
        Error::InvalidShape(format!("expected a square, got {:?}", t.shape().parts()))
    })?;
    let letters = t.rows_of().into_iter().map(|r| (n + 1 - r) as u8).collect();
    Ok(Word::from_letters_unchecked(letters))
}

/// Shifted recording tableau `Q'(w)`, by rectifying `Q(w)` placed in
/// shifted coordinates.
pub fn q_shifted(word: &Word) -> ShiftedStandardTableau {
    rectify(&embed_straight(&rsk(word).q))
}
