//! The hyperoctahedral group `B_n` as signed permutations, reduced words
//! of its longest element, rotation, and descent statistics.
//!
//! Generators act on the right of the window `(w(1), ..., w(n))`: `s_1`
//! negates `w(1)` and `s_i` for `i ≥ 2` swaps positions `i - 1` and `i`.
//! A word `a_1 ... a_l` names the product `s_{a_1} ... s_{a_l}` applied to
//! the identity left to right.

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigUint;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::promotion::Promote;
use crate::tableau::{hook_length_count, Partition, StandardTableau, DEFAULT_MAX_ELEMENTS};
use crate::word::Word;

/// Largest rank for which exhaustive enumeration of reduced words is allowed
/// by default (`|R(w_0)|` is 24024 at rank 4 and 701149020 at rank 5).
pub const MAX_EXHAUSTIVE_RANK: usize = 4;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignedPermutation {
    window: Vec<i32>,
}

impl SignedPermutation {
    pub fn new(window: Vec<i32>) -> Result<Self> {
        let n = window.len();
        let mut seen = vec![false; n + 1];
        for &v in &window {
            let a = v.unsigned_abs() as usize;
            if a == 0 || a > n || seen[a] {
                return Err(Error::Parse(format!(
                    "{window:?} is not a signed permutation"
                )));
            }
            seen[a] = true;
        }
        Ok(Self { window })
    }

    pub fn identity(n: usize) -> Self {
        Self {
            window: (1..=n as i32).collect(),
        }
    }

    /// The longest element, `w(i) = -i`.
    pub fn longest(n: usize) -> Self {
        Self {
            window: (1..=n as i32).map(|i| -i).collect(),
        }
    }

    pub fn rank(&self) -> usize {
        self.window.len()
    }

    pub fn window(&self) -> &[i32] {
        &self.window
    }

    fn check_generator(&self, i: u8) -> Result<()> {
        if i == 0 || i as usize > self.rank() {
            return Err(Error::LetterOutOfRange {
                letter: i,
                bound: self.rank() as u8,
            });
        }
        Ok(())
    }

    fn apply_in_place(&mut self, i: u8) {
        let i = i as usize;
        if i == 1 {
            self.window[0] = -self.window[0];
        } else {
            self.window.swap(i - 2, i - 1);
        }
    }

    /// `w · s_i`.
    pub fn apply_generator(&self, i: u8) -> Result<Self> {
        self.check_generator(i)?;
        let mut out = self.clone();
        out.apply_in_place(i);
        Ok(out)
    }

    /// Inversions of the window plus the absolute values of its negative entries.
    pub fn coxeter_length(&self) -> usize {
        let w = &self.window;
        let inversions = (0..w.len())
            .flat_map(|i| (i + 1..w.len()).map(move |j| (i, j)))
            .filter(|&(i, j)| w[i] > w[j])
            .count();
        let negatives: usize = w
            .iter()
            .filter(|&&v| v < 0)
            .map(|v| v.unsigned_abs() as usize)
            .sum();
        inversions + negatives
    }

    /// Whether `ℓ(w s_i) < ℓ(w)`.
    pub fn is_right_descent(&self, i: u8) -> bool {
        let i = i as usize;
        if i == 1 {
            self.window[0] < 0
        } else {
            self.window[i - 2] > self.window[i - 1]
        }
    }

    /// The product of the generators named by `word`, starting from the identity.
    pub fn from_word(n: usize, word: &Word) -> Result<Self> {
        let mut w = Self::identity(n);
        for &i in word.letters() {
            w.check_generator(i)?;
            w.apply_in_place(i);
        }
        Ok(w)
    }
}

impl fmt::Display for SignedPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (k, v) in self.window.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str(")")
    }
}

/// Whether `word` is a reduced expression for the longest element of `B_n`:
/// it has length `n²` and every prefix raises the Coxeter length by one.
pub fn is_reduced_word_for_w0(word: &Word, n: usize) -> bool {
    if word.len() != n * n || word.check_alphabet(n as u8).is_err() {
        return false;
    }
    let mut w = SignedPermutation::identity(n);
    let mut len = 0;
    for &i in word.letters() {
        w.apply_in_place(i);
        let next = w.coxeter_length();
        if next != len + 1 {
            return false;
        }
        len = next;
    }
    w == SignedPermutation::longest(n)
}

/// All reduced words of the longest element of `B_n`, in lexicographic
/// order, found by repeatedly peeling off right descents from `w_0`.
pub fn enumerate_reduced_words(n: usize) -> Result<Vec<Word>> {
    enumerate_reduced_words_with_limit(n, MAX_EXHAUSTIVE_RANK)
}

pub fn enumerate_reduced_words_with_limit(n: usize, max_rank: usize) -> Result<Vec<Word>> {
    if n > max_rank {
        return Err(Error::GuardExceeded {
            what: "reduced words (rank)".into(),
            requested: n as u128,
            limit: max_rank as u128,
        });
    }
    // |R(w_0)| equals the number of standard tableaux of the n × n square
    let count = hook_length_count(&Partition::square(n));
    if count > BigUint::from(DEFAULT_MAX_ELEMENTS) {
        return Err(Error::GuardExceeded {
            what: "reduced words (count)".into(),
            requested: count.try_into().unwrap_or(u128::MAX),
            limit: DEFAULT_MAX_ELEMENTS,
        });
    }
    fn peel(w: &mut SignedPermutation, suffix: &mut Vec<u8>, out: &mut Vec<Word>) {
        if suffix.len() == w.rank() * w.rank() {
            debug_assert_eq!(*w, SignedPermutation::identity(w.rank()));
            out.push(Word::from_letters_unchecked(
                suffix.iter().rev().copied().collect(),
            ));
            return;
        }
        for i in 1..=w.rank() as u8 {
            if w.is_right_descent(i) {
                w.apply_in_place(i);
                suffix.push(i);
                peel(w, suffix, out);
                suffix.pop();
                w.apply_in_place(i);
            }
        }
    }
    let mut out = Vec::new();
    if n == 0 {
        return Ok(out);
    }
    peel(
        &mut SignedPermutation::longest(n),
        &mut Vec::new(),
        &mut out,
    );
    out.sort();
    Ok(out)
}

/// Moves the first letter to the end.
pub fn rotate(word: &Word) -> Result<Word> {
    rotate_by(word, 1)
}

/// Applies [`rotate`] `d` times.
pub fn rotate_by(word: &Word, d: usize) -> Result<Word> {
    if word.is_empty() {
        return Err(Error::EmptyWord);
    }
    let mut v = word.letters().to_vec();
    v.rotate_left(d % word.len());
    Ok(Word::from_letters_unchecked(v))
}

/// Descents of a word or tableau, both linear and cyclic.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DescentData {
    /// Positions `i` with a descent between `i` and `i + 1`, 1-based.
    pub descents: BTreeSet<usize>,
    /// `descents`, plus 0 when the wrap-around position is a descent.
    pub cyclic_descents: BTreeSet<usize>,
    /// Sum of the linear descents.
    pub maj: usize,
}

impl DescentData {
    fn from_linear(descents: BTreeSet<usize>, wraps: bool) -> Self {
        let maj = descents.iter().sum();
        let mut cyclic_descents = descents.clone();
        if wraps {
            cyclic_descents.insert(0);
        }
        Self {
            descents,
            cyclic_descents,
            maj,
        }
    }

    /// Sum over the cyclic descent set. Equal to `maj` since 0 adds nothing.
    pub fn cyclic_maj(&self) -> usize {
        self.cyclic_descents.iter().sum()
    }

    /// `{i - 1 mod len : i ∈ D}`.
    pub fn shifted_cyclic(&self, len: usize) -> BTreeSet<usize> {
        self.cyclic_descents
            .iter()
            .map(|&i| (i + len - 1) % len)
            .collect()
    }
}

/// Descents `w_i > w_{i+1}`; the cyclic set also has 0 when `w_l > w_1`.
pub fn descent_data(word: &Word) -> DescentData {
    let w = word.letters();
    let descents = w
        .windows(2)
        .enumerate()
        .filter(|(_, p)| p[0] > p[1])
        .map(|(i, _)| i + 1)
        .collect();
    let wraps = w.len() > 1 && w[w.len() - 1] > w[0];
    DescentData::from_linear(descents, wraps)
}

/// Descents of a rectangular tableau: `i` lies strictly above `i + 1`. The
/// cyclic set adds 0 when `N - 1` lies strictly above `N` in the promotion.
pub fn tableau_descent_data(t: &StandardTableau) -> Result<DescentData> {
    let shape = t.shape();
    if shape.parts().windows(2).any(|w| w[0] != w[1]) {
        return Err(Error::InvalidShape(format!(
            "cyclic descents need a rectangle, got {:?}",
            shape.parts()
        )));
    }
    let n = t.size();
    let descents = linear_tableau_descents(t);
    let wraps = n > 1 && {
        let rows = t.promote().rows_of();
        rows[n - 2] < rows[n - 1]
    };
    Ok(DescentData::from_linear(descents, wraps))
}

/// Sum of the `i` lying strictly above `i + 1`; defined for any straight shape.
pub fn tableau_maj(t: &StandardTableau) -> usize {
    linear_tableau_descents(t).iter().sum()
}

fn linear_tableau_descents(t: &StandardTableau) -> BTreeSet<usize> {
    let rows = t.rows_of();
    (1..rows.len()).filter(|&i| rows[i - 1] < rows[i]).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    fn set(v: &[usize]) -> BTreeSet<usize> {
        v.iter().copied().collect()
    }

    #[test]
    fn generators() {
        let id = SignedPermutation::identity(2);
        let a = id.apply_generator(1).unwrap();
        assert_eq!(a.window(), &[-1, 2]);
        let b = a.apply_generator(2).unwrap();
        assert_eq!(b.window(), &[2, -1]);
        assert_eq!(
            SignedPermutation::from_word(2, &w("1212")).unwrap(),
            SignedPermutation::longest(2)
        );
        assert!(id.apply_generator(3).is_err());
        assert!(id.apply_generator(0).is_err());
    }

    #[test]
    fn lengths() {
        assert_eq!(SignedPermutation::identity(3).coxeter_length(), 0);
        assert_eq!(SignedPermutation::longest(3).coxeter_length(), 9);
        assert_eq!(
            SignedPermutation::new(vec![-1, 2])
                .unwrap()
                .coxeter_length(),
            1
        );
        for n in 1..=5 {
            assert_eq!(SignedPermutation::longest(n).coxeter_length(), n * n);
        }
    }

    /// The length function agrees with breadth-first distance in the Cayley
    /// graph for every element of `B_3`.
    #[test]
    fn length_is_word_metric() {
        use std::collections::{HashMap, VecDeque};
        let n = 3;
        let mut dist = HashMap::new();
        let mut queue = VecDeque::new();
        dist.insert(SignedPermutation::identity(n), 0usize);
        queue.push_back(SignedPermutation::identity(n));
        while let Some(x) = queue.pop_front() {
            let d = dist[&x];
            for i in 1..=n as u8 {
                let y = x.apply_generator(i).unwrap();
                if !dist.contains_key(&y) {
                    dist.insert(y.clone(), d + 1);
                    queue.push_back(y);
                }
            }
        }
        assert_eq!(dist.len(), 48);
        for (x, d) in dist {
            assert_eq!(x.coxeter_length(), d, "{x}");
            for i in 1..=n as u8 {
                let down = x.apply_generator(i).unwrap().coxeter_length() < d;
                assert_eq!(x.is_right_descent(i), down);
            }
        }
    }

    #[test]
    fn reduced_word_checks() {
        assert!(is_reduced_word_for_w0(&w("121323123"), 3));
        assert!(!is_reduced_word_for_w0(&w("111111111"), 3));
        assert!(!is_reduced_word_for_w0(&w("12132312"), 3));
        assert!(!is_reduced_word_for_w0(&w("121323124"), 3));
        let mut x = w("121323123");
        for _ in 0..9 {
            x = rotate(&x).unwrap();
            assert!(is_reduced_word_for_w0(&x, 3));
        }
    }

    #[test]
    fn enumeration_small() {
        assert_eq!(enumerate_reduced_words(1).unwrap(), vec![w("1")]);
        assert_eq!(
            enumerate_reduced_words(2).unwrap(),
            vec![w("1212"), w("2121")]
        );
        // brute force over all 16 words of length 4
        let brute = (0..16u32)
            .map(|bits| Word::new((0..4).map(|k| ((bits >> k) & 1) as u8 + 1).collect()).unwrap())
            .filter(|x| is_reduced_word_for_w0(x, 2))
            .collect::<BTreeSet<_>>();
        assert_eq!(brute, set_of(&["1212", "2121"]));
        let three = enumerate_reduced_words(3).unwrap();
        assert_eq!(three.len(), 42);
        assert!(three.windows(2).all(|p| p[0] < p[1]));
        assert!(three.iter().all(|x| is_reduced_word_for_w0(x, 3)));
        assert!(matches!(
            enumerate_reduced_words(5),
            Err(Error::GuardExceeded { .. })
        ));
    }

    fn set_of(v: &[&str]) -> BTreeSet<Word> {
        v.iter().map(|s| w(s)).collect()
    }

    #[test]
    fn rotation() {
        assert_eq!(rotate(&w("121323123")).unwrap(), w("213231231"));
        assert_eq!(rotate(&w("2")).unwrap(), w("2"));
        assert_eq!(rotate_by(&w("121323123"), 9).unwrap(), w("121323123"));
        assert!(matches!(rotate(&Word::default()), Err(Error::EmptyWord)));
        assert_eq!(rotate_by(&w("213213213"), 3).unwrap(), w("213213213"));
        assert_ne!(rotate(&w("213213213")).unwrap(), w("213213213"));
    }

    #[test]
    fn orbit_display_from_intro() {
        let expected = [
            "121323123",
            "213231231",
            "132312312",
            "323123121",
            "231231213",
            "312312132",
            "123121323",
            "231213231",
            "312132312",
        ];
        let mut x = w(expected[0]);
        for e in expected {
            assert_eq!(x, w(e));
            x = rotate(&x).unwrap();
        }
        assert_eq!(x, w(expected[0]));
    }

    #[test]
    fn word_descents() {
        let d = descent_data(&w("121323123"));
        assert_eq!(d.descents, set(&[2, 4, 6]));
        assert_eq!(d.maj, 12);
        let d = descent_data(&w("123456789"));
        assert!(d.descents.is_empty());
        assert_eq!(d.maj, 0);
        let d = descent_data(&w("132132132"));
        assert_eq!(d.cyclic_descents, set(&[0, 2, 3, 5, 6, 8]));
        assert_eq!(d.cyclic_maj(), 24);
        assert_eq!(d.maj, 24);
    }

    #[test]
    fn tableau_descents() {
        let t: StandardTableau = "125/368/479".parse().unwrap();
        let d = tableau_descent_data(&t).unwrap();
        assert_eq!(d.cyclic_descents, set(&[0, 2, 3, 5, 6, 8]));
        assert_eq!(d.maj, 24);
        let row: StandardTableau = "1,2,3,4,5,6,7,8,9,10".parse().unwrap();
        let d = tableau_descent_data(&row).unwrap();
        assert!(d.descents.is_empty());
        assert!(d.cyclic_descents.is_empty());
        let bad: StandardTableau = "12/3".parse().unwrap();
        assert!(tableau_descent_data(&bad).is_err());
    }
}
