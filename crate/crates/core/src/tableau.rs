//! Shapes and standard fillings of straight and shifted diagrams.
//!
//! Rows are stored top row first. Cell coordinates exposed through the
//! public API are 1-indexed `(row, column)` pairs; for shifted shapes the
//! column is the shifted column, so row `i` starts at column `i`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::One;
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Default refusal threshold for exhaustive enumerations, in number of elements.
pub const DEFAULT_MAX_ELEMENTS: u128 = 1_000_000;

/// A partition, as a weakly decreasing list of positive parts.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidShape(format!("{parts:?} has a zero part")));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidShape(format!(
                "{parts:?} is not weakly decreasing"
            )));
        }
        Ok(Self(parts))
    }

    /// The `rows × cols` rectangle.
    pub fn rectangle(rows: usize, cols: usize) -> Self {
        if cols == 0 {
            return Self(Vec::new());
        }
        Self(vec![cols; rows])
    }

    pub fn square(n: usize) -> Self {
        Self::rectangle(n, n)
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn num_rows(&self) -> usize {
        self.0.len()
    }

    /// Side length if the shape is an `n × n` square.
    pub fn square_side(&self) -> Option<usize> {
        let n = self.0.len();
        self.0.iter().all(|&p| p == n).then_some(n)
    }

    /// Length of column `col` (0-indexed).
    pub fn column_length(&self, col: usize) -> usize {
        self.0.iter().take_while(|&&p| p > col).count()
    }
}

/// A partition with distinct parts; the shape of a shifted diagram.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct StrictPartition(Vec<usize>);

impl StrictPartition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidShape(format!("{parts:?} has a zero part")));
        }
        if parts.windows(2).any(|w| w[0] <= w[1]) {
            return Err(Error::InvalidShape(format!(
                "{parts:?} is not strictly decreasing"
            )));
        }
        Ok(Self(parts))
    }

    /// `(2n-1, 2n-3, ..., 1)`.
    pub fn doubled_staircase(n: usize) -> Self {
        Self((1..=n).rev().map(|i| 2 * i - 1).collect())
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn num_rows(&self) -> usize {
        self.0.len()
    }

    /// Rank `n` if this is the doubled staircase of rank `n`.
    pub fn staircase_rank(&self) -> Option<usize> {
        let n = self.0.len();
        (*self == Self::doubled_staircase(n)).then_some(n)
    }
}

/// Hook lengths of every cell, row by row.
pub fn hook_lengths(shape: &Partition) -> Vec<Vec<usize>> {
    let parts = shape.parts();
    parts
        .iter()
        .enumerate()
        .map(|(i, &len)| {
            (0..len)
                .map(|j| {
                    let arm = len - j - 1;
                    let leg = shape.column_length(j) - i - 1;
                    arm + leg + 1
                })
                .collect()
        })
        .collect()
}

/// `N! / ∏ h` computed exactly.
pub fn hook_length_count(shape: &Partition) -> BigUint {
    let mut num = BigUint::one();
    for k in 2..=shape.size() {
        num *= k;
    }
    let den = hook_lengths(shape)
        .into_iter()
        .flatten()
        .fold(BigUint::one(), |acc, h| acc * h);
    num / den
}

/// Number of shifted standard tableaux, by the shifted hook formula
/// `N!/∏λ_i! · ∏_{i<j} (λ_i-λ_j)/(λ_i+λ_j)`.
pub fn shifted_count(shape: &StrictPartition) -> BigUint {
    let parts = shape.parts();
    let mut num = BigUint::one();
    for k in 2..=shape.size() {
        num *= k;
    }
    let mut den = BigUint::one();
    for &p in parts {
        for k in 2..=p {
            den *= k;
        }
    }
    for i in 0..parts.len() {
        for j in i + 1..parts.len() {
            num *= parts[i] - parts[j];
            den *= parts[i] + parts[j];
        }
    }
    num / den
}

fn guard(what: &str, count: &BigUint, limit: u128) -> Result<()> {
    let requested = u128::try_from(count).unwrap_or(u128::MAX);
    if requested > limit {
        return Err(Error::GuardExceeded {
            what: what.to_string(),
            requested,
            limit,
        });
    }
    Ok(())
}

fn check_standard_entries(rows: &[Vec<u32>]) -> Result<()> {
    let n: usize = rows.iter().map(Vec::len).sum();
    let mut seen = vec![false; n + 1];
    for &v in rows.iter().flatten() {
        let v = v as usize;
        if v == 0 || v > n || seen[v] {
            return Err(Error::InvalidTableau(format!(
                "entries must be exactly 1..={n}, found {v} out of place"
            )));
        }
        seen[v] = true;
    }
    Ok(())
}

/// A standard Young tableau of straight shape.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct StandardTableau {
    pub(crate) rows: Vec<Vec<u32>>,
}

impl StandardTableau {
    pub fn new(rows: Vec<Vec<u32>>) -> Result<Self> {
        let lens = rows.iter().map(Vec::len).collect::<Vec<_>>();
        Partition::new(lens)?;
        check_standard_entries(&rows)?;
        for (i, row) in rows.iter().enumerate() {
            if row.windows(2).any(|w| w[0] >= w[1]) {
                return Err(Error::InvalidTableau(format!(
                    "row {} not increasing",
                    i + 1
                )));
            }
            if i > 0 && row.iter().zip(&rows[i - 1]).any(|(b, a)| a >= b) {
                return Err(Error::InvalidTableau(format!(
                    "column strictness fails in row {}",
                    i + 1
                )));
            }
        }
        Ok(Self { rows })
    }

    pub(crate) fn from_rows_unchecked(rows: Vec<Vec<u32>>) -> Self {
        debug_assert!(Self::new(rows.clone()).is_ok(), "invalid tableau {rows:?}");
        Self { rows }
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    pub fn shape(&self) -> Partition {
        Partition(self.rows.iter().map(Vec::len).collect())
    }

    pub fn size(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    /// Entry at 1-indexed `(row, col)`.
    pub fn get(&self, row: usize, col: usize) -> Option<u32> {
        self.rows
            .get(row.checked_sub(1)?)?
            .get(col.checked_sub(1)?)
            .copied()
    }

    /// 1-indexed `(row, col)` of `entry`.
    pub fn position(&self, entry: u32) -> Option<(usize, usize)> {
        self.rows
            .iter()
            .enumerate()
            .find_map(|(i, row)| row.iter().position(|&v| v == entry).map(|j| (i + 1, j + 1)))
    }

    /// 1-indexed row of each entry: `rows_of()[k]` is the row of `k + 1`.
    pub fn rows_of(&self) -> Vec<usize> {
        let mut out = vec![0; self.size()];
        for (i, row) in self.rows.iter().enumerate() {
            for &v in row {
                out[v as usize - 1] = i + 1;
            }
        }
        out
    }
}

/// A standard tableau of shifted shape: row `i` occupies shifted columns
/// `i ..= i + λ_i - 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ShiftedStandardTableau {
    pub(crate) rows: Vec<Vec<u32>>,
}

impl ShiftedStandardTableau {
    pub fn new(rows: Vec<Vec<u32>>) -> Result<Self> {
        let lens = rows.iter().map(Vec::len).collect::<Vec<_>>();
        StrictPartition::new(lens)?;
        check_standard_entries(&rows)?;
        for (i, row) in rows.iter().enumerate() {
            if row.windows(2).any(|w| w[0] >= w[1]) {
                return Err(Error::InvalidTableau(format!(
                    "row {} not increasing",
                    i + 1
                )));
            }
            if i > 0 {
                // cell k of row i sits under cell k + 1 of row i - 1
                let above = &rows[i - 1];
                if row.iter().enumerate().any(|(k, &b)| above[k + 1] >= b) {
                    return Err(Error::InvalidTableau(format!(
                        "column strictness fails in row {}",
                        i + 1
                    )));
                }
            }
        }
        Ok(Self { rows })
    }

    pub(crate) fn from_rows_unchecked(rows: Vec<Vec<u32>>) -> Self {
        debug_assert!(
            Self::new(rows.clone()).is_ok(),
            "invalid shifted tableau {rows:?}"
        );
        Self { rows }
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    pub fn shape(&self) -> StrictPartition {
        StrictPartition(self.rows.iter().map(Vec::len).collect())
    }

    pub fn size(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    /// Entry at 1-indexed `(row, shifted column)`.
    pub fn get(&self, row: usize, col: usize) -> Option<u32> {
        let r = row.checked_sub(1)?;
        let offset = col.checked_sub(row)?;
        self.rows.get(r)?.get(offset).copied()
    }

    /// 1-indexed `(row, shifted column)` of `entry`.
    pub fn position(&self, entry: u32) -> Option<(usize, usize)> {
        self.rows.iter().enumerate().find_map(|(i, row)| {
            row.iter()
                .position(|&v| v == entry)
                .map(|j| (i + 1, i + j + 1))
        })
    }
}

/// A standard filling of the shifted skew shape `outer / inner`.
///
/// `inner` has one entry per row of `outer` (zeros allowed) and its nonzero
/// parts must be strictly decreasing. Inner cells are stored as `None`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SkewShiftedTableau {
    pub(crate) rows: Vec<Vec<Option<u32>>>,
}

impl SkewShiftedTableau {
    pub fn new(outer: &StrictPartition, inner: &[usize], filled: Vec<Vec<u32>>) -> Result<Self> {
        if inner.len() != outer.num_rows() || filled.len() != outer.num_rows() {
            return Err(Error::InvalidShape(
                "inner, outer and rows must have equal length".into(),
            ));
        }
        let nonzero = inner.iter().copied().filter(|&p| p > 0).collect::<Vec<_>>();
        if nonzero.len() != inner.iter().take_while(|&&p| p > 0).count() {
            return Err(Error::InvalidShape(format!(
                "inner {inner:?} has an interior zero"
            )));
        }
        StrictPartition::new(nonzero)?;
        let mut rows = Vec::with_capacity(filled.len());
        for (i, ((&o, &p), fill)) in outer.parts().iter().zip(inner).zip(filled).enumerate() {
            if p > o || fill.len() != o - p {
                return Err(Error::InvalidShape(format!(
                    "row {} has the wrong length",
                    i + 1
                )));
            }
            let mut row = vec![None; p];
            row.extend(fill.into_iter().map(Some));
            rows.push(row);
        }
        let t = Self { rows };
        t.validate()?;
        Ok(t)
    }

    fn validate(&self) -> Result<()> {
        let filled = self
            .rows
            .iter()
            .flatten()
            .flatten()
            .copied()
            .collect::<Vec<_>>();
        check_standard_entries(&[filled])?;
        for (i, row) in self.rows.iter().enumerate() {
            let vals = row.iter().flatten().collect::<Vec<_>>();
            if vals.windows(2).any(|w| w[0] >= w[1]) {
                return Err(Error::InvalidTableau(format!(
                    "row {} not increasing",
                    i + 1
                )));
            }
            if i > 0 {
                for (k, &b) in row.iter().enumerate() {
                    match (self.rows[i - 1][k + 1], b) {
                        (Some(a), Some(b)) if a >= b => {
                            return Err(Error::InvalidTableau(format!(
                                "column strictness fails in row {}",
                                i + 1
                            )))
                        }
                        (Some(_), None) => {
                            return Err(Error::InvalidShape(
                                "inner shape is not an order ideal".into(),
                            ))
                        }
                        _ => {}
                    }
                }
            }
        }
        Ok(())
    }

    pub fn outer(&self) -> StrictPartition {
        StrictPartition(self.rows.iter().map(Vec::len).collect())
    }

    /// Inner row lengths, one per row (zeros included).
    pub fn inner(&self) -> Vec<usize> {
        self.rows
            .iter()
            .map(|r| r.iter().take_while(|c| c.is_none()).count())
            .collect()
    }

    /// Entry at 1-indexed `(row, shifted column)`; `Some(None)` is an inner cell.
    pub fn get(&self, row: usize, col: usize) -> Option<Option<u32>> {
        let r = row.checked_sub(1)?;
        let offset = col.checked_sub(row)?;
        self.rows.get(r)?.get(offset).copied()
    }

    pub fn rows(&self) -> &[Vec<Option<u32>>] {
        &self.rows
    }
}

/// All standard tableaux of `shape`, sorted by row reading.
pub fn enumerate_syt(shape: &Partition) -> Result<Vec<StandardTableau>> {
    enumerate_syt_with_limit(shape, DEFAULT_MAX_ELEMENTS)
}

pub fn enumerate_syt_with_limit(shape: &Partition, limit: u128) -> Result<Vec<StandardTableau>> {
    guard("standard tableaux", &hook_length_count(shape), limit)?;
    let parts = shape.parts();
    let mut rows: Vec<Vec<u32>> = parts.iter().map(|&p| Vec::with_capacity(p)).collect();
    let mut out = Vec::new();
    place_straight(parts, &mut rows, 1, shape.size() as u32, &mut out);
    out.sort();
    Ok(out)
}

fn place_straight(
    parts: &[usize],
    rows: &mut [Vec<u32>],
    next: u32,
    total: u32,
    out: &mut Vec<StandardTableau>,
) {
    if next > total {
        out.push(StandardTableau {
            rows: rows.to_vec(),
        });
        return;
    }
    for r in 0..parts.len() {
        let len = rows[r].len();
        if len < parts[r] && (r == 0 || rows[r - 1].len() > len) {
            rows[r].push(next);
            place_straight(parts, rows, next + 1, total, out);
            rows[r].pop();
        }
    }
}

/// All standard tableaux of shifted `shape`, sorted by row reading.
pub fn enumerate_shifted_syt(shape: &StrictPartition) -> Result<Vec<ShiftedStandardTableau>> {
    enumerate_shifted_syt_with_limit(shape, DEFAULT_MAX_ELEMENTS)
}

pub fn enumerate_shifted_syt_with_limit(
    shape: &StrictPartition,
    limit: u128,
) -> Result<Vec<ShiftedStandardTableau>> {
    guard("shifted standard tableaux", &shifted_count(shape), limit)?;
    let parts = shape.parts();
    let mut rows: Vec<Vec<u32>> = parts.iter().map(|&p| Vec::with_capacity(p)).collect();
    let mut out = Vec::new();
    place_shifted(parts, &mut rows, 1, shape.size() as u32, &mut out);
    out.sort();
    Ok(out)
}

fn place_shifted(
    parts: &[usize],
    rows: &mut [Vec<u32>],
    next: u32,
    total: u32,
    out: &mut Vec<ShiftedStandardTableau>,
) {
    if next > total {
        out.push(ShiftedStandardTableau {
            rows: rows.to_vec(),
        });
        return;
    }
    for r in 0..parts.len() {
        let len = rows[r].len();
        if len < parts[r] && (r == 0 || rows[r - 1].len() >= len + 2) {
            rows[r].push(next);
            place_shifted(parts, rows, next + 1, total, out);
            rows[r].pop();
        }
    }
}

/// A uniformly random standard tableau of `shape`, by the hook walk.
pub fn random_syt<R: Rng + ?Sized>(shape: &Partition, rng: &mut R) -> StandardTableau {
    let mut parts = shape.parts().to_vec();
    let mut grid: Vec<Vec<u32>> = parts.iter().map(|&p| vec![0; p]).collect();
    for entry in (1..=shape.size() as u32).rev() {
        let cells = parts.iter().sum::<usize>();
        let mut pick = rng.gen_range(0..cells);
        let (mut i, mut j) = (0, 0);
        for (r, &p) in parts.iter().enumerate() {
            if pick < p {
                (i, j) = (r, pick);
                break;
            }
            pick -= p;
        }
        loop {
            let arm = parts[i] - j - 1;
            let leg = parts.iter().take_while(|&&p| p > j).count() - i - 1;
            if arm + leg == 0 {
                break;
            }
            let step = rng.gen_range(0..arm + leg);
            if step < arm {
                j += step + 1;
            } else {
                i += step - arm + 1;
            }
        }
        grid[i][j] = entry;
        parts[i] -= 1;
        if parts[i] == 0 {
            parts.pop();
        }
    }
    StandardTableau::from_rows_unchecked(grid)
}

fn write_rows(f: &mut fmt::Formatter<'_>, rows: &[Vec<u32>]) -> fmt::Result {
    let wide = rows.iter().flatten().any(|&v| v > 9);
    for (i, row) in rows.iter().enumerate() {
        if i > 0 {
            f.write_str("/")?;
        }
        for (k, v) in row.iter().enumerate() {
            if wide && k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
    }
    // a single column has no separators, so mark it as comma notation
    if wide && rows.iter().all(|r| r.len() <= 1) {
        f.write_str(",")?;
    }
    Ok(())
}

fn parse_rows(s: &str) -> Result<Vec<Vec<u32>>> {
    let s = s.trim();
    if s.starts_with('[') {
        return serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()));
    }
    let wide = s.contains(',');
    s.split('/')
        .map(|row| {
            let row = row.trim();
            if wide {
                let row = row.strip_suffix(',').unwrap_or(row);
                row.split(',')
                    .map(|t| {
                        t.trim()
                            .parse()
                            .map_err(|_| Error::Parse(format!("bad entry {t:?}")))
                    })
                    .collect()
            } else {
                row.chars()
                    .map(|c| {
                        c.to_digit(10)
                            .filter(|&d| d > 0)
                            .ok_or_else(|| Error::Parse(format!("bad entry {c:?}")))
                    })
                    .collect()
            }
        })
        .collect()
}

/// Compact row notation: `1248/367/5`, or comma-separated entries once any
/// entry exceeds 9.
impl fmt::Display for StandardTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_rows(f, &self.rows)
    }
}

impl fmt::Display for ShiftedStandardTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_rows(f, &self.rows)
    }
}

impl FromStr for StandardTableau {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Self::new(parse_rows(s)?)
    }
}

impl FromStr for ShiftedStandardTableau {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Self::new(parse_rows(s)?)
    }
}

#[derive(Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
enum Kind {
    Straight,
    Shifted,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct TableauRecord {
    kind: Kind,
    shape: Vec<usize>,
    rows: Vec<Vec<u32>>,
}

fn check_record_shape(rec: &TableauRecord) -> Result<()> {
    let lens = rec.rows.iter().map(Vec::len).collect::<Vec<_>>();
    if lens != rec.shape {
        return Err(Error::InvalidTableau(format!(
            "declared shape {:?} does not match rows {lens:?}",
            rec.shape
        )));
    }
    Ok(())
}

/// Either kind of tableau, as carried by the canonical JSON form
/// `{"kind":"straight"|"shifted","shape":[...],"rows":[[...],...]}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum AnyTableau {
    Straight(StandardTableau),
    Shifted(ShiftedStandardTableau),
}

impl AnyTableau {
    pub fn to_json(&self) -> String {
        let rec = match self {
            AnyTableau::Straight(t) => TableauRecord {
                kind: Kind::Straight,
                shape: t.shape().0,
                rows: t.rows.clone(),
            },
            AnyTableau::Shifted(t) => TableauRecord {
                kind: Kind::Shifted,
                shape: t.shape().0,
                rows: t.rows.clone(),
            },
        };
        serde_json::to_string(&rec).expect("tableau records always serialize")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let rec: TableauRecord = serde_json::from_str(text)?;
        check_record_shape(&rec)?;
        Ok(match rec.kind {
            Kind::Straight => AnyTableau::Straight(StandardTableau::new(rec.rows)?),
            Kind::Shifted => AnyTableau::Shifted(ShiftedStandardTableau::new(rec.rows)?),
        })
    }
}

impl StandardTableau {
    pub fn to_json(&self) -> String {
        AnyTableau::Straight(self.clone()).to_json()
    }

    pub fn from_json(text: &str) -> Result<Self> {
        match AnyTableau::from_json(text)? {
            AnyTableau::Straight(t) => Ok(t),
            AnyTableau::Shifted(_) => Err(Error::Parse("expected a straight tableau".into())),
        }
    }
}

impl ShiftedStandardTableau {
    pub fn to_json(&self) -> String {
        AnyTableau::Shifted(self.clone()).to_json()
    }

    pub fn from_json(text: &str) -> Result<Self> {
        match AnyTableau::from_json(text)? {
            AnyTableau::Shifted(t) => Ok(t),
            AnyTableau::Straight(_) => Err(Error::Parse("expected a shifted tableau".into())),
        }
    }
}

impl Serialize for StandardTableau {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        TableauRecord {
            kind: Kind::Straight,
            shape: self.shape().0,
            rows: self.rows.clone(),
        }
        .serialize(s)
    }
}

impl Serialize for ShiftedStandardTableau {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        TableauRecord {
            kind: Kind::Shifted,
            shape: self.shape().0,
            rows: self.rows.clone(),
        }
        .serialize(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn syt(rows: &[&[u32]]) -> StandardTableau {
        StandardTableau::new(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    /// Independent count: fill cells one entry at a time, branching on every
    /// legal cell, without the row-major bookkeeping used by the enumerator.
    fn brute_count(parts: &[usize], shifted: bool) -> usize {
        fn go(parts: &[usize], fill: &mut Vec<usize>, left: usize, shifted: bool) -> usize {
            if left == 0 {
                return 1;
            }
            let mut total = 0;
            for r in 0..parts.len() {
                if fill[r] == parts[r] {
                    continue;
                }
                let col = if shifted { r + fill[r] } else { fill[r] };
                let above_ok = r == 0 || {
                    let start = if shifted { r - 1 } else { 0 };
                    col < start + fill[r - 1]
                };
                if above_ok {
                    fill[r] += 1;
                    total += go(parts, fill, left - 1, shifted);
                    fill[r] -= 1;
                }
            }
            total
        }
        let mut fill = vec![0; parts.len()];
        go(parts, &mut fill, parts.iter().sum(), shifted)
    }

    #[test]
    fn hooks() {
        assert_eq!(
            hook_lengths(&Partition::square(2)),
            vec![vec![3, 2], vec![2, 1]]
        );
        assert_eq!(hook_lengths(&Partition::square(1)), vec![vec![1]]);
        assert_eq!(
            hook_lengths(&Partition::square(3)),
            vec![vec![5, 4, 3], vec![4, 3, 2], vec![3, 2, 1]]
        );
        assert_eq!(
            hook_lengths(&Partition::new(vec![4, 3, 1]).unwrap()),
            vec![vec![6, 4, 3, 1], vec![4, 2, 1], vec![1]]
        );
    }

    #[test]
    fn shape_validation() {
        assert!(Partition::new(vec![2, 3]).is_err());
        assert!(Partition::new(vec![2, 0]).is_err());
        assert!(StrictPartition::new(vec![3, 3]).is_err());
        assert_eq!(StrictPartition::doubled_staircase(3).parts(), &[5, 3, 1]);
        assert_eq!(
            StrictPartition::doubled_staircase(3).staircase_rank(),
            Some(3)
        );
        assert_eq!(Partition::square(4).square_side(), Some(4));
        assert_eq!(Partition::new(vec![2, 1]).unwrap().square_side(), None);
    }

    #[test]
    fn tableau_validation() {
        assert!(StandardTableau::new(vec![vec![1, 3], vec![2, 4]]).is_ok());
        assert!(StandardTableau::new(vec![vec![1, 2], vec![4, 3]]).is_err());
        assert!(StandardTableau::new(vec![vec![1, 4], vec![2, 3]]).is_err());
        assert!(StandardTableau::new(vec![vec![1, 1]]).is_err());
        assert!(ShiftedStandardTableau::new(vec![vec![1, 2, 4], vec![3]]).is_ok());
        assert!(ShiftedStandardTableau::new(vec![vec![1, 3, 4], vec![2]]).is_err());
        assert!(ShiftedStandardTableau::new(vec![vec![1, 2], vec![3, 4]]).is_err());
    }

    #[test]
    fn counts_small() {
        assert_eq!(enumerate_syt(&Partition::square(1)).unwrap().len(), 1);
        assert_eq!(enumerate_syt(&Partition::square(2)).unwrap().len(), 2);
        assert_eq!(brute_count(&[2, 2], false), 2);
        assert_eq!(enumerate_syt(&Partition::square(3)).unwrap().len(), 42);
        let one = StrictPartition::new(vec![1]).unwrap();
        assert_eq!(enumerate_shifted_syt(&one).unwrap().len(), 1);
        let s31 = StrictPartition::new(vec![3, 1]).unwrap();
        assert_eq!(enumerate_shifted_syt(&s31).unwrap().len(), 2);
        assert_eq!(brute_count(&[3, 1], true), 2);
        assert_eq!(
            enumerate_shifted_syt(&StrictPartition::doubled_staircase(3))
                .unwrap()
                .len(),
            42
        );
    }

    #[test]
    fn counts_match_formulas_and_brute_force() {
        for parts in [
            vec![3, 3, 3],
            vec![4, 3, 1],
            vec![3, 2],
            vec![4, 4],
            vec![2, 2, 1, 1],
        ] {
            let shape = Partition::new(parts.clone()).unwrap();
            let n = enumerate_syt(&shape).unwrap().len();
            assert_eq!(BigUint::from(n), hook_length_count(&shape), "{parts:?}");
            assert_eq!(n, brute_count(&parts, false));
        }
        for parts in [vec![5, 3, 1], vec![4, 2, 1], vec![6, 3], vec![5, 4, 2]] {
            let shape = StrictPartition::new(parts.clone()).unwrap();
            let n = enumerate_shifted_syt(&shape).unwrap().len();
            assert_eq!(BigUint::from(n), shifted_count(&shape), "{parts:?}");
            assert_eq!(n, brute_count(&parts, true));
        }
    }

    #[test]
    fn enumeration_is_sorted_and_valid() {
        let all = enumerate_syt(&Partition::square(3)).unwrap();
        assert!(all.windows(2).all(|w| w[0] < w[1]));
        for t in &all {
            StandardTableau::new(t.rows.clone()).unwrap();
        }
        assert_eq!(all[0], syt(&[&[1, 2, 3], &[4, 5, 6], &[7, 8, 9]]));
        let shifted = enumerate_shifted_syt(&StrictPartition::doubled_staircase(3)).unwrap();
        for t in &shifted {
            ShiftedStandardTableau::new(t.rows.clone()).unwrap();
        }
    }

    #[test]
    fn guard_refuses_five_by_five() {
        let err = enumerate_syt(&Partition::square(5)).unwrap_err();
        assert!(
            matches!(
                err,
                Error::GuardExceeded {
                    requested: 701_149_020,
                    ..
                }
            ),
            "{err}"
        );
        let err = enumerate_shifted_syt(&StrictPartition::doubled_staircase(5)).unwrap_err();
        assert!(
            matches!(
                err,
                Error::GuardExceeded {
                    requested: 701_149_020,
                    ..
                }
            ),
            "{err}"
        );
    }

    #[test]
    fn json_examples() {
        let t = syt(&[&[1, 2, 5], &[3, 6, 8], &[4, 7, 9]]);
        assert_eq!(
            t.to_json(),
            r#"{"kind":"straight","shape":[3,3,3],"rows":[[1,2,5],[3,6,8],[4,7,9]]}"#
        );
        assert_eq!(
            syt(&[&[1]]).to_json(),
            r#"{"kind":"straight","shape":[1],"rows":[[1]]}"#
        );
        let s =
            ShiftedStandardTableau::new(vec![vec![1, 2, 4, 5, 8], vec![3, 6, 9], vec![7]]).unwrap();
        assert_eq!(
            s.to_json(),
            r#"{"kind":"shifted","shape":[5,3,1],"rows":[[1,2,4,5,8],[3,6,9],[7]]}"#
        );
        assert_eq!(serde_json::to_string(&s).unwrap(), s.to_json());
    }

    #[test]
    fn json_errors() {
        assert!(matches!(AnyTableau::from_json("{"), Err(Error::Json(_))));
        let bad_shape = r#"{"kind":"straight","shape":[2,1],"rows":[[1,2],[3,4]]}"#;
        assert!(matches!(
            AnyTableau::from_json(bad_shape),
            Err(Error::InvalidTableau(_))
        ));
        let not_standard = r#"{"kind":"straight","shape":[2,2],"rows":[[1,4],[2,3]]}"#;
        assert!(matches!(
            AnyTableau::from_json(not_standard),
            Err(Error::InvalidTableau(_))
        ));
        let wrong_kind = r#"{"kind":"shifted","shape":[1],"rows":[[1]]}"#;
        assert!(StandardTableau::from_json(wrong_kind).is_err());
    }

    #[test]
    fn json_round_trip_exhaustive() {
        for n in 1..=4 {
            for t in enumerate_syt(&Partition::square(n)).unwrap() {
                assert_eq!(StandardTableau::from_json(&t.to_json()).unwrap(), t);
            }
            for t in enumerate_shifted_syt(&StrictPartition::doubled_staircase(n)).unwrap() {
                assert_eq!(ShiftedStandardTableau::from_json(&t.to_json()).unwrap(), t);
            }
        }
    }

    #[test]
    fn compact_notation() {
        let t: StandardTableau = "1248/367/5".parse().unwrap();
        assert_eq!(t.to_string(), "1248/367/5");
        let t: StandardTableau = "1,2,3,4/5,6,7,8/9,10,11,12/13,14,15,16".parse().unwrap();
        assert_eq!(t.to_string(), "1,2,3,4/5,6,7,8/9,10,11,12/13,14,15,16");
        let t: StandardTableau = "1,2,3,4,5,6,7,8,9/10".parse().unwrap();
        assert_eq!(t.to_string().parse::<StandardTableau>().unwrap(), t);
        let column = StandardTableau::new((1..=10).map(|v| vec![v]).collect()).unwrap();
        assert_eq!(column.to_string(), "1/2/3/4/5/6/7/8/9/10,");
        assert_eq!(
            column.to_string().parse::<StandardTableau>().unwrap(),
            column
        );
        assert!("1,,2".parse::<StandardTableau>().is_err());
        assert!("12/0".parse::<StandardTableau>().is_err());
        let s: ShiftedStandardTableau = "[[1,2,4,5,8],[3,6,9],[7]]".parse().unwrap();
        assert_eq!(s.to_string(), "12458/369/7");
        assert_eq!(s.get(2, 2), Some(3));
        assert_eq!(s.get(3, 3), Some(7));
        assert_eq!(s.position(9), Some((2, 4)));
    }

    #[test]
    fn skew_shape_checks() {
        let outer = StrictPartition::new(vec![5, 4, 3]).unwrap();
        let s = SkewShiftedTableau::new(
            &outer,
            &[2, 1, 0],
            vec![vec![1, 2, 5], vec![3, 6, 8], vec![4, 7, 9]],
        )
        .unwrap();
        assert_eq!(s.inner(), vec![2, 1, 0]);
        assert_eq!(s.get(1, 3), Some(Some(1)));
        assert_eq!(s.get(2, 2), Some(None));
        assert!(SkewShiftedTableau::new(
            &outer,
            &[1, 1, 0],
            vec![vec![1; 4], vec![2; 3], vec![3; 3]]
        )
        .is_err());
    }

    #[test]
    fn hook_walk_is_valid_and_covers_shape() {
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        let shape = Partition::square(3);
        let mut seen = std::collections::HashSet::new();
        for _ in 0..2000 {
            let t = random_syt(&shape, &mut rng);
            StandardTableau::new(t.rows.clone()).unwrap();
            seen.insert(t);
        }
        assert_eq!(seen.len(), 42);
        let t = random_syt(&Partition::square(5), &mut rng);
        assert!(StandardTableau::new(t.rows.clone()).is_ok());
    }
}
