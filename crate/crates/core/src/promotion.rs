//! Jeu de taquin promotion, the Δ operator, and shifted rectification.

use std::collections::{BTreeMap, HashMap};
use std::hash::Hash;

use rand::Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::tableau::{
    Partition, ShiftedStandardTableau, SkewShiftedTableau, StandardTableau, StrictPartition,
};

/// A filling of a straight or shifted diagram in which some cells may be
/// empty. Columns are absolute (shifted) and 0-indexed.
struct Grid {
    shifted: bool,
    rows: Vec<Vec<Option<u32>>>,
}

impl Grid {
    fn straight(rows: &[Vec<u32>]) -> Self {
        Self {
            shifted: false,
            rows: rows
                .iter()
                .map(|r| r.iter().copied().map(Some).collect())
                .collect(),
        }
    }

    fn shifted(rows: &[Vec<u32>]) -> Self {
        Self {
            shifted: true,
            ..Self::straight(rows)
        }
    }

    fn start(&self, r: usize) -> usize {
        if self.shifted {
            r
        } else {
            0
        }
    }

    fn cell(&self, r: usize, c: usize) -> Option<&Option<u32>> {
        let offset = c.checked_sub(self.start(r))?;
        self.rows.get(r)?.get(offset)
    }

    fn cell_mut(&mut self, r: usize, c: usize) -> &mut Option<u32> {
        let offset = c - self.start(r);
        &mut self.rows[r][offset]
    }

    fn value(&self, r: usize, c: usize) -> Option<u32> {
        self.cell(r, c).copied().flatten()
    }

    /// Moves the empty cell at `(r, c)` outward, each step swapping it with
    /// the smaller of its right and lower neighbours. Returns where it stops.
    fn slide_out(&mut self, mut r: usize, mut c: usize) -> (usize, usize) {
        loop {
            let right = self.value(r, c + 1);
            let below = self.value(r + 1, c);
            let (nr, nc, v) = match (right, below) {
                (None, None) => return (r, c),
                (Some(a), Some(b)) => {
                    debug_assert_ne!(a, b);
                    if a < b {
                        (r, c + 1, a)
                    } else {
                        (r + 1, c, b)
                    }
                }
                (Some(a), None) => (r, c + 1, a),
                (None, Some(b)) => (r + 1, c, b),
            };
            *self.cell_mut(r, c) = Some(v);
            *self.cell_mut(nr, nc) = None;
            (r, c) = (nr, nc);
        }
    }

    /// Reverse slide: the empty cell swaps with the larger of its left and
    /// upper neighbours until neither exists.
    fn slide_in(&mut self, mut r: usize, mut c: usize) -> (usize, usize) {
        loop {
            let left = c.checked_sub(1).and_then(|c| self.value(r, c));
            let above = r.checked_sub(1).and_then(|r| self.value(r, c));
            let (nr, nc, v) = match (left, above) {
                (None, None) => return (r, c),
                (Some(a), Some(b)) => {
                    if a > b {
                        (r, c - 1, a)
                    } else {
                        (r - 1, c, b)
                    }
                }
                (Some(a), None) => (r, c - 1, a),
                (None, Some(b)) => (r - 1, c, b),
            };
            *self.cell_mut(r, c) = Some(v);
            *self.cell_mut(nr, nc) = None;
            (r, c) = (nr, nc);
        }
    }

    fn map_values(&mut self, f: impl Fn(u32) -> u32) {
        for v in self.rows.iter_mut().flatten().flatten() {
            *v = f(*v);
        }
    }

    /// Removes the cell `(r, c)`, which must end its row and have nothing below.
    fn remove_corner(&mut self, r: usize, c: usize) {
        debug_assert_eq!(c + 1 - self.start(r), self.rows[r].len());
        self.rows[r].pop();
        while self.rows.last().is_some_and(Vec::is_empty) {
            self.rows.pop();
        }
    }

    fn into_filled(self) -> Vec<Vec<u32>> {
        self.rows
            .into_iter()
            .map(|r| {
                r.into_iter()
                    .map(|v| v.expect("no empty cells remain"))
                    .collect()
            })
            .collect()
    }

    fn size(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    /// Steps (1)-(2) of promotion: drop the 1, decrement, slide the hole out.
    fn delta(&mut self) -> (usize, usize) {
        let first = self.start(0);
        debug_assert_eq!(self.value(0, first), Some(1));
        *self.cell_mut(0, first) = None;
        self.map_values(|v| v - 1);
        self.slide_out(0, first)
    }

    fn promote(&mut self) {
        let n = self.size() as u32;
        let (r, c) = self.delta();
        *self.cell_mut(r, c) = Some(n);
    }

    fn promote_inverse(&mut self) {
        let n = self.size() as u32;
        let (r, c) = self.find(n).expect("largest entry present");
        *self.cell_mut(r, c) = None;
        let (r, c) = self.slide_in(r, c);
        debug_assert_eq!((r, c), (0, self.start(0)));
        self.map_values(|v| v + 1);
        *self.cell_mut(r, c) = Some(1);
    }

    fn find(&self, v: u32) -> Option<(usize, usize)> {
        self.rows.iter().enumerate().find_map(|(r, row)| {
            row.iter()
                .position(|&x| x == Some(v))
                .map(|k| (r, k + self.start(r)))
        })
    }
}

/// Tableaux that promotion acts on.
pub trait Promote: Sized {
    /// One jeu de taquin promotion step.
    fn promote(&self) -> Self;

    /// The inverse of [`Promote::promote`], computed by reverse sliding.
    fn promote_inverse(&self) -> Self;

    /// Promotion without the final refill: the remaining tableau on
    /// `shape - {hole}`, entries `1..N-1`.
    fn delta(&self) -> Delta<Self>;

    /// Applies promotion `k` times.
    fn promote_pow(&self, k: usize) -> Self
    where
        Self: Clone,
    {
        let mut t = self.clone();
        for _ in 0..k {
            t = t.promote();
        }
        t
    }
}

/// The result of Δ: a tableau of one fewer cell and the vacated outer
/// corner, 1-indexed (shifted column for shifted tableaux).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Delta<T> {
    pub tableau: T,
    pub hole: (usize, usize),
}

impl Promote for StandardTableau {
    fn promote(&self) -> Self {
        let mut g = Grid::straight(&self.rows);
        g.promote();
        StandardTableau::from_rows_unchecked(g.into_filled())
    }

    fn promote_inverse(&self) -> Self {
        let mut g = Grid::straight(&self.rows);
        g.promote_inverse();
        StandardTableau::from_rows_unchecked(g.into_filled())
    }

    fn delta(&self) -> Delta<Self> {
        let mut g = Grid::straight(&self.rows);
        let (r, c) = g.delta();
        g.remove_corner(r, c);
        Delta {
            tableau: StandardTableau::from_rows_unchecked(g.into_filled()),
            hole: (r + 1, c + 1),
        }
    }
}

impl Promote for ShiftedStandardTableau {
    fn promote(&self) -> Self {
        let mut g = Grid::shifted(&self.rows);
        g.promote();
        ShiftedStandardTableau::from_rows_unchecked(g.into_filled())
    }

    fn promote_inverse(&self) -> Self {
        let mut g = Grid::shifted(&self.rows);
        g.promote_inverse();
        ShiftedStandardTableau::from_rows_unchecked(g.into_filled())
    }

    fn delta(&self) -> Delta<Self> {
        let mut g = Grid::shifted(&self.rows);
        let (r, c) = g.delta();
        g.remove_corner(r, c);
        Delta {
            tableau: ShiftedStandardTableau::from_rows_unchecked(g.into_filled()),
            hole: (r + 1, c + 1),
        }
    }
}

impl Delta<StandardTableau> {
    /// Puts `N` into the hole, recovering the promotion.
    pub fn fill(&self) -> StandardTableau {
        let mut rows = self.tableau.rows.clone();
        let (r, c) = (self.hole.0 - 1, self.hole.1 - 1);
        if rows.len() == r {
            rows.push(Vec::new());
        }
        debug_assert_eq!(rows[r].len(), c);
        rows[r].push(self.tableau.size() as u32 + 1);
        StandardTableau::from_rows_unchecked(rows)
    }
}

impl Delta<ShiftedStandardTableau> {
    pub fn fill(&self) -> ShiftedStandardTableau {
        let mut rows = self.tableau.rows.clone();
        let r = self.hole.0 - 1;
        if rows.len() == r {
            rows.push(Vec::new());
        }
        debug_assert_eq!(rows[r].len() + r + 1, self.hole.1);
        rows[r].push(self.tableau.size() as u32 + 1);
        ShiftedStandardTableau::from_rows_unchecked(rows)
    }
}

/// Places a straight tableau with `ℓ` rows into shifted coordinates so that
/// every row starts in shifted column `ℓ`: outer shape `(λ_i + ℓ - i)`,
/// inner shape `(ℓ - i)`.
pub fn embed_straight(t: &StandardTableau) -> SkewShiftedTableau {
    let l = t.rows.len();
    let rows = t
        .rows
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut cells = vec![None; l - 1 - i];
            cells.extend(row.iter().copied().map(Some));
            cells
        })
        .collect();
    SkewShiftedTableau { rows }
}

/// Embeds an `n × n` square as the skew shifted shape
/// `(2n-1, ..., n) / (n-1, ..., 0)`.
pub fn embed_square(q: &StandardTableau) -> Result<SkewShiftedTableau> {
    if q.shape().square_side().is_none() {
        return Err(Error::InvalidShape(format!(
            "expected a square, got {:?}",
            q.shape().parts()
        )));
    }
    Ok(embed_straight(q))
}

/// Inner corners of the skew shape: empty cells whose right and lower
/// neighbours are filled or absent. 0-indexed `(row, column)`.
fn inner_corners(g: &Grid) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for (r, row) in g.rows.iter().enumerate() {
        let inner = row.iter().take_while(|v| v.is_none()).count();
        if inner == 0 {
            continue;
        }
        let c = g.start(r) + inner - 1;
        if g.cell(r + 1, c).is_none_or(Option::is_some) {
            out.push((r, c));
        }
    }
    out
}

fn rectify_by(
    s: &SkewShiftedTableau,
    mut choose: impl FnMut(&[(usize, usize)]) -> usize,
) -> ShiftedStandardTableau {
    let mut g = Grid {
        shifted: true,
        rows: s.rows.clone(),
    };
    loop {
        let corners = inner_corners(&g);
        if corners.is_empty() {
            break;
        }
        let (r, c) = corners[choose(&corners)];
        let (r, c) = g.slide_out(r, c);
        g.remove_corner(r, c);
    }
    ShiftedStandardTableau::from_rows_unchecked(g.into_filled())
}

/// Shifted jeu de taquin rectification, sliding the bottom-most inner corner first.
pub fn rectify(s: &SkewShiftedTableau) -> ShiftedStandardTableau {
    rectify_by(s, |corners| corners.len() - 1)
}

/// Rectification that picks each inner corner uniformly at random.
pub fn rectify_random<R: Rng + ?Sized>(
    s: &SkewShiftedTableau,
    rng: &mut R,
) -> ShiftedStandardTableau {
    rectify_by(s, |corners| rng.gen_range(0..corners.len()))
}

/// One orbit of a cyclic action, listed from its least element.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Orbit<T> {
    pub elements: Vec<T>,
}

impl<T> Orbit<T> {
    pub fn representative(&self) -> &T {
        &self.elements[0]
    }

    pub fn size(&self) -> usize {
        self.elements.len()
    }
}

/// Splits `items` into orbits of `action`, each starting at its least
/// element, sorted by representative.
pub fn orbits<T, F>(items: &[T], action: F) -> Result<Vec<Orbit<T>>>
where
    T: Clone + Ord + Hash,
    F: Fn(&T) -> T,
{
    let index: HashMap<&T, usize> = items.iter().enumerate().map(|(i, t)| (t, i)).collect();
    let mut seen = vec![false; items.len()];
    let mut out = Vec::new();
    for start in 0..items.len() {
        if seen[start] {
            continue;
        }
        let mut elements = Vec::new();
        let mut cur = start;
        while !seen[cur] {
            seen[cur] = true;
            elements.push(items[cur].clone());
            let next = action(&items[cur]);
            cur = *index.get(&next).ok_or_else(|| {
                Error::NotClosed(format!("image of element {} lies outside the set", cur))
            })?;
        }
        if cur != start {
            return Err(Error::NotClosed(format!(
                "element {start} does not return to itself; the action is not a permutation"
            )));
        }
        let least = (0..elements.len())
            .min_by(|&a, &b| elements[a].cmp(&elements[b]))
            .expect("orbits are nonempty");
        elements.rotate_left(least);
        out.push(Orbit { elements });
    }
    out.sort_by(|a, b| a.representative().cmp(b.representative()));
    Ok(out)
}

/// Orbit size → number of orbits of that size.
pub type Census = BTreeMap<usize, usize>;

pub fn census<T>(orbits: &[Orbit<T>]) -> Census {
    let mut out = Census::new();
    for o in orbits {
        *out.entry(o.size()).or_default() += 1;
    }
    out
}

/// One line of an orbit report: all orbits of a given size.
#[derive(Clone, Debug, Serialize)]
pub struct OrbitGroup<T> {
    pub orbit_size: usize,
    pub count: usize,
    pub representatives: Vec<T>,
}

pub fn group_by_size<T: Clone>(orbits: &[Orbit<T>]) -> Vec<OrbitGroup<T>> {
    let mut groups: BTreeMap<usize, Vec<T>> = BTreeMap::new();
    for o in orbits {
        groups
            .entry(o.size())
            .or_default()
            .push(o.representative().clone());
    }
    groups
        .into_iter()
        .map(|(orbit_size, representatives)| OrbitGroup {
            orbit_size,
            count: representatives.len(),
            representatives,
        })
        .collect()
}

/// Convenience: the square of side `n` and the doubled staircase of rank `n`.
pub fn square_and_staircase(n: usize) -> (Partition, StrictPartition) {
    (Partition::square(n), StrictPartition::doubled_staircase(n))
}
