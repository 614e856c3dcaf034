//! Fixed-point counting, orbit censuses and cyclic sieving checks for the
//! three rank-`n` sets: reduced words under rotation, square tableaux under
//! promotion, and doubled-staircase shifted tableaux under promotion.

use std::fmt;
use std::hash::Hash;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use rayon::prelude::*;
use serde::{Deserialize, Serialize, Serializer};

use crate::bn::{enumerate_reduced_words_with_limit, rotate, MAX_EXHAUSTIVE_RANK};
use crate::error::{Error, Result};
use crate::haiman::{h, phi, psi};
use crate::promotion::{census, orbits, Census, Promote};
use crate::qpoly::{
    eval_at_root, kappa, maj_gf_words, q_hook_rectangle, shift_down, Coeffs, IntPolynomial,
};
use crate::tableau::{
    enumerate_shifted_syt, enumerate_syt, Partition, ShiftedStandardTableau, StandardTableau,
    StrictPartition, DEFAULT_MAX_ELEMENTS,
};
use crate::word::Word;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SetId {
    ReducedWords,
    SquareTableaux,
    StaircaseTableaux,
}

impl SetId {
    pub const ALL: [SetId; 3] = [
        SetId::ReducedWords,
        SetId::SquareTableaux,
        SetId::StaircaseTableaux,
    ];

    pub fn name(self) -> &'static str {
        match self {
            SetId::ReducedWords => "reduced-words",
            SetId::SquareTableaux => "square-tableaux",
            SetId::StaircaseTableaux => "staircase-tableaux",
        }
    }

    pub fn action_name(self) -> &'static str {
        match self {
            SetId::ReducedWords => "rotate",
            _ => "promote",
        }
    }
}

impl fmt::Display for SetId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for SetId {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        SetId::ALL
            .into_iter()
            .find(|id| id.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown set {s:?}")))
    }
}

/// A named set of rank `n` with its cyclic action of order `n²`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct CyclicActionSpec {
    pub set: SetId,
    pub n: usize,
}

impl CyclicActionSpec {
    pub fn new(set: SetId, n: usize) -> Self {
        Self { set, n }
    }

    pub fn order(&self) -> usize {
        self.n * self.n
    }
}

/// Elements carrying a cyclic action.
pub trait CyclicElement: Clone + Eq + Hash + Ord + Send + Sync {
    fn act(&self) -> Self;
}

impl CyclicElement for Word {
    fn act(&self) -> Self {
        rotate(self).expect("set elements are nonempty words")
    }
}

impl CyclicElement for StandardTableau {
    fn act(&self) -> Self {
        self.promote()
    }
}

impl CyclicElement for ShiftedStandardTableau {
    fn act(&self) -> Self {
        self.promote()
    }
}

/// The enumerated elements of a [`CyclicActionSpec`].
#[derive(Clone, Debug)]
pub enum ActionSet {
    Words(Vec<Word>),
    Squares(Vec<StandardTableau>),
    Staircases(Vec<ShiftedStandardTableau>),
}

impl ActionSet {
    pub fn enumerate(spec: CyclicActionSpec) -> Result<Self> {
        Self::enumerate_with_limit(spec, MAX_EXHAUSTIVE_RANK)
    }

    pub fn enumerate_with_limit(spec: CyclicActionSpec, max_rank: usize) -> Result<Self> {
        let n = spec.n;
        if n > max_rank {
            return Err(Error::GuardExceeded {
                what: format!("{} (rank)", spec.set),
                requested: n as u128,
                limit: max_rank as u128,
            });
        }
        let limit = DEFAULT_MAX_ELEMENTS;
        Ok(match spec.set {
            SetId::ReducedWords => {
                ActionSet::Words(enumerate_reduced_words_with_limit(n, max_rank)?)
            }
            SetId::SquareTableaux => ActionSet::Squares(crate::tableau::enumerate_syt_with_limit(
                &Partition::square(n),
                limit,
            )?),
            SetId::StaircaseTableaux => {
                ActionSet::Staircases(crate::tableau::enumerate_shifted_syt_with_limit(
                    &StrictPartition::doubled_staircase(n),
                    limit,
                )?)
            }
        })
    }

    pub fn len(&self) -> usize {
        match self {
            ActionSet::Words(v) => v.len(),
            ActionSet::Squares(v) => v.len(),
            ActionSet::Staircases(v) => v.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn fixed_points(&self, d: usize) -> usize {
        match self {
            ActionSet::Words(v) => count_fixed(v, d),
            ActionSet::Squares(v) => count_fixed(v, d),
            ActionSet::Staircases(v) => count_fixed(v, d),
        }
    }

    pub fn census(&self) -> Result<Census> {
        Ok(match self {
            ActionSet::Words(v) => census(&orbits(v, Word::act)?),
            ActionSet::Squares(v) => census(&orbits(v, StandardTableau::act)?),
            ActionSet::Staircases(v) => census(&orbits(v, ShiftedStandardTableau::act)?),
        })
    }
}

/// Whether `act^d(x) = x`. Stops early once `x` recurs.
pub fn is_fixed<T: CyclicElement>(x: &T, d: usize) -> bool {
    let mut y = x.clone();
    for step in 1..=d {
        y = y.act();
        if y == *x {
            return d.is_multiple_of(step);
        }
    }
    // d = 0, or x has period greater than d
    d == 0
}

fn count_fixed<T: CyclicElement>(items: &[T], d: usize) -> usize {
    items.par_iter().filter(|x| is_fixed(*x, d)).count()
}

/// `counts[d] = |X^{ω^d}|` for `d = 0 .. order - 1`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FixedPointTable {
    pub counts: Vec<usize>,
}

impl FixedPointTable {
    pub fn compute(set: &ActionSet, order: usize) -> Self {
        let counts = (0..order)
            .into_par_iter()
            .map(|d| set.fixed_points(d))
            .collect();
        Self { counts }
    }

    /// The table implied by an orbit census: an orbit of size `k` is fixed
    /// pointwise by `ω^d` exactly when `k | d`.
    pub fn from_census(census: &Census, order: usize) -> Self {
        let counts = (0..order)
            .map(|d| {
                census
                    .iter()
                    .filter(|(&k, _)| d % k == 0)
                    .map(|(&k, &m)| k * m)
                    .sum()
            })
            .collect();
        Self { counts }
    }

    /// `counts[d]` depends only on `gcd(d, order)`.
    pub fn is_divisor_consistent(&self) -> bool {
        let order = self.counts.len();
        (0..order).all(|d| self.counts[d] == self.counts[d.gcd(&order) % order.max(1)])
    }

    /// Burnside: `Σ_d counts[d] = order × (number of orbits)`.
    pub fn burnside_orbit_count(&self) -> Option<usize> {
        let total: usize = self.counts.iter().sum();
        let order = self.counts.len();
        (order > 0 && total.is_multiple_of(order)).then(|| total / order)
    }
}

pub fn fixed_points(spec: CyclicActionSpec, d: usize) -> Result<usize> {
    if d >= spec.order() {
        return Err(Error::Parse(format!(
            "power {d} out of range 0..{}",
            spec.order()
        )));
    }
    Ok(ActionSet::enumerate(spec)?.fixed_points(d))
}

/// The sieving polynomial for a set: for reduced words the shifted major
/// index generating function, for tableaux the q-hook formula of the square.
pub fn sieving_polynomial(spec: CyclicActionSpec, set: &ActionSet) -> Result<IntPolynomial> {
    match set {
        ActionSet::Words(words) => {
            let shift = kappa(&Partition::square(spec.n));
            shift_down(&maj_gf_words(words), shift)
        }
        ActionSet::Squares(_) | ActionSet::Staircases(_) => q_hook_rectangle(spec.n, spec.n),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Mismatch {
    pub d: usize,
    pub count: usize,
    /// `None` when the value at the root of unity is not an integer.
    #[serde(serialize_with = "opt_bigint")]
    pub evaluation: Option<BigInt>,
}

fn opt_bigint<S: Serializer>(v: &Option<BigInt>, s: S) -> std::result::Result<S::Ok, S::Error> {
    match v {
        Some(b) => Coeffs(std::slice::from_ref(b)).serialize(s),
        None => s.serialize_none(),
    }
}

/// Outcome of comparing fixed-point counts with root-of-unity values.
#[derive(Clone, Debug)]
pub struct CspReport {
    pub spec: CyclicActionSpec,
    pub polynomial: IntPolynomial,
    pub table: FixedPointTable,
    pub evaluations: Vec<Option<BigInt>>,
    pub mismatches: Vec<Mismatch>,
}

impl CspReport {
    pub fn verdict(&self) -> Verdict {
        if self.mismatches.is_empty() {
            Verdict::Pass
        } else {
            Verdict::Fail
        }
    }

    pub fn passed(&self) -> bool {
        self.verdict() == Verdict::Pass
    }

    pub fn to_json(&self) -> serde_json::Value {
        let evaluations = self
            .evaluations
            .iter()
            .map(|e| match e {
                Some(v) => serde_json::to_value(Coeffs(std::slice::from_ref(v)))
                    .map(|mut a| a[0].take())
                    .expect("integers serialize"),
                None => serde_json::Value::Null,
            })
            .collect::<Vec<_>>();
        serde_json::json!({
            "set": self.spec.set,
            "n": self.spec.n,
            "poly": serde_json::to_value(Coeffs(self.polynomial.coeffs())).expect("integers serialize"),
            "fixed_points": self.table.counts,
            "evaluations": evaluations,
            "verdict": self.verdict(),
            "mismatches": self.mismatches,
        })
    }
}

/// Checks `|X^{ω^d}| = X(ζ^d)` for every `d`. Disagreements are recorded in
/// the report, not returned as errors.
pub fn verify_csp(spec: CyclicActionSpec) -> Result<CspReport> {
    let set = ActionSet::enumerate(spec)?;
    verify_csp_on(spec, &set)
}

pub fn verify_csp_on(spec: CyclicActionSpec, set: &ActionSet) -> Result<CspReport> {
    let polynomial = sieving_polynomial(spec, set)?;
    verify_with_polynomial(spec, set, polynomial)
}

/// Compares the fixed points of `set` against an arbitrary polynomial.
pub fn verify_with_polynomial(
    spec: CyclicActionSpec,
    set: &ActionSet,
    polynomial: IntPolynomial,
) -> Result<CspReport> {
    let order = spec.order();
    let table = FixedPointTable::compute(set, order);
    let mut evaluations = Vec::with_capacity(order);
    let mut mismatches = Vec::new();
    for d in 0..order {
        let value = match eval_at_root(&polynomial, order as u64, d as u64) {
            Ok(v) => Some(v),
            Err(Error::NonIntegerValue { .. }) => None,
            Err(e) => return Err(e),
        };
        let count = table.counts[d];
        if value.as_ref() != Some(&BigInt::from(count)) {
            mismatches.push(Mismatch {
                d,
                count,
                evaluation: value.clone(),
            });
        }
        evaluations.push(value);
    }
    Ok(CspReport {
        spec,
        polynomial,
        table,
        evaluations,
        mismatches,
    })
}

/// Orbit size → number of orbits, by explicit orbit traversal.
pub fn orbit_census(spec: CyclicActionSpec) -> Result<Census> {
    ActionSet::enumerate(spec)?.census()
}

/// Agreement of the three orbit structures at one rank.
#[derive(Clone, Debug, Serialize)]
pub struct CrossCheckReport {
    pub n: usize,
    pub censuses: Vec<(SetId, Census)>,
    /// Elements where a bijection fails to intertwine the actions.
    pub witnesses: Vec<String>,
}

impl CrossCheckReport {
    pub fn censuses_agree(&self) -> bool {
        self.censuses.windows(2).all(|w| w[0].1 == w[1].1)
    }

    pub fn passed(&self) -> bool {
        self.censuses_agree() && self.witnesses.is_empty()
    }
}

/// Compares the three censuses and checks that `Φ`, `H` and `Ψ` carry each
/// action to the other elementwise.
pub fn cross_check(n: usize) -> Result<CrossCheckReport> {
    let spec = |set| CyclicActionSpec::new(set, n);
    let words = ActionSet::enumerate(spec(SetId::ReducedWords))?;
    let squares = enumerate_syt(&Partition::square(n))?;
    let staircases = enumerate_shifted_syt(&StrictPartition::doubled_staircase(n))?;

    let mut witnesses = Vec::new();
    let failures: Vec<String> = staircases
        .par_iter()
        .filter_map(|s| {
            let lhs = phi(&s.promote()).ok()?;
            let rhs = rotate(&phi(s).ok()?).ok()?;
            (lhs != rhs).then(|| format!("Φ∘p ≠ c∘Φ at {s}"))
        })
        .collect();
    witnesses.extend(failures);
    let failures: Vec<String> = squares
        .par_iter()
        .filter_map(|q| {
            let hp = h(&q.promote()).ok()?;
            let ph = h(q).ok()?.promote();
            if hp != ph {
                return Some(format!("H∘p ≠ p∘H at {q}"));
            }
            let lhs = psi(&q.promote()).ok()?;
            let rhs = rotate(&psi(q).ok()?).ok()?;
            (lhs != rhs).then(|| format!("Ψ∘p ≠ c∘Ψ at {q}"))
        })
        .collect();
    witnesses.extend(failures);

    let censuses = vec![
        (SetId::ReducedWords, words.census()?),
        (SetId::SquareTableaux, ActionSet::Squares(squares).census()?),
        (
            SetId::StaircaseTableaux,
            ActionSet::Staircases(staircases).census()?,
        ),
    ];
    Ok(CrossCheckReport {
        n,
        censuses,
        witnesses,
    })
}
