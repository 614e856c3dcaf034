//! Seeded property checks of the tableau, word and bijection identities.
//!
//! Elements are enumerated exhaustively up to rank 3 and sampled above it;
//! random words are always sampled. The same seed yields the same transcript.

use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::bn::{descent_data, is_reduced_word_for_w0, rotate, tableau_descent_data};
use crate::error::Result;
use crate::haiman::{h, phi, psi};
use crate::insertion::{crystal_e, ebar, is_square_word, q_shifted, rsk, square_to_yamanouchi};
use crate::promotion::{embed_square, rectify_random, Promote};
use crate::tableau::{
    enumerate_shifted_syt, enumerate_syt, random_syt, Partition, ShiftedStandardTableau,
    StandardTableau, StrictPartition,
};
use crate::word::Word;

/// Largest rank enumerated exhaustively by the suite.
pub const EXHAUSTIVE_RANK: usize = 3;

#[derive(Clone, Debug, Serialize)]
pub struct CheckResult {
    pub name: &'static str,
    pub cases: usize,
    pub failures: usize,
    pub first_failure: Option<String>,
}

impl CheckResult {
    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

impl fmt::Display for CheckResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed() { "ok" } else { "FAIL" };
        write!(
            f,
            "{status:4} {:<28} cases={:<6} failures={}",
            self.name, self.cases, self.failures
        )?;
        if let Some(w) = &self.first_failure {
            write!(f, " first={w}")?;
        }
        Ok(())
    }
}

struct Check {
    result: CheckResult,
}

impl Check {
    fn new(name: &'static str) -> Self {
        Self {
            result: CheckResult {
                name,
                cases: 0,
                failures: 0,
                first_failure: None,
            },
        }
    }

    fn record(&mut self, ok: bool, witness: impl FnOnce() -> String) {
        self.result.cases += 1;
        if !ok {
            self.result.failures += 1;
            if self.result.first_failure.is_none() {
                self.result.first_failure = Some(witness());
            }
        }
    }
}

#[derive(Clone, Copy, Debug)]
pub struct SuiteConfig {
    pub n: usize,
    pub seed: u64,
    /// Sample size for sampled checks.
    pub samples: usize,
}

impl SuiteConfig {
    pub fn new(n: usize, seed: u64) -> Self {
        Self {
            n,
            seed,
            samples: 500,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub n: usize,
    pub seed: u64,
    pub checks: Vec<CheckResult>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(CheckResult::passed)
    }

    pub fn check(&self, name: &str) -> Option<&CheckResult> {
        self.checks.iter().find(|c| c.name == name)
    }
}

fn squares(cfg: &SuiteConfig, rng: &mut ChaCha8Rng) -> Result<Vec<StandardTableau>> {
    let shape = Partition::square(cfg.n);
    if cfg.n <= EXHAUSTIVE_RANK {
        enumerate_syt(&shape)
    } else {
        Ok((0..cfg.samples).map(|_| random_syt(&shape, rng)).collect())
    }
}

/// Uniform staircase samples come from uniform squares through the bijection `H`.
fn staircases(cfg: &SuiteConfig, rng: &mut ChaCha8Rng) -> Result<Vec<ShiftedStandardTableau>> {
    if cfg.n <= EXHAUSTIVE_RANK {
        enumerate_shifted_syt(&StrictPartition::doubled_staircase(cfg.n))
    } else {
        let shape = Partition::square(cfg.n);
        (0..cfg.samples)
            .map(|_| h(&random_syt(&shape, rng)))
            .collect()
    }
}

fn random_word(n: usize, rng: &mut ChaCha8Rng) -> Word {
    let len = rng.gen_range(1..=2 * n * n);
    let letters = (0..len).map(|_| rng.gen_range(1..=n as u8)).collect();
    Word::new(letters).expect("letters are positive")
}

pub fn run_property_suite(cfg: SuiteConfig) -> Result<SuiteReport> {
    let n = cfg.n;
    let order = n * n;
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let squares = squares(&cfg, &mut rng)?;
    let staircases = staircases(&cfg, &mut rng)?;
    let words = (0..cfg.samples.max(200))
        .map(|_| random_word(n, &mut rng))
        .collect::<Vec<_>>();
    let square_words = squares
        .iter()
        .map(square_to_yamanouchi)
        .collect::<Result<Vec<_>>>()?;
    let mut checks = Vec::new();

    let mut c = Check::new("promotion-order-squares");
    for t in &squares {
        c.record(t.promote_pow(order) == *t, || t.to_string());
    }
    checks.push(c.result);

    let mut c = Check::new("promotion-order-staircases");
    for s in &staircases {
        c.record(s.promote_pow(order) == *s, || s.to_string());
    }
    checks.push(c.result);

    let mut c = Check::new("phi-equivariance");
    for s in &staircases {
        let lhs = phi(&s.promote())?;
        let rhs = rotate(&phi(s)?)?;
        c.record(lhs == rhs, || s.to_string());
    }
    checks.push(c.result);

    let mut c = Check::new("h-equivariance");
    for q in &squares {
        c.record(h(&q.promote())? == h(q)?.promote(), || q.to_string());
    }
    checks.push(c.result);

    let mut c = Check::new("rectification-choice");
    for q in &squares {
        let e = embed_square(q)?;
        c.record(rectify_random(&e, &mut rng) == h(q)?, || q.to_string());
    }
    checks.push(c.result);

    let mut c = Check::new("square-word-promotion");
    for w in &square_words {
        let next = ebar(&w.tail(), n as u8)?.push(1);
        let ok = is_square_word(&next, n)
            && rsk(w).q.promote() == rsk(&next).q
            && q_shifted(w).promote() == q_shifted(&next);
        c.record(ok, || w.to_string());
    }
    checks.push(c.result);

    let mut c = Check::new("crystal-invariance");
    for w in &words {
        let q = rsk(w).q;
        let qs = q_shifted(w);
        for j in 1..n as u8 {
            if let Ok(raised) = crystal_e(w, j) {
                let ok = rsk(&raised).q == q && q_shifted(&raised) == qs;
                c.record(ok, || format!("e_{j}({w})"));
            }
        }
    }
    checks.push(c.result);

    let mut c = Check::new("delta-recording");
    for w in &words {
        let tail = w.tail();
        let ok = rsk(&tail).q == rsk(w).q.delta().tableau
            && q_shifted(&tail) == q_shifted(w).delta().tableau;
        c.record(ok, || w.to_string());
    }
    checks.push(c.result);

    let mut c = Check::new("psi-reduced");
    for t in &squares {
        c.record(is_reduced_word_for_w0(&psi(t)?, n), || t.to_string());
    }
    checks.push(c.result);

    let mut c = Check::new("descents-preserved");
    for t in &squares {
        let lhs = tableau_descent_data(t)?.cyclic_descents;
        let rhs = descent_data(&psi(t)?).cyclic_descents;
        c.record(lhs == rhs, || t.to_string());
    }
    checks.push(c.result);

    let mut c = Check::new("descent-shift-promotion");
    for t in &squares {
        let shifted = tableau_descent_data(t)?.shifted_cyclic(order);
        c.record(
            tableau_descent_data(&t.promote())?.cyclic_descents == shifted,
            || t.to_string(),
        );
    }
    checks.push(c.result);

    let mut c = Check::new("descent-shift-rotation");
    for t in &squares {
        let w = psi(t)?;
        let shifted = descent_data(&w).shifted_cyclic(order);
        c.record(
            descent_data(&rotate(&w)?).cyclic_descents == shifted,
            || w.to_string(),
        );
    }
    checks.push(c.result);

    Ok(SuiteReport {
        n,
        seed: cfg.seed,
        checks,
    })
}
