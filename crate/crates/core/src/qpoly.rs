//! Exact polynomials in `q` with arbitrary-precision integer coefficients,
//! q-analogues of the hook length formula, and evaluation at roots of unity
//! by reduction modulo cyclotomic polynomials.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::de::{self, Deserializer};
use serde::ser::{SerializeSeq, Serializer};
use serde::{Deserialize, Serialize};

use crate::bn::{descent_data, tableau_maj};
use crate::error::{Error, Result};
use crate::tableau::{hook_lengths, Partition, StandardTableau};
use crate::word::Word;

/// `coeffs[k]` is the coefficient of `q^k`; no trailing zeros.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn from_coeffs<I, T>(coeffs: I) -> Self
    where
        I: IntoIterator<Item = T>,
        T: Into<BigInt>,
    {
        let mut p = Self {
            coeffs: coeffs.into_iter().map(Into::into).collect(),
        };
        p.trim();
        p
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::from_coeffs([c.into()])
    }

    /// `c · q^k`.
    pub fn monomial(c: impl Into<BigInt>, k: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.push(c.into());
        Self::from_coeffs(coeffs)
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Lowest power of `q` with a nonzero coefficient.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    /// The value at `q = 1`.
    pub fn eval_at_one(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    pub fn eval(&self, q: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * q + c)
    }

    pub fn has_nonnegative_coeffs(&self) -> bool {
        self.coeffs.iter().all(|c| !c.is_negative())
    }

    /// Division with remainder. The leading coefficient of `divisor` must
    /// divide every leading coefficient met along the way.
    pub fn div_rem(&self, divisor: &Self) -> Result<(Self, Self)> {
        let Some(dd) = divisor.degree() else {
            return Err(Error::InexactDivision(
                "division by the zero polynomial".into(),
            ));
        };
        let lead = &divisor.coeffs[dd];
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigInt::zero(); rem.len().saturating_sub(dd)];
        while rem.len() > dd {
            let top = rem.len() - 1;
            let (c, r) = rem[top].div_rem(lead);
            if !r.is_zero() {
                return Err(Error::InexactDivision(format!(
                    "leading coefficient {} not divisible by {lead}",
                    rem[top]
                )));
            }
            let shift = top - dd;
            for (k, d) in divisor.coeffs.iter().enumerate() {
                rem[shift + k] -= &c * d;
            }
            quot[shift] = c;
            rem.pop();
            while rem.last().is_some_and(Zero::is_zero) {
                rem.pop();
            }
        }
        Ok((Self::from_coeffs(quot), Self::from_coeffs(rem)))
    }

    /// Exact quotient; a nonzero remainder is an error.
    pub fn div_exact(&self, divisor: &Self) -> Result<Self> {
        let (q, r) = self.div_rem(divisor)?;
        if !r.is_zero() {
            return Err(Error::InexactDivision(format!(
                "({self}) / ({divisor}) leaves {r}"
            )));
        }
        Ok(q)
    }

    pub fn pow(&self, e: usize) -> Self {
        (0..e).fold(Self::one(), |acc, _| &acc * self)
    }
}

impl Add for &IntPolynomial {
    type Output = IntPolynomial;
    fn add(self, rhs: &IntPolynomial) -> IntPolynomial {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        IntPolynomial::from_coeffs((0..len).map(|k| self.coeff(k) + rhs.coeff(k)))
    }
}

impl Sub for &IntPolynomial {
    type Output = IntPolynomial;
    fn sub(self, rhs: &IntPolynomial) -> IntPolynomial {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        IntPolynomial::from_coeffs((0..len).map(|k| self.coeff(k) - rhs.coeff(k)))
    }
}

impl Neg for &IntPolynomial {
    type Output = IntPolynomial;
    fn neg(self) -> IntPolynomial {
        IntPolynomial::from_coeffs(self.coeffs.iter().map(|c| -c))
    }
}

impl Mul for &IntPolynomial {
    type Output = IntPolynomial;
    fn mul(self, rhs: &IntPolynomial) -> IntPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return IntPolynomial::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPolynomial::from_coeffs(out)
    }
}

macro_rules! owned_ops {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for IntPolynomial {
            type Output = IntPolynomial;
            fn $m(self, rhs: IntPolynomial) -> IntPolynomial {
                (&self).$m(&rhs)
            }
        }
    )*};
}
owned_ops!(Add add, Sub sub, Mul mul);

impl std::iter::Sum for IntPolynomial {
    fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Self::zero(), |a, b| &a + &b)
    }
}

impl std::iter::Product for IntPolynomial {
    fn product<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Self::one(), |a, b| &a * &b)
    }
}

/// Sparse ascending terms: `1 + q^2 + 2q^3 - q^5`.
impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if c.is_negative() { " - " } else { " + " })?;
            }
            first = false;
            if k == 0 {
                write!(f, "{mag}")?;
                continue;
            }
            if !mag.is_one() {
                write!(f, "{mag}")?;
            }
            match k {
                1 => f.write_str("q")?,
                _ => write!(f, "q^{k}")?,
            }
        }
        Ok(())
    }
}

/// Serialized as `{"coeffs":[...]}`; coefficients outside `i64` are strings.
impl Serialize for IntPolynomial {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Record<'a> {
            coeffs: Coeffs<'a>,
        }
        Record {
            coeffs: Coeffs(&self.coeffs),
        }
        .serialize(s)
    }
}

pub(crate) struct Coeffs<'a>(pub(crate) &'a [BigInt]);

impl Serialize for Coeffs<'_> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(self.0.len()))?;
        for c in self.0 {
            match c.to_i64() {
                Some(v) => seq.serialize_element(&v)?,
                None => seq.serialize_element(&c.to_string())?,
            }
        }
        seq.end()
    }
}

impl<'de> Deserialize<'de> for IntPolynomial {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Coeff {
            Int(i64),
            Text(String),
        }
        #[derive(Deserialize)]
        struct Record {
            coeffs: Vec<Coeff>,
        }
        let rec = Record::deserialize(d)?;
        let coeffs = rec
            .coeffs
            .into_iter()
            .map(|c| match c {
                Coeff::Int(v) => Ok(BigInt::from(v)),
                Coeff::Text(t) => t.parse::<BigInt>().map_err(de::Error::custom),
            })
            .collect::<std::result::Result<Vec<_>, _>>()?;
        Ok(Self::from_coeffs(coeffs))
    }
}

/// `[k]_q = 1 + q + ... + q^{k-1}`.
pub fn q_int(k: usize) -> IntPolynomial {
    IntPolynomial::from_coeffs(vec![1; k])
}

/// `[k]_q! = [k]_q [k-1]_q ... [1]_q`.
pub fn q_factorial(k: usize) -> IntPolynomial {
    (1..=k).map(q_int).product()
}

/// `[N]_q! / ∏ [h]_q` over the hook lengths of `shape`.
pub fn q_hook(shape: &Partition) -> Result<IntPolynomial> {
    let hooks = hook_lengths(shape);
    let den: IntPolynomial = hooks.into_iter().flatten().map(q_int).product();
    q_factorial(shape.size()).div_exact(&den)
}

pub fn q_hook_rectangle(rows: usize, cols: usize) -> Result<IntPolynomial> {
    q_hook(&Partition::rectangle(rows, cols))
}

/// Closed form for the square:
/// `[n²]! / ([n]^n ∏_{i=1}^{n-1} ([i]·[2n-i])^i)`.
pub fn q_hook_square_closed_form(n: usize) -> Result<IntPolynomial> {
    let mut den = q_int(n).pow(n);
    for i in 1..n {
        den = &den * &(&q_int(i) * &q_int(2 * n - i)).pow(i);
    }
    q_factorial(n * n).div_exact(&den)
}

/// `κ(λ) = Σ (i - 1) λ_i`.
pub fn kappa(shape: &Partition) -> usize {
    shape.parts().iter().enumerate().map(|(i, &p)| i * p).sum()
}

/// `Σ q^{m}` over the given statistics.
pub fn maj_gf<I: IntoIterator<Item = usize>>(majors: I) -> IntPolynomial {
    let mut coeffs: Vec<u64> = Vec::new();
    for m in majors {
        if coeffs.len() <= m {
            coeffs.resize(m + 1, 0);
        }
        coeffs[m] += 1;
    }
    IntPolynomial::from_coeffs(coeffs)
}

pub fn maj_gf_words(words: &[Word]) -> IntPolynomial {
    maj_gf(words.iter().map(|w| descent_data(w).maj))
}

pub fn maj_gf_tableaux(tableaux: &[StandardTableau]) -> IntPolynomial {
    maj_gf(tableaux.iter().map(tableau_maj))
}

/// `p / q^k`, requiring `q^k` to divide `p`.
pub fn shift_down(p: &IntPolynomial, k: usize) -> Result<IntPolynomial> {
    if p.is_zero() {
        return Ok(IntPolynomial::zero());
    }
    if p.coeffs[..k.min(p.coeffs.len())]
        .iter()
        .any(|c| !c.is_zero())
    {
        return Err(Error::InexactDivision(format!("q^{k} does not divide {p}")));
    }
    Ok(IntPolynomial::from_coeffs(p.coeffs[k..].iter().cloned()))
}

fn divisors(m: u64) -> Vec<u64> {
    (1..=m).filter(|d| m.is_multiple_of(*d)).collect()
}

/// The `m`-th cyclotomic polynomial, from `q^m - 1 = ∏_{d | m} Φ_d`.
pub fn cyclotomic(m: u64) -> IntPolynomial {
    assert!(m >= 1, "cyclotomic polynomials are indexed from 1");
    let ds = divisors(m);
    let mut table: Vec<(u64, IntPolynomial)> = Vec::with_capacity(ds.len());
    for &d in &ds {
        let qd_minus_one = &IntPolynomial::monomial(1, d as usize) - &IntPolynomial::one();
        let below: IntPolynomial = table
            .iter()
            .filter(|(e, _)| d % e == 0)
            .map(|(_, p)| p.clone())
            .product();
        let phi = qd_minus_one
            .div_exact(&below)
            .expect("cyclotomic factors divide q^m - 1");
        table.push((d, phi));
    }
    table.pop().expect("m has at least one divisor").1
}

/// The exact value `p(ζ^d)` for `ζ` a primitive `m`-th root of unity.
///
/// `ζ^d` is a primitive root of order `k = m / gcd(m, d)`, so `p(ζ^d)` is the
/// value of `p mod Φ_k`; it is an integer iff that residue is constant.
pub fn eval_at_root(p: &IntPolynomial, m: u64, d: u64) -> Result<BigInt> {
    assert!(m >= 1, "root of unity order must be positive");
    let order = m / m.gcd(&(d % m));
    let (_, rem) = p.div_rem(&cyclotomic(order))?;
    match rem.degree() {
        None => Ok(BigInt::zero()),
        Some(0) => Ok(rem.coeffs[0].clone()),
        Some(_) => Err(Error::NonIntegerValue {
            order,
            residue: rem.coeffs,
        }),
    }
}

/// `[p(1), p(ζ), ..., p(ζ^{m-1})]`.
pub fn root_evaluations(p: &IntPolynomial, m: u64) -> Result<Vec<BigInt>> {
    (0..m).map(|d| eval_at_root(p, m, d)).collect()
}
