//! Exact arithmetic kernel.
//!
//! Integers and rationals come from `num-bigint` / `num-rational`; this module
//! adds the bivariate polynomial ring `Z[s,t]` used for symbolic triangles,
//! the [`Coeff`] abstraction that lets the same recurrence code run over all
//! three coefficient rings, and the handful of combinatorial primitives the
//! rest of the crate needs.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

pub type ExactInt = BigInt;
pub type ExactRat = BigRational;

/// A commutative ring that triangle entries can live in.
pub trait Coeff:
    Clone
    + fmt::Debug
    + PartialEq
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    fn from_int(v: &BigInt) -> Self;

    fn from_i64(v: i64) -> Self {
        Self::from_int(&BigInt::from(v))
    }
}

impl Coeff for BigInt {
    fn from_int(v: &BigInt) -> Self {
        v.clone()
    }
}

impl Coeff for BigRational {
    fn from_int(v: &BigInt) -> Self {
        BigRational::from_integer(v.clone())
    }
}

impl Coeff for PolyST {
    fn from_int(v: &BigInt) -> Self {
        PolyST::constant(v.clone())
    }
}

/// Sparse polynomial in two indeterminates `s` and `t` with integer
/// coefficients. Keys are `(deg_s, deg_t)`; zero coefficients are never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct PolyST {
    terms: BTreeMap<(u32, u32), BigInt>,
}

impl PolyST {
    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::monomial(0, 0, c)
    }

    pub fn monomial(deg_s: u32, deg_t: u32, c: impl Into<BigInt>) -> Self {
        let c = c.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert((deg_s, deg_t), c);
        }
        PolyST { terms }
    }

    /// The indeterminate `s`.
    pub fn s() -> Self {
        Self::monomial(1, 0, 1)
    }

    /// The indeterminate `t`.
    pub fn t() -> Self {
        Self::monomial(0, 1, 1)
    }

    pub fn terms(&self) -> impl Iterator<Item = ((u32, u32), &BigInt)> {
        self.terms.iter().map(|(&k, v)| (k, v))
    }

    pub fn coefficient(&self, deg_s: u32, deg_t: u32) -> BigInt {
        self.terms.get(&(deg_s, deg_t)).cloned().unwrap_or_default()
    }

    pub fn degree_s(&self) -> Option<u32> {
        self.terms.keys().map(|k| k.0).max()
    }

    pub fn degree_t(&self) -> Option<u32> {
        self.terms.keys().map(|k| k.1).max()
    }

    /// Substitutes integers for `s` and `t`.
    pub fn eval(&self, s: &BigInt, t: &BigInt) -> BigInt {
        self.terms
            .iter()
            .map(|(&(a, b), c)| c * s.pow(a) * t.pow(b))
            .sum()
    }

    pub fn eval_rat(&self, s: &BigRational, t: &BigRational) -> BigRational {
        self.terms
            .iter()
            .map(|(&(a, b), c)| {
                BigRational::from_integer(c.clone()) * pow_rat(s, a) * pow_rat(t, b)
            })
            .fold(BigRational::zero(), |acc, x| acc + x)
    }

    fn add_term(&mut self, key: (u32, u32), c: BigInt) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(key).or_default();
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&key);
        }
    }
}

fn pow_rat(x: &BigRational, e: u32) -> BigRational {
    num_traits::pow(x.clone(), e as usize)
}

impl Add for PolyST {
    type Output = PolyST;

    fn add(mut self, rhs: PolyST) -> PolyST {
        for (k, c) in rhs.terms {
            self.add_term(k, c);
        }
        self
    }
}

impl Sub for PolyST {
    type Output = PolyST;

    fn sub(self, rhs: PolyST) -> PolyST {
        self + (-rhs)
    }
}

impl Neg for PolyST {
    type Output = PolyST;

    fn neg(mut self) -> PolyST {
        for c in self.terms.values_mut() {
            *c = -std::mem::take(c);
        }
        self
    }
}

impl Mul for PolyST {
    type Output = PolyST;

    fn mul(self, rhs: PolyST) -> PolyST {
        let mut out = PolyST::default();
        for (&(a1, b1), c1) in &self.terms {
            for (&(a2, b2), c2) in &rhs.terms {
                out.add_term((a1 + a2, b1 + b2), c1 * c2);
            }
        }
        out
    }
}

impl Zero for PolyST {
    fn zero() -> Self {
        PolyST::default()
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl One for PolyST {
    fn one() -> Self {
        PolyST::constant(1)
    }
}

/// Renders as `c*s^a*t^b` terms joined by `+`, omitting zero exponents,
/// in ascending `(deg_s, deg_t)` order. The zero polynomial renders as `0`.
impl fmt::Display for PolyST {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (&(a, b), c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, "+")?;
            }
            write!(f, "{c}")?;
            if a > 0 {
                write!(f, "*s^{a}")?;
            }
            if b > 0 {
                write!(f, "*t^{b}")?;
            }
        }
        Ok(())
    }
}

/// Generalized binomial coefficient.
///
/// Zero for `k < 0`. Otherwise `n(n-1)...(n-k+1)/k!`, which is zero for
/// `0 <= n < k` and follows the polynomial convention for negative `n`.
pub fn binomial(n: i64, k: i64) -> BigInt {
    if k < 0 {
        return BigInt::zero();
    }
    if n >= 0 && k > n {
        return BigInt::zero();
    }
    // C(n,k) = C(n,n-k) keeps the loop short for large non-negative n.
    let k = if n >= 0 && n - k < k { n - k } else { k };
    let mut acc = BigInt::one();
    for i in 0..k {
        acc *= BigInt::from(n - i);
        acc /= BigInt::from(i + 1);
    }
    acc
}

pub fn factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, i| acc * BigInt::from(i))
}

/// `x (x+1) ... (x+j-1)`; one when `j = 0`.
pub fn rising_factorial<C: Coeff>(x: &C, j: u32) -> C {
    (0..j).fold(C::one(), |acc, i| acc * (x.clone() + C::from_i64(i as i64)))
}

/// `x (x-1) ... (x-j+1)`; one when `j = 0`.
pub fn falling_factorial<C: Coeff>(x: &C, j: u32) -> C {
    (0..j).fold(C::one(), |acc, i| acc * (x.clone() - C::from_i64(i as i64)))
}

/// Integer power with `0^0 = 1`.
pub fn ipow(base: i64, e: u32) -> BigInt {
    BigInt::from(base).pow(e)
}

/// `factor * base^exp` where `exp` may be `-1`.
///
/// The closed forms contain products `(s+j) (p+s)^(n+r-j-1)` whose exponent
/// reaches `-1` only when `s+j = p+s`; the product is then the constant one
/// even when the base vanishes.
pub(crate) fn shifted_power(factor: i64, base: i64, exp: i64) -> BigRational {
    if exp >= 0 {
        BigRational::from_integer(BigInt::from(factor) * ipow(base, exp as u32))
    } else if factor == base && exp == -1 {
        BigRational::one()
    } else {
        assert!(base != 0, "zero base with negative exponent");
        let den = ipow(base, (-exp) as u32);
        BigRational::new(BigInt::from(factor), den)
    }
}

/// Stirling numbers of the second kind `{n, k}`, one full row.
pub fn stirling_subset_row(n: usize) -> Vec<BigInt> {
    let mut row = vec![BigInt::one()];
    for m in 1..=n {
        let mut next = vec![BigInt::zero(); m + 1];
        for k in 1..=m {
            let keep = if k < m { &row[k] * k } else { BigInt::zero() };
            next[k] = keep + &row[k - 1];
        }
        row = next;
    }
    row
}

/// `{n, k}`: partitions of an `n`-set into `k` nonempty blocks.
pub fn stirling_subset(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    stirling_subset_row(n).swap_remove(k)
}

/// `{{n, k}}`: partitions of an `n`-set into `k` blocks, each of size at least two.
pub fn assoc_stirling_subset(n: usize, k: usize) -> BigInt {
    if 2 * k > n {
        return BigInt::zero();
    }
    // table[m][j] for m <= n, j <= k
    let mut table = vec![vec![BigInt::zero(); k + 1]; n + 1];
    table[0][0] = BigInt::one();
    for m in 1..=n {
        for j in 1..=k.min(m / 2) {
            let mut v = &table[m - 1][j] * j;
            if m >= 2 {
                v += &table[m - 2][j - 1] * (m - 1);
            }
            table[m][j] = v;
        }
    }
    table[n][k].clone()
}

/// Evaluates `sum_k row[k] x^k`.
pub fn eval_row(row: &[BigInt], x: &BigRational) -> BigRational {
    row.iter().rev().fold(BigRational::zero(), |acc, c| {
        acc * x + BigRational::from_integer(c.clone())
    })
}
