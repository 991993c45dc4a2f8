//! Row-by-row construction of the two triangular recurrences.
//!
//! Both families have the shape
//!
//! ```text
//! T(n,k) = (k + s) T(n-1,k) + b(n,k) T(n-1,k-1) + [n = k = 0]
//! ```
//!
//! with `b(n,k) = nu*n - k + t + 1 - nu` for the Eulerian triangle and
//! `b(n,k) = nu*n + k + s + t - 1 - nu` for the Ward triangle.

use num_bigint::BigInt;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::numerics::{Coeff, PolyST};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum TriangleKind {
    Eulerian,
    Ward,
}

impl TriangleKind {
    /// The two recurrence multipliers `(a(n,k), b(n,k))` for entry `(n,k)`.
    pub fn coefficients<C: Coeff>(self, nu: u32, n: usize, k: usize, s: &C, t: &C) -> (C, C) {
        let (nu, n, k) = (nu as i64, n as i64, k as i64);
        let a = C::from_i64(k) + s.clone();
        let b = match self {
            TriangleKind::Eulerian => C::from_i64(nu * n - k + 1 - nu) + t.clone(),
            TriangleKind::Ward => C::from_i64(nu * n + k - 1 - nu) + s.clone() + t.clone(),
        };
        (a, b)
    }
}

/// A triangle with rows `0..=nmax`; row `n` holds entries `k = 0..=n`.
#[derive(Clone, Debug, PartialEq)]
pub struct Triangle<C> {
    pub kind: TriangleKind,
    pub nu: u32,
    pub s: C,
    pub t: C,
    rows: Vec<Vec<C>>,
}

impl<C: Coeff> Triangle<C> {
    pub fn build(kind: TriangleKind, nu: u32, s: C, t: C, nmax: usize) -> Result<Self> {
        if nu < 1 {
            return Err(Error::InvalidParams(format!("nu must be >= 1, got {nu}")));
        }
        let mut rows: Vec<Vec<C>> = Vec::with_capacity(nmax + 1);
        rows.push(vec![C::one()]);
        for n in 1..=nmax {
            let prev = &rows[n - 1];
            let row = (0..=n)
                .map(|k| {
                    let (a, b) = kind.coefficients(nu, n, k, &s, &t);
                    let mut v = C::zero();
                    if k < n {
                        v = v + a * prev[k].clone();
                    }
                    if k >= 1 {
                        v = v + b * prev[k - 1].clone();
                    }
                    v
                })
                .collect();
            rows.push(row);
        }
        Ok(Triangle {
            kind,
            nu,
            s,
            t,
            rows,
        })
    }

    pub fn nmax(&self) -> usize {
        self.rows.len() - 1
    }

    /// Entry `(n,k)`, zero outside `0 <= k <= n`.
    pub fn entry(&self, n: i64, k: i64) -> C {
        if n < 0 || k < 0 || k > n || n as usize > self.nmax() {
            return C::zero();
        }
        self.rows[n as usize][k as usize].clone()
    }

    pub fn row(&self, n: usize) -> &[C] {
        &self.rows[n]
    }

    pub fn rows(&self) -> &[Vec<C>] {
        &self.rows
    }

    pub fn row_sum(&self, n: usize) -> C {
        self.rows[n]
            .iter()
            .cloned()
            .fold(C::zero(), |acc, x| acc + x)
    }

    /// Recomputes every entry from its two predecessors. Returns the first
    /// `(n,k)` whose stored value disagrees with the recurrence.
    pub fn first_recurrence_violation(&self) -> Option<(usize, usize)> {
        if self.rows[0].len() != 1 || self.rows[0][0] != C::one() {
            return Some((0, 0));
        }
        for n in 1..=self.nmax() {
            if self.rows[n].len() != n + 1 {
                return Some((n, 0));
            }
            for k in 0..=n {
                let (a, b) = self.kind.coefficients(self.nu, n, k, &self.s, &self.t);
                let (n_i, k_i) = (n as i64, k as i64);
                let expected = a * self.entry(n_i - 1, k_i) + b * self.entry(n_i - 1, k_i - 1);
                if expected != self.rows[n][k] {
                    return Some((n, k));
                }
            }
        }
        None
    }
}

impl Triangle<PolyST> {
    /// Substitutes integers for the indeterminates in every entry.
    pub fn specialize(&self, s: i64, t: i64) -> Triangle<BigInt> {
        let (s0, t0) = (BigInt::from(s), BigInt::from(t));
        Triangle {
            kind: self.kind,
            nu: self.nu,
            s: s0.clone(),
            t: t0.clone(),
            rows: self
                .rows
                .iter()
                .map(|row| row.iter().map(|p| p.eval(&s0, &t0)).collect())
                .collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn validator_catches_tampering() {
        let mut tri = Triangle::build(
            TriangleKind::Eulerian,
            2,
            BigInt::from(1),
            BigInt::from(0),
            5,
        )
        .unwrap();
        assert_eq!(tri.first_recurrence_violation(), None);
        tri.rows[3][1] += 1;
        assert_eq!(tri.first_recurrence_violation(), Some((3, 1)));
    }

    #[test]
    fn entries_outside_the_triangle_are_zero() {
        let tri =
            Triangle::build(TriangleKind::Ward, 1, BigInt::from(1), BigInt::from(0), 3).unwrap();
        assert_eq!(tri.entry(2, 3), BigInt::from(0));
        assert_eq!(tri.entry(-1, 0), BigInt::from(0));
        assert_eq!(tri.entry(2, -1), BigInt::from(0));
        assert_eq!(tri.entry(0, 0), BigInt::from(1));
    }
}
