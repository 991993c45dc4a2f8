//! Truncated formal power series over the rationals.
//!
//! A [`TruncSeries`] of order `K` stores the coefficients of `z^0 .. z^K`;
//! every operation is exact modulo `z^(K+1)`.

use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::eulerian::eulerian_table;
use crate::numerics::{binomial, factorial, ipow, rising_factorial, shifted_power};
use crate::params::Params;
use crate::triangle::Triangle;
use crate::ward::ward_table;

fn q(v: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}

fn qi(v: BigInt) -> BigRational {
    BigRational::from_integer(v)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncSeries {
    coeffs: Vec<BigRational>,
}

impl TruncSeries {
    /// Pads with zeros or truncates `coeffs` to exactly `order + 1` terms.
    pub fn new(mut coeffs: Vec<BigRational>, order: usize) -> Self {
        coeffs.resize(order + 1, BigRational::zero());
        TruncSeries { coeffs }
    }

    pub fn from_fn(order: usize, f: impl FnMut(usize) -> BigRational) -> Self {
        TruncSeries {
            coeffs: (0..=order).map(f).collect(),
        }
    }

    pub fn zero(order: usize) -> Self {
        Self::new(Vec::new(), order)
    }

    pub fn constant(c: BigRational, order: usize) -> Self {
        Self::new(vec![c], order)
    }

    pub fn one(order: usize) -> Self {
        Self::constant(BigRational::one(), order)
    }

    /// The series `z`.
    pub fn var(order: usize) -> Self {
        Self::new(vec![BigRational::zero(), BigRational::one()], order)
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, i: usize) -> BigRational {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn truncate(&self, order: usize) -> Self {
        Self::new(self.coeffs[..=order.min(self.order())].to_vec(), order)
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        TruncSeries {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Multiplication by `z`, dropping the top coefficient.
    pub fn shift(&self) -> Self {
        let mut coeffs = vec![BigRational::zero()];
        coeffs.extend_from_slice(&self.coeffs[..self.order()]);
        TruncSeries { coeffs }
    }

    /// Formal derivative; the result keeps the order but its top coefficient
    /// is unknown and set to zero.
    pub fn derivative(&self) -> Self {
        let k = self.order();
        Self::from_fn(k, |i| {
            if i < k {
                self.coeffs[i + 1].clone() * q(i as i64 + 1)
            } else {
                BigRational::zero()
            }
        })
    }

    /// Multiplicative inverse; needs a nonzero constant term.
    pub fn inverse(&self) -> Result<Self> {
        let c0 = &self.coeffs[0];
        if c0.is_zero() {
            return Err(Error::SeriesDomain(
                "inverse of a series with zero constant term".into(),
            ));
        }
        let inv0 = c0.recip();
        let mut out = vec![inv0.clone()];
        for n in 1..=self.order() {
            let acc = (1..=n).fold(BigRational::zero(), |acc, i| {
                acc + &self.coeffs[i] * &out[n - i]
            });
            out.push(-acc * &inv0);
        }
        Ok(TruncSeries { coeffs: out })
    }

    /// Integer power; negative exponents need a nonzero constant term.
    pub fn pow_int(&self, e: i64) -> Result<Self> {
        let base = if e < 0 { self.inverse()? } else { self.clone() };
        let mut e = e.unsigned_abs();
        let mut acc = TruncSeries::one(self.order());
        let mut sq = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &sq;
            }
            e >>= 1;
            if e > 0 {
                sq = &sq * &sq;
            }
        }
        Ok(acc)
    }

    /// `exp(f)`; needs `f(0) = 0` so the result stays rational.
    pub fn exp(&self) -> Result<Self> {
        if !self.coeffs[0].is_zero() {
            return Err(Error::SeriesDomain(
                "exp of a series with nonzero constant term".into(),
            ));
        }
        // e' = f' e  =>  n e_n = sum_{k=1}^n k f_k e_{n-k}
        let mut out = vec![BigRational::one()];
        for n in 1..=self.order() {
            let acc = (1..=n).fold(BigRational::zero(), |acc, k| {
                acc + q(k as i64) * &self.coeffs[k] * &out[n - k]
            });
            out.push(acc / q(n as i64));
        }
        Ok(TruncSeries { coeffs: out })
    }

    /// `log(f)`; needs `f(0) = 1`.
    pub fn log(&self) -> Result<Self> {
        if !self.coeffs[0].is_one() {
            return Err(Error::SeriesDomain(
                "log of a series with constant term other than 1".into(),
            ));
        }
        let quotient = &self.derivative() * &self.inverse()?;
        let k = self.order();
        Ok(Self::from_fn(k, |i| {
            if i == 0 {
                BigRational::zero()
            } else {
                quotient.coeff(i - 1) / q(i as i64)
            }
        }))
    }

    /// `f(g(z))`; needs `g(0) = 0`.
    pub fn compose(&self, g: &TruncSeries) -> Result<Self> {
        if !g.coeffs[0].is_zero() {
            return Err(Error::SeriesDomain(
                "composition with a series of nonzero constant term".into(),
            ));
        }
        let order = self.order().min(g.order());
        let g = g.truncate(order);
        // Horner from the top coefficient down.
        let mut acc = TruncSeries::zero(order);
        for c in self.coeffs[..=order].iter().rev() {
            acc = &(&acc * &g) + &TruncSeries::constant(c.clone(), order);
        }
        Ok(acc)
    }

    /// Compositional inverse by Lagrange inversion:
    /// `[z^n] f^{-1} = (1/n) [w^(n-1)] (w / f(w))^n`. Needs `f(0) = 0`, `f'(0) != 0`.
    pub fn reverse(&self) -> Result<Self> {
        if !self.coeffs[0].is_zero() || self.coeffs.get(1).is_none_or(Zero::is_zero) {
            return Err(Error::SeriesDomain(
                "reversion needs f(0) = 0 and f'(0) != 0".into(),
            ));
        }
        let k = self.order();
        // f(w)/w to order k-1
        let quotient = TruncSeries::new(self.coeffs[1..].to_vec(), k.saturating_sub(1));
        let phi = quotient.inverse()?;
        let mut out = vec![BigRational::zero()];
        let mut power = TruncSeries::one(phi.order());
        for n in 1..=k {
            power = &power * &phi;
            out.push(power.coeff(n - 1) / q(n as i64));
        }
        Ok(TruncSeries { coeffs: out })
    }

    /// Coefficients multiplied by `n!`: the EGF reading.
    pub fn egf_coeffs(&self) -> Vec<BigRational> {
        self.coeffs
            .iter()
            .enumerate()
            .map(|(n, c)| c * qi(factorial(n as u64)))
            .collect()
    }
}

impl Add for &TruncSeries {
    type Output = TruncSeries;

    fn add(self, rhs: &TruncSeries) -> TruncSeries {
        let order = self.order().min(rhs.order());
        TruncSeries::from_fn(order, |i| &self.coeffs[i] + &rhs.coeffs[i])
    }
}

impl Sub for &TruncSeries {
    type Output = TruncSeries;

    fn sub(self, rhs: &TruncSeries) -> TruncSeries {
        let order = self.order().min(rhs.order());
        TruncSeries::from_fn(order, |i| &self.coeffs[i] - &rhs.coeffs[i])
    }
}

impl Mul for &TruncSeries {
    type Output = TruncSeries;

    fn mul(self, rhs: &TruncSeries) -> TruncSeries {
        let order = self.order().min(rhs.order());
        let mut out = vec![BigRational::zero(); order + 1];
        for (i, a) in self.coeffs[..=order].iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs[..=order - i].iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        TruncSeries { coeffs: out }
    }
}

impl Neg for &TruncSeries {
    type Output = TruncSeries;

    fn neg(self) -> TruncSeries {
        TruncSeries {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

/// `z exp(Q_nu(z))` with `Q_nu(z) = sum_{k=1}^{nu-1} C(nu-1,k) (-z)^k / k`.
pub fn t_nu_inverse_series(nu: u32, order: usize) -> Result<TruncSeries> {
    if nu < 1 {
        return Err(Error::InvalidParams(format!("nu must be >= 1, got {nu}")));
    }
    let m = nu as i64 - 1;
    let qnu = TruncSeries::from_fn(order, |k| {
        if k == 0 || k as i64 > m {
            return BigRational::zero();
        }
        let sign = if k % 2 == 0 { 1 } else { -1 };
        BigRational::new(binomial(m, k as i64) * sign, BigInt::from(k))
    });
    Ok(qnu.exp()?.shift())
}

/// `T_nu`, the compositional inverse of `z exp(Q_nu(z))`.
pub fn t_nu_series(nu: u32, order: usize) -> Result<TruncSeries> {
    t_nu_inverse_series(nu, order)?.reverse()
}

/// Checks `x (1 - T)^(nu-1) T' = T` through degree `order - nu`.
pub fn t_nu_derivative_check(nu: u32, order: usize) -> Result<bool> {
    let tn = t_nu_series(nu, order)?;
    let one = TruncSeries::one(order);
    let lhs = &(&(&one - &tn).pow_int(nu as i64 - 1)? * &tn.derivative().shift()) - &tn;
    let upto = order.saturating_sub(nu as usize);
    Ok((0..=upto).all(|i| lhs.coeff(i).is_zero()))
}

/// Checks `T(z)^s = sum_k s (k+s)^(k-1) / k! z^(s+k)` for the tree function.
pub fn tree_power_check(s: u32, order: usize) -> Result<bool> {
    let power = t_nu_series(2, order)?.pow_int(s as i64)?;
    let s_i = s as i64;
    let formula = TruncSeries::from_fn(order, |i| {
        let k = i as i64 - s_i;
        if k < 0 {
            return BigRational::zero();
        }
        shifted_power(s_i, k + s_i, k - 1) / qi(factorial(k as u64))
    });
    Ok(power == formula)
}

/// Solves `g' = rhs(g)`, `g(0) = y0`, one coefficient at a time.
/// `rhs` must only use coefficients `0..=m` of `g` to produce coefficient `m`.
fn solve_autonomous(
    y0: BigRational,
    order: usize,
    rhs: impl Fn(&TruncSeries) -> Result<TruncSeries>,
) -> Result<TruncSeries> {
    let mut g = TruncSeries::constant(y0, order);
    for m in 0..order {
        let r = rhs(&g.truncate(m))?;
        g.coeffs[m + 1] = r.coeff(m) / q(m as i64 + 1);
    }
    Ok(g)
}

fn unit_interval(x0: &BigRational) -> bool {
    x0.is_positive() && x0 < &BigRational::one()
}

/// `g(y) = T_nu(exp(c y) T_nu^{-1}(x0))` with `c = (1 - x0)^nu`, as the
/// solution of `g' = c g (1 - g)^(1 - nu)`, `g(0) = x0`.
pub fn eulerian_egf_kernel(nu: u32, x0: &BigRational, order: usize) -> Result<TruncSeries> {
    if !unit_interval(x0) {
        return Err(Error::SeriesDomain(format!("x0 = {x0} must lie in (0,1)")));
    }
    let c = num_traits::pow(BigRational::one() - x0, nu as usize);
    solve_autonomous(x0.clone(), order, |g| {
        let one = TruncSeries::one(g.order());
        Ok(&g.scale(&c) * &(&one - g).pow_int(1 - nu as i64)?)
    })
}

/// Coefficients of `y^n / n!`, `n = 0..=count`, in the Eulerian EGF at `x = x0`.
pub fn egf_eulerian_coeffs(
    nu: u32,
    s: i64,
    t: i64,
    x0: &BigRational,
    count: usize,
) -> Result<Vec<BigRational>> {
    let g = eulerian_egf_kernel(nu, x0, count)?;
    let one = TruncSeries::one(count);
    let first = g.scale(&x0.recip()).pow_int(s)?;
    let second = (&one - &g)
        .scale(&(BigRational::one() - x0).recip())
        .pow_int(-(s + t))?;
    Ok((&first * &second).egf_coeffs())
}

/// First-order special case by direct expansion:
/// `A_n(x0) = (1 - x0)^(s+t+n) n! [u^n] e^(s u) / (1 - x0 e^u)^(s+t)`.
pub fn egf_eulerian_order1_direct(
    s: i64,
    t: i64,
    x0: &BigRational,
    count: usize,
) -> Result<Vec<BigRational>> {
    if !unit_interval(x0) {
        return Err(Error::SeriesDomain(format!("x0 = {x0} must lie in (0,1)")));
    }
    let u = TruncSeries::var(count);
    let e_su = u.scale(&q(s)).exp()?;
    let e_u = TruncSeries::from_fn(count, |i| qi(factorial(i as u64)).recip());
    let denom = &TruncSeries::one(count) - &e_u.scale(x0);
    let f = &e_su * &denom.pow_int(-(s + t))?;
    let base = BigRational::one() - x0;
    Ok(f.egf_coeffs()
        .into_iter()
        .enumerate()
        .map(|(n, c)| c * pow_signed(&base, s + t + n as i64))
        .collect())
}

fn pow_signed(x: &BigRational, e: i64) -> BigRational {
    let p = num_traits::pow(x.clone(), e.unsigned_abs() as usize);
    if e < 0 {
        p.recip()
    } else {
        p
    }
}

/// `h(y) = T_{nu+1}(exp(y (1+x0)^(-nu)) T_{nu+1}^{-1}(x0/(1+x0)))`, solved as
/// `h' = c h (1 - h)^(-nu)`, `h(0) = x0/(1+x0)`.
pub fn ward_egf_kernel(nu: u32, x0: &BigRational, order: usize) -> Result<TruncSeries> {
    if !x0.is_positive() {
        return Err(Error::SeriesDomain(format!("x0 = {x0} must be positive")));
    }
    let shifted = BigRational::one() + x0;
    let c = pow_signed(&shifted, -(nu as i64));
    solve_autonomous(x0 / &shifted, order, |h| {
        let one = TruncSeries::one(h.order());
        Ok(&h.scale(&c) * &(&one - h).pow_int(-(nu as i64))?)
    })
}

/// Coefficients of `y^n / n!` in the Ward EGF at `x = x0`.
pub fn egf_ward_coeffs(
    nu: u32,
    s: i64,
    t: i64,
    x0: &BigRational,
    count: usize,
) -> Result<Vec<BigRational>> {
    let h = ward_egf_kernel(nu, x0, count)?;
    let one = TruncSeries::one(count);
    let prefactor = (pow_signed(x0, s) * pow_signed(&(BigRational::one() + x0), t)).recip();
    let f = &h.pow_int(s)? * &(&one - &h).pow_int(-(s + t))?;
    Ok(f.scale(&prefactor).egf_coeffs())
}

/// Row polynomials of a triangle evaluated at `x0`.
pub fn row_evaluations(tri: &Triangle<BigInt>, x0: &BigRational) -> Vec<BigRational> {
    tri.rows()
        .iter()
        .map(|row| crate::numerics::eval_row(row, x0))
        .collect()
}

/// Eulerian EGF coefficients against `P_n(x0)` from the recurrence, `n <= count`.
pub fn egf_eulerian_matches_table(
    nu: u32,
    s: i64,
    t: i64,
    x0: &BigRational,
    count: usize,
) -> Result<bool> {
    let tri = eulerian_table(&Params::new(nu, s, t)?, count)?;
    Ok(egf_eulerian_coeffs(nu, s, t, x0, count)? == row_evaluations(&tri, x0))
}

pub fn egf_ward_matches_table(
    nu: u32,
    s: i64,
    t: i64,
    x0: &BigRational,
    count: usize,
) -> Result<bool> {
    let tri = ward_table(&Params::new(nu, s, t)?, count)?;
    Ok(egf_ward_coeffs(nu, s, t, x0, count)? == row_evaluations(&tri, x0))
}

/// `F_W(x0, y) = F_E(x0/(1+x0), y (1+x0))` coefficientwise: the Ward
/// coefficient `n` equals the order-`nu+1` Eulerian coefficient times `(1+x0)^n`.
pub fn egf_transform_check(
    nu: u32,
    s: i64,
    t: i64,
    x0: &BigRational,
    count: usize,
) -> Result<bool> {
    let shifted = BigRational::one() + x0;
    let ward = egf_ward_coeffs(nu, s, t, x0, count)?;
    let euler = egf_eulerian_coeffs(nu + 1, s, t, &(x0 / &shifted), count)?;
    Ok(ward
        .iter()
        .zip(&euler)
        .enumerate()
        .all(|(n, (w, e))| *w == e * num_traits::pow(shifted.clone(), n)))
}

/// `x A_n(x) / (1-x)^(n+s+t) = sum_{k>=1} (s+t)^(k-1 rising) / (k-1)! (k+s-1)^n x^k`
/// through degree `order`.
pub fn order1_power_sum_check(n: usize, s: i64, t: i64, order: usize) -> Result<bool> {
    let row = eulerian_table(&Params::new(1, s, t)?, n)?.row(n).to_vec();
    let poly = TruncSeries::new(row.into_iter().map(qi).collect(), order);
    let one = TruncSeries::one(order);
    let x = TruncSeries::var(order);
    let lhs = &poly.shift() * &(&one - &x).pow_int(-(n as i64 + s + t))?;
    let st = BigInt::from(s + t);
    let rhs = TruncSeries::from_fn(order, |k| {
        if k == 0 {
            return BigRational::zero();
        }
        BigRational::new(rising_factorial(&st, k as u32 - 1), factorial(k as u64 - 1))
            * qi(ipow(k as i64 + s - 1, n as u32))
    });
    Ok(lhs == rhs)
}

/// `x e^(x(s-1)) B_n(x) / (1-x)^(2n+s+t)` against
/// `sum_{k>=1} (x e^-x)^k / (k-1)! sum_j C(k-1,j) (s+t)^(j rising) (s+j) (k+s-1)^(n+k-j-2)`.
pub fn order2_power_sum_check(n: usize, s: i64, t: i64, order: usize) -> Result<bool> {
    let row = eulerian_table(&Params::new(2, s, t)?, n)?.row(n).to_vec();
    let poly = TruncSeries::new(row.into_iter().map(qi).collect(), order);
    let one = TruncSeries::one(order);
    let x = TruncSeries::var(order);
    let exp_part = x.scale(&q(s - 1)).exp()?;
    let lhs = &(&poly.shift() * &exp_part) * &(&one - &x).pow_int(-(2 * n as i64 + s + t))?;

    let base = &x * &(-&x).exp()?;
    let st = BigInt::from(s + t);
    let n_i = n as i64;
    let mut rhs = TruncSeries::zero(order);
    let mut power = TruncSeries::one(order);
    for k in 1..=order as i64 {
        power = &power * &base;
        let inner = (0..k).fold(BigRational::zero(), |acc, j| {
            acc + qi(binomial(k - 1, j) * rising_factorial(&st, j as u32))
                * shifted_power(s + j, k + s - 1, n_i + k - j - 2)
        });
        let weight = inner / qi(factorial(k as u64 - 1));
        rhs = &rhs + &power.scale(&weight);
    }
    Ok(lhs == rhs)
}

/// `1 = sum_j C(n,j) j! j / n^(j+1) = sum_j C(n,j) (j+1)! / (n+1)^(j+1)` for `1 <= n <= nmax`.
pub fn factorial_sum_check(nmax: usize) -> bool {
    (1..=nmax as i64).all(|n| {
        let first = (0..=n).fold(BigRational::zero(), |acc, j| {
            acc + BigRational::new(
                binomial(n, j) * factorial(j as u64) * j,
                ipow(n, j as u32 + 1),
            )
        });
        let second = (0..=n).fold(BigRational::zero(), |acc, j| {
            acc + BigRational::new(
                binomial(n, j) * factorial(j as u64 + 1),
                ipow(n + 1, j as u32 + 1),
            )
        });
        first.is_one() && second.is_one()
    })
}
