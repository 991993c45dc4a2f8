//! Higher-order (s,t)-Eulerian triangles and their closed forms.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::numerics::{
    binomial, factorial, falling_factorial, ipow, rising_factorial, shifted_power, stirling_subset,
    PolyST,
};
use crate::params::Params;
use crate::triangle::{Triangle, TriangleKind};

/// Builds the `nu`-order `(s,t)`-Eulerian triangle up to row `nmax` with
/// integer `s`, `t`. Any integers are accepted; `s = 0` and negative `t`
/// are meaningful values of the underlying polynomials.
pub fn eulerian_table(p: &Params, nmax: usize) -> Result<Triangle<BigInt>> {
    Triangle::build(
        TriangleKind::Eulerian,
        p.nu,
        BigInt::from(p.s),
        BigInt::from(p.t),
        nmax,
    )
}

/// Same triangle with `s` and `t` kept as indeterminates.
pub fn eulerian_table_poly(nu: u32, nmax: usize) -> Result<Triangle<PolyST>> {
    Triangle::build(TriangleKind::Eulerian, nu, PolyST::s(), PolyST::t(), nmax)
}

/// Coefficients of `P_n(x; s, t) = sum_k <n,k> x^k`.
pub fn eulerian_poly(p: &Params, n: usize) -> Result<Vec<BigInt>> {
    Ok(eulerian_table(p, n)?.row(n).to_vec())
}

/// `prod_{k=0}^{n-1} (k nu + t + s)`, the total count of sequences of size `n`.
pub fn row_sum_product(p: &Params, n: usize) -> BigInt {
    (0..n as i64)
        .map(|k| BigInt::from(k * p.nu as i64 + p.t + p.s))
        .product()
}

fn divide_exact(sum: BigRational, k: usize, context: &str) -> Result<BigInt> {
    let divisor = factorial(k as u64);
    let inexact = || Error::InexactDivision {
        context: context.to_string(),
        divisor: divisor.to_string(),
    };
    if !sum.is_integer() {
        return Err(inexact());
    }
    let (q, r) = sum.to_integer().div_rem(&divisor);
    if !r.is_zero() {
        return Err(inexact());
    }
    Ok(q)
}

fn check_range(n: usize, k: usize) -> Result<()> {
    if k > n {
        return Err(Error::InvalidParams(format!(
            "closed form needs 0 <= k <= n, got n={n}, k={k}"
        )));
    }
    Ok(())
}

/// First-order closed form:
/// `(1/k!) sum_j (-1)^(k-j) C(k,j) (n+s+t)_(k-j) (s+t)^(j) (s+j)^n`.
pub fn closed_form_order1(n: usize, k: usize, s: i64, t: i64) -> Result<BigInt> {
    check_range(n, k)?;
    let top = BigInt::from(n as i64 + s + t);
    let st = BigInt::from(s + t);
    let mut sum = BigInt::zero();
    for j in 0..=k {
        let mut term = binomial(k as i64, j as i64)
            * falling_factorial(&top, (k - j) as u32)
            * rising_factorial(&st, j as u32)
            * ipow(s + j as i64, n as u32);
        if (k - j) % 2 == 1 {
            term = -term;
        }
        sum += term;
    }
    divide_exact(BigRational::from_integer(sum), k, "first-order closed form")
}

/// Second-order closed form (triple sum over `r`, `p`, `j`), divided by `k!`.
pub fn closed_form_order2(n: usize, k: usize, s: i64, t: i64) -> Result<BigInt> {
    check_range(n, k)?;
    let (n_i, k_i) = (n as i64, k as i64);
    let top = BigInt::from(s + t + 2 * n_i);
    let st = BigInt::from(s + t);
    let mut sum = BigRational::zero();
    for r in 0..=k_i {
        let outer = binomial(k_i, r) * falling_factorial(&top, (k_i - r) as u32);
        let mut middle = BigRational::zero();
        for p in 0..=r {
            let mut inner = BigRational::zero();
            for j in 0..=p {
                let c = binomial(p, j) * rising_factorial(&st, j as u32);
                inner +=
                    BigRational::from_integer(c) * shifted_power(s + j, p + s, n_i + r - j - 1);
            }
            let sign = if (k_i - p) % 2 == 0 { 1 } else { -1 };
            middle += BigRational::from_integer(binomial(r, p) * sign) * inner;
        }
        sum += BigRational::from_integer(outer) * middle;
    }
    divide_exact(sum, k, "second-order closed form")
}

/// Which of the two customary index conventions a classic number uses.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Indexing {
    /// `<n,k>`: the `(s,t) = (1,0)` member.
    Standard,
    /// `A(n,k)` / `B_{n,k}`: the `(s,t) = (0,1)` member, shifted by one.
    Traditional,
}

/// Ordinary Eulerian numbers via the alternating binomial sum.
pub fn classic_eulerian(n: usize, k: usize, indexing: Indexing) -> BigInt {
    let shift = match indexing {
        Indexing::Standard => 1,
        Indexing::Traditional => 0,
    };
    (0..=k as i64)
        .map(|j| {
            let term = binomial(n as i64 + 1, j) * ipow(k as i64 - j + shift, n as u32);
            if j % 2 == 0 {
                term
            } else {
                -term
            }
        })
        .sum()
}

/// Ordinary second-order Eulerian numbers via alternating Stirling-subset sums.
pub fn classic_second_order(n: usize, k: usize, indexing: Indexing) -> BigInt {
    let shift = match indexing {
        Indexing::Standard => 1,
        Indexing::Traditional => 0,
    };
    (0..=k)
        .map(|r| {
            let term = binomial(1 + 2 * n as i64, (k - r) as i64)
                * stirling_subset(n + r + shift, r + shift);
            if (k - r).is_multiple_of(2) {
                term
            } else {
                -term
            }
        })
        .sum()
}

/// Closed forms at `t = -s` for orders one and two.
pub fn s_minus_s_closed_form(nu: u32, n: usize, k: usize, s: i64) -> Result<BigInt> {
    match nu {
        1 => {
            if k > n {
                return Ok(BigInt::zero());
            }
            let v = binomial(n as i64, k as i64) * ipow(s, n as u32);
            Ok(if k % 2 == 1 { -v } else { v })
        }
        2 => {
            let (n_i, k_i) = (n as i64, k as i64);
            let mut sum = BigRational::zero();
            for r in 0..=k_i {
                let mut inner = BigRational::zero();
                for p in 0..=r {
                    let sign = if (k_i - p) % 2 == 0 { 1 } else { -1 };
                    inner += BigRational::from_integer(binomial(r, p) * sign)
                        * shifted_power(s, p + s, n_i + r - 1);
                }
                let weight = BigRational::new(binomial(2 * n_i, k_i - r), factorial(r as u64));
                sum += weight * inner;
            }
            if !sum.is_integer() {
                return Err(Error::InexactDivision {
                    context: "second-order (s,-s) closed form".into(),
                    divisor: sum.denom().to_string(),
                });
            }
            Ok(sum.to_integer())
        }
        _ => Err(Error::InvalidParams(format!(
            "(s,-s) closed forms exist for nu in {{1,2}}, got {nu}"
        ))),
    }
}

/// Evaluates the polynomial `P_n(x)` of an integer row at a rational point.
pub fn eval_poly_at(row: &[BigInt], x: &BigRational) -> BigRational {
    crate::numerics::eval_row(row, x)
}

/// True when every entry is non-negative. The combinatorial range
/// (`s >= 1`, `t >= 0`) always satisfies this.
pub fn is_nonnegative(tri: &Triangle<BigInt>) -> bool {
    tri.rows().iter().flatten().all(|v| !v.is_negative())
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;

    fn p(nu: u32, s: i64, t: i64) -> Params {
        Params::new(nu, s, t).unwrap()
    }

    fn one() -> BigInt {
        BigInt::one()
    }

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn base_case_and_known_rows() {
        let tri = eulerian_table(&p(2, 1, 0), 3).unwrap();
        assert_eq!(tri.entry(0, 0), one());
        assert_eq!(tri.entry(3, 1), BigInt::from(8));
        assert_eq!(eulerian_poly(&p(2, 1, 0), 3).unwrap(), ints(&[1, 8, 6, 0]));
        assert_eq!(eulerian_poly(&p(2, 1, 0), 0).unwrap(), ints(&[1]));
        // ordinary Eulerian numbers
        assert_eq!(
            eulerian_poly(&p(1, 1, 0), 4).unwrap(),
            ints(&[1, 11, 11, 1, 0])
        );
        // third order, OEIS A219512 row 3
        assert_eq!(
            eulerian_poly(&p(3, 1, 0), 3).unwrap(),
            ints(&[1, 12, 15, 0])
        );
    }

    #[test]
    fn rejects_nu_zero() {
        let bad = Params {
            nu: 0,
            s: 1,
            t: 0,
            tvec: None,
        };
        assert!(eulerian_table(&bad, 3).is_err());
        assert!(eulerian_table_poly(0, 3).is_err());
    }

    #[test]
    fn row_sums_match_product() {
        let tri = eulerian_table(&p(3, 1, 2), 5).unwrap();
        for n in 0..=5 {
            let expected: BigInt = (0..n as i64).map(|k| BigInt::from(3 * k + 3)).product();
            assert_eq!(tri.row_sum(n), expected);
        }
        assert_eq!(row_sum_product(&p(2, 1, 0), 3), BigInt::from(15));
        assert_eq!(row_sum_product(&p(5, 4, 4), 0), one());
        assert_eq!(row_sum_product(&p(3, 2, 1), 2), BigInt::from(18));
        assert_eq!(
            eulerian_poly(&p(1, 1, 0), 2)
                .unwrap()
                .iter()
                .sum::<BigInt>(),
            BigInt::from(2)
        );
    }

    #[test]
    fn closed_form_examples() {
        assert_eq!(closed_form_order1(0, 0, 1, 0).unwrap(), one());
        assert_eq!(closed_form_order1(2, 1, 1, 0).unwrap(), one());
        assert_eq!(closed_form_order2(0, 0, 3, 5).unwrap(), one());
        assert_eq!(closed_form_order2(0, 0, 0, 1).unwrap(), one());
        assert_eq!(closed_form_order2(3, 1, 1, 0).unwrap(), BigInt::from(8));
        assert!(closed_form_order1(2, 3, 1, 0).is_err());
    }

    #[test]
    fn closed_forms_match_recurrence() {
        for &(s, t) in &[(1, 0), (0, 1), (2, 3), (3, 1)] {
            let t1 = eulerian_table(&p(1, s, t), 10).unwrap();
            let t2 = eulerian_table(&p(2, s, t), 8).unwrap();
            for n in 0..=10usize {
                for k in 0..=n {
                    assert_eq!(
                        closed_form_order1(n, k, s, t).unwrap(),
                        t1.entry(n as i64, k as i64)
                    );
                    if n <= 8 {
                        assert_eq!(
                            closed_form_order2(n, k, s, t).unwrap(),
                            t2.entry(n as i64, k as i64),
                            "order 2 n={n} k={k} s={s} t={t}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn classic_numbers() {
        assert_eq!(classic_eulerian(2, 1, Indexing::Standard), one());
        assert_eq!(classic_eulerian(0, 0, Indexing::Standard), one());
        assert_eq!(
            classic_second_order(2, 1, Indexing::Standard),
            BigInt::from(2)
        );
        let std2 = eulerian_table(&p(2, 1, 0), 8).unwrap();
        let trad1 = eulerian_table(&p(1, 0, 1), 10).unwrap();
        let trad2 = eulerian_table(&p(2, 0, 1), 8).unwrap();
        for n in 0..=10usize {
            for k in 0..=n {
                let (ni, ki) = (n as i64, k as i64);
                assert_eq!(
                    classic_eulerian(n, k, Indexing::Traditional),
                    trad1.entry(ni, ki)
                );
                if n >= 1 && k >= 1 {
                    assert_eq!(
                        classic_eulerian(n, k, Indexing::Traditional),
                        classic_eulerian(n, k - 1, Indexing::Standard)
                    );
                }
                if n <= 8 {
                    assert_eq!(
                        classic_second_order(n, k, Indexing::Standard),
                        std2.entry(ni, ki)
                    );
                    assert_eq!(
                        classic_second_order(n, k, Indexing::Traditional),
                        trad2.entry(ni, ki)
                    );
                    if n >= 1 && k >= 1 {
                        assert_eq!(
                            classic_second_order(n, k, Indexing::Traditional),
                            classic_second_order(n, k - 1, Indexing::Standard)
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn s_minus_s_forms() {
        assert_eq!(
            s_minus_s_closed_form(1, 3, 1, 2).unwrap(),
            BigInt::from(-24)
        );
        assert!(s_minus_s_closed_form(3, 1, 1, 1).is_err());
        for s in 1..=3i64 {
            let t1 = eulerian_table(&p(1, s, -s), 8).unwrap();
            for n in 0..=8usize {
                for k in 0..=n {
                    assert_eq!(
                        s_minus_s_closed_form(1, n, k, s).unwrap(),
                        t1.entry(n as i64, k as i64)
                    );
                }
            }
        }
        for s in 1..=2i64 {
            let t2 = eulerian_table(&p(2, s, -s), 6).unwrap();
            for n in 0..=6usize {
                for k in 0..=n {
                    assert_eq!(
                        s_minus_s_closed_form(2, n, k, s).unwrap(),
                        t2.entry(n as i64, k as i64),
                        "n={n} k={k} s={s}"
                    );
                }
            }
        }
    }

    #[test]
    fn polynomial_mode_specializes_to_integer_mode() {
        for nu in 1..=3 {
            let poly = eulerian_table_poly(nu, 8).unwrap();
            assert_eq!(poly.first_recurrence_violation(), None);
            for &(s, t) in &[(1, 0), (0, 1), (2, 1), (3, 2)] {
                assert_eq!(
                    poly.specialize(s, t),
                    eulerian_table(&p(nu, s, t), 8).unwrap()
                );
            }
        }
    }

    #[test]
    fn polynomial_degrees_bounded_by_row() {
        let poly = eulerian_table_poly(2, 6).unwrap();
        for n in 0..=6 {
            for v in poly.row(n) {
                assert!(v.degree_s().unwrap_or(0) as usize <= n);
                assert!(v.degree_t().unwrap_or(0) as usize <= n);
            }
        }
    }

    #[test]
    fn rational_evaluation() {
        let row = eulerian_poly(&p(2, 1, 0), 3).unwrap();
        let x = BigRational::new(BigInt::from(1), BigInt::from(3));
        // 1 + 8/3 + 6/9
        assert_eq!(
            eval_poly_at(&row, &x),
            BigRational::new(BigInt::from(13), BigInt::from(3))
        );
        assert!(is_nonnegative(&eulerian_table(&p(3, 2, 1), 6).unwrap()));
    }
}
