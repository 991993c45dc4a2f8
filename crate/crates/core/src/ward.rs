//! Generalized (s,t)-Ward triangles and the binomial inverse pair linking
//! them to the Eulerian triangle of one order higher.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::eulerian::{classic_second_order, Indexing};
use crate::numerics::{assoc_stirling_subset, binomial, Coeff, PolyST};
use crate::params::Params;
use crate::triangle::{Triangle, TriangleKind};

/// Builds the `nu`-order generalized `(s,t)`-Ward triangle.
pub fn ward_table(p: &Params, nmax: usize) -> Result<Triangle<BigInt>> {
    Triangle::build(
        TriangleKind::Ward,
        p.nu,
        BigInt::from(p.s),
        BigInt::from(p.t),
        nmax,
    )
}

pub fn ward_table_poly(nu: u32, nmax: usize) -> Result<Triangle<PolyST>> {
    Triangle::build(TriangleKind::Ward, nu, PolyST::s(), PolyST::t(), nmax)
}

fn check_len<C>(row: &[C], n: usize) -> Result<()> {
    if row.len() != n + 1 {
        return Err(Error::LengthMismatch {
            expected: n + 1,
            found: row.len(),
        });
    }
    Ok(())
}

/// `W(n,k) = sum_{j<=k} E(n,j) C(n-j, n-k)`, where `E` is row `n` of the
/// Eulerian triangle of order `nu + 1`.
pub fn euler_to_ward<C: Coeff>(euler_row: &[C], n: usize) -> Result<Vec<C>> {
    check_len(euler_row, n)?;
    Ok(binomial_transform(euler_row, n, false))
}

/// Inverse of [`euler_to_ward`]: `E(n,k) = sum_{j<=k} (-1)^(k-j) W(n,j) C(n-j, n-k)`.
pub fn ward_to_euler<C: Coeff>(ward_row: &[C], n: usize) -> Result<Vec<C>> {
    check_len(ward_row, n)?;
    Ok(binomial_transform(ward_row, n, true))
}

fn binomial_transform<C: Coeff>(row: &[C], n: usize, alternate: bool) -> Vec<C> {
    let n_i = n as i64;
    (0..=n_i)
        .map(|k| {
            (0..=k).fold(C::zero(), |acc, j| {
                let mut c = binomial(n_i - j, n_i - k);
                if alternate && (k - j) % 2 == 1 {
                    c = -c;
                }
                acc + C::from_int(&c) * row[j as usize].clone()
            })
        })
        .collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Direction {
    /// `a_k = sum_j a^_j C(n-j, n-k) r^(k-j)`.
    Forward,
    /// `a^_k = sum_j a_j C(n-j, n-k) (-r)^(k-j)`.
    Backward,
}

/// The ratio-`r` binomial inverse pair on a single row.
pub fn general_inverse_transform(
    row: &[BigRational],
    n: usize,
    r: &BigRational,
    direction: Direction,
) -> Result<Vec<BigRational>> {
    check_len(row, n)?;
    let ratio = match direction {
        Direction::Forward => r.clone(),
        Direction::Backward => -r.clone(),
    };
    let n_i = n as i64;
    let powers: Vec<BigRational> = (0..=n)
        .scan(BigRational::one(), |acc, _| {
            let cur = acc.clone();
            *acc *= &ratio;
            Some(cur)
        })
        .collect();
    Ok((0..=n_i)
        .map(|k| {
            (0..=k).fold(BigRational::zero(), |acc, j| {
                let c = BigRational::from_integer(binomial(n_i - j, n_i - k));
                acc + c * &powers[(k - j) as usize] * &row[j as usize]
            })
        })
        .collect())
}

/// Coefficients of the general triangular recurrence
/// `|n,k| = (alpha n + beta k + gamma) |n-1,k| + (alpha' n + beta' k + gamma') |n-1,k-1| + [n=k=0]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InversePairParams {
    pub alpha: BigRational,
    pub beta: BigRational,
    pub gamma: BigRational,
    pub alpha_p: BigRational,
    pub beta_p: BigRational,
    pub gamma_p: BigRational,
}

impl InversePairParams {
    pub fn from_ints(v: [i64; 6]) -> Self {
        let q = |x: i64| BigRational::from_integer(BigInt::from(x));
        InversePairParams {
            alpha: q(v[0]),
            beta: q(v[1]),
            gamma: q(v[2]),
            alpha_p: q(v[3]),
            beta_p: q(v[4]),
            gamma_p: q(v[5]),
        }
    }

    /// Recurrence of the `(nu+1)`-order `(s,t)`-Eulerian numbers.
    pub fn eulerian(nu: u32, s: i64, t: i64) -> Self {
        let nu = nu as i64;
        Self::from_ints([0, 1, s, nu + 1, -1, t - nu])
    }

    /// Recurrence of the `nu`-order `(s,t)`-Ward numbers.
    pub fn ward(nu: u32, s: i64, t: i64) -> Self {
        let nu = nu as i64;
        Self::from_ints([0, 1, s, nu, 1, t + s - nu - 1])
    }

    /// `beta' / beta`, the ratio of the inverse pair.
    pub fn ratio(&self) -> Result<BigRational> {
        if self.beta.is_zero() {
            return Err(Error::InvalidParams("beta must be nonzero".into()));
        }
        Ok(&self.beta_p / &self.beta)
    }

    /// Rows `0..=nmax` of the recurrence over the rationals.
    pub fn solve(&self, nmax: usize) -> Vec<Vec<BigRational>> {
        let mut rows = vec![vec![BigRational::one()]];
        for n in 1..=nmax {
            let nq = BigRational::from_integer(BigInt::from(n));
            let prev = &rows[n - 1];
            let row = (0..=n)
                .map(|k| {
                    let kq = BigRational::from_integer(BigInt::from(k));
                    let mut v = BigRational::zero();
                    if k < n {
                        v += (&self.alpha * &nq + &self.beta * &kq + &self.gamma) * &prev[k];
                    }
                    if k >= 1 {
                        v += (&self.alpha_p * &nq + &self.beta_p * &kq + &self.gamma_p)
                            * &prev[k - 1];
                    }
                    v
                })
                .collect();
            rows.push(row);
        }
        rows
    }
}

/// Checks `sum_{i=j}^{k} (-1)^(i+j) C(n-i, n-k) C(n-j, n-i) = [j = k]`
/// for every `0 <= j <= k <= kmax`.
pub fn riordan_orthogonality_check(n: usize, kmax: usize) -> bool {
    let n_i = n as i64;
    (0..=kmax as i64).all(|k| {
        (0..=k).all(|j| {
            let sum: BigInt = (j..=k)
                .map(|i| {
                    let c = binomial(n_i - i, n_i - k) * binomial(n_i - j, n_i - i);
                    if (i + j) % 2 == 0 {
                        c
                    } else {
                        -c
                    }
                })
                .sum();
            sum == BigInt::from((j == k) as i64)
        })
    })
}

/// First instance `(n, k, which)` where one of the two identities linking
/// standard second-order Eulerian numbers with associated Stirling subset
/// numbers fails; `which` is 1 or 2.
pub fn smiley_identities_violation(nmax: usize) -> Option<(usize, usize, u8)> {
    for n in 1..=nmax as i64 {
        for k in 0..=n {
            let lhs = classic_second_order(n as usize, k as usize, Indexing::Standard);
            let rhs: BigInt = (0..=k)
                .map(|j| {
                    let c = assoc_stirling_subset((n + j + 1) as usize, (j + 1) as usize)
                        * binomial(n - j - 1, k - j);
                    if (k - j) % 2 == 0 {
                        c
                    } else {
                        -c
                    }
                })
                .sum();
            if lhs != rhs {
                return Some((n as usize, k as usize, 1));
            }

            let lhs = assoc_stirling_subset((n + k) as usize, k as usize);
            let rhs: BigInt = (0..=k)
                .map(|j| {
                    classic_second_order(n as usize, j as usize, Indexing::Standard)
                        * binomial(n - j - 1, k - j - 1)
                })
                .sum();
            if lhs != rhs {
                return Some((n as usize, k as usize, 2));
            }
        }
    }
    None
}

pub fn smiley_identities_check(nmax: usize) -> bool {
    smiley_identities_violation(nmax).is_none()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::eulerian::eulerian_table;
    use proptest::prelude::*;

    fn p(nu: u32, s: i64, t: i64) -> Params {
        Params::new(nu, s, t).unwrap()
    }

    fn rat(a: i64, b: i64) -> BigRational {
        BigRational::new(BigInt::from(a), BigInt::from(b))
    }

    #[test]
    fn classic_ward_numbers() {
        let w = ward_table(&p(1, 0, 1), 14).unwrap();
        assert_eq!(w.entry(0, 0), BigInt::one());
        for n in 0..=14usize {
            for k in 0..=(14 - n) {
                assert_eq!(
                    w.entry(n as i64, k as i64),
                    assoc_stirling_subset(n + k, k),
                    "W({n},{k})"
                );
            }
        }
    }

    #[test]
    fn ward_entry_via_euler_sum() {
        // W^(1)(2,1;1,0) = sum_j <2,j>^(2)_(1,0) C(2-j, 1)
        let e = eulerian_table(&p(2, 1, 0), 2).unwrap();
        let rhs: BigInt = (0..=1).map(|j| e.entry(2, j) * binomial(2 - j, 1)).sum();
        assert_eq!(ward_table(&p(1, 1, 0), 2).unwrap().entry(2, 1), rhs);
        assert_eq!(rhs, BigInt::from(4));
    }

    #[test]
    fn euler_ward_inverse_pair() {
        assert_eq!(
            euler_to_ward(&[BigInt::one()], 0).unwrap(),
            vec![BigInt::one()]
        );
        assert_eq!(
            ward_to_euler(&[BigInt::one()], 0).unwrap(),
            vec![BigInt::one()]
        );
        assert!(euler_to_ward(&[BigInt::one()], 2).is_err());
        for nu in 1..=3u32 {
            for s in 0..=3i64 {
                for t in -2..=2i64 {
                    let e = eulerian_table(&p(nu + 1, s, t), 10).unwrap();
                    let w = ward_table(&p(nu, s, t), 10).unwrap();
                    for n in 0..=10 {
                        assert_eq!(
                            euler_to_ward(e.row(n), n).unwrap(),
                            w.row(n),
                            "nu={nu} s={s} t={t} n={n}"
                        );
                        assert_eq!(ward_to_euler(w.row(n), n).unwrap(), e.row(n));
                    }
                }
            }
        }
    }

    #[test]
    fn inverse_pair_holds_symbolically() {
        let e = crate::eulerian::eulerian_table_poly(3, 6).unwrap();
        let w = ward_table_poly(2, 6).unwrap();
        for n in 0..=6 {
            assert_eq!(euler_to_ward(e.row(n), n).unwrap(), w.row(n));
        }
    }

    #[test]
    fn ward_to_euler_recovers_traditional_second_order() {
        let w = ward_table(&p(1, 0, 1), 8).unwrap();
        for n in 0..=8 {
            let e = ward_to_euler(w.row(n), n).unwrap();
            for (k, v) in e.iter().enumerate() {
                assert_eq!(*v, classic_second_order(n, k, Indexing::Traditional));
            }
        }
    }

    #[test]
    fn general_transform_specializations() {
        let row: Vec<BigRational> = [1, 7, 3, 0].iter().map(|&x| rat(x, 1)).collect();
        let ints: Vec<BigInt> = [1, 7, 3, 0].iter().map(|&x| BigInt::from(x)).collect();
        let fwd = general_inverse_transform(&row, 3, &rat(1, 1), Direction::Forward).unwrap();
        let expect: Vec<BigRational> = euler_to_ward(&ints, 3)
            .unwrap()
            .into_iter()
            .map(BigRational::from_integer)
            .collect();
        assert_eq!(fwd, expect);
        let back = general_inverse_transform(&row, 3, &rat(1, 1), Direction::Backward).unwrap();
        let expect: Vec<BigRational> = ward_to_euler(&ints, 3)
            .unwrap()
            .into_iter()
            .map(BigRational::from_integer)
            .collect();
        assert_eq!(back, expect);
        let id = general_inverse_transform(&row, 3, &rat(0, 1), Direction::Forward).unwrap();
        assert_eq!(id, row);
    }

    #[test]
    fn general_pair_with_solved_recurrences() {
        for nu in 1..=3u32 {
            for &(s, t) in &[(1, 0), (0, 1), (2, 2)] {
                let mu = InversePairParams::eulerian(nu, s, t);
                let mu_hat = InversePairParams::ward(nu, s, t);
                let r = mu.ratio().unwrap();
                assert_eq!(r, rat(-1, 1));
                let a = mu.solve(8);
                let a_hat = mu_hat.solve(8);
                for n in 0..=8 {
                    let fwd =
                        general_inverse_transform(&a_hat[n], n, &r, Direction::Forward).unwrap();
                    assert_eq!(fwd, a[n]);
                    let back =
                        general_inverse_transform(&a[n], n, &r, Direction::Backward).unwrap();
                    assert_eq!(back, a_hat[n]);
                }
                let direct = eulerian_table(&p(nu + 1, s, t), 8).unwrap();
                for n in 0..=8 {
                    let as_rat: Vec<BigRational> = direct
                        .row(n)
                        .iter()
                        .cloned()
                        .map(BigRational::from_integer)
                        .collect();
                    assert_eq!(as_rat, a[n]);
                }
            }
        }
        let mut bad = InversePairParams::ward(1, 1, 0);
        bad.beta = BigRational::zero();
        assert!(bad.ratio().is_err());
    }

    #[test]
    fn orthogonality_and_smiley() {
        assert!(riordan_orthogonality_check(5, 5));
        assert!(riordan_orthogonality_check(10, 10));
        assert!(riordan_orthogonality_check(0, 0));
        assert!(smiley_identities_check(1));
        assert!(smiley_identities_check(8));
    }

    proptest! {
        #[test]
        fn ratio_roundtrip(
            n in 0usize..=8,
            num in -5i64..=5,
            den in 1i64..=5,
            seed in prop::collection::vec(-50i64..50, 9),
        ) {
            let r = rat(num, den);
            let row: Vec<BigRational> = seed[..=n].iter().map(|&x| rat(x, 1)).collect();
            let fwd = general_inverse_transform(&row, n, &r, Direction::Forward).unwrap();
            let back = general_inverse_transform(&fwd, n, &r, Direction::Backward).unwrap();
            prop_assert_eq!(&back, &row);
            let back_first = general_inverse_transform(&row, n, &r, Direction::Backward).unwrap();
            let again = general_inverse_transform(&back_first, n, &r, Direction::Forward).unwrap();
            prop_assert_eq!(again, row);
        }
    }
}
