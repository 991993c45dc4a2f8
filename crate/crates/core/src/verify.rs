//! Cross-checking suites with machine-readable reports.
//!
//! Each suite is a fixed, ordered list of checks. Checks run on the rayon
//! pool, but results are collected in declaration order, so a report is a
//! pure function of `(suite, size level)`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::eulerian::{
    classic_eulerian, classic_second_order, closed_form_order1, closed_form_order2, eulerian_table,
    row_sum_product, s_minus_s_closed_form, Indexing,
};
use crate::numerics::assoc_stirling_subset;
use crate::params::Params;
use crate::series;
use crate::stirlingperm::{
    ascent_histogram, ascent_positions, enumerate_sequences, StirlingSeq, Word,
};
use crate::trees::{
    distinguished_set, forest_distinguished_set, forest_to_seq, leftmost_internal_set,
    perm_to_tree, seq_to_forest, tree_to_perm, ward_marked_row,
};
use crate::ward::{
    euler_to_ward, general_inverse_transform, riordan_orthogonality_check,
    smiley_identities_violation, ward_table, ward_to_euler, Direction, InversePairParams,
};

/// Enumeration checks skip sizes whose object count exceeds this.
pub const ENUMERATION_LIMIT: u64 = 100_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Suite {
    All,
    Examples,
    RecurrenceVsEnumeration,
    ClosedForms,
    InversePairs,
    Egf,
    SeriesIdentities,
    WardInterpretation,
}

impl Suite {
    /// The individual suites, in the order `all` runs them.
    pub const EACH: [Suite; 7] = [
        Suite::Examples,
        Suite::RecurrenceVsEnumeration,
        Suite::ClosedForms,
        Suite::InversePairs,
        Suite::Egf,
        Suite::SeriesIdentities,
        Suite::WardInterpretation,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::All => "all",
            Suite::Examples => "examples",
            Suite::RecurrenceVsEnumeration => "recurrence-vs-enumeration",
            Suite::ClosedForms => "closed-forms",
            Suite::InversePairs => "inverse-pairs",
            Suite::Egf => "egf",
            Suite::SeriesIdentities => "series-identities",
            Suite::WardInterpretation => "ward-interpretation",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        std::iter::once(Suite::All)
            .chain(Suite::EACH)
            .find(|suite| suite.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown suite {s:?}")))
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum SizeLevel {
    Small,
    #[default]
    Default,
}

impl SizeLevel {
    fn pick<T>(self, small: T, default: T) -> T {
        match self {
            SizeLevel::Small => small,
            SizeLevel::Default => default,
        }
    }
}

impl FromStr for SizeLevel {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "small" => Ok(SizeLevel::Small),
            "default" => Ok(SizeLevel::Default),
            _ => Err(Error::Parse(format!("unknown size level {s:?}"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CheckResult {
    pub id: String,
    pub params: Value,
    pub passed: bool,
    /// First failing instance, in the check's own iteration order.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Report {
    pub suite: String,
    pub checks: Vec<CheckResult>,
    pub passed: bool,
}

impl Report {
    pub fn failures(&self) -> impl Iterator<Item = &CheckResult> {
        self.checks.iter().filter(|c| !c.passed)
    }

    pub fn to_json_pretty(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

/// `Ok(None)` passes, `Ok(Some(w))` fails with witness `w`.
type Outcome = Result<Option<String>>;
type Runner = Box<dyn Fn() -> Outcome + Send + Sync>;

struct Case {
    id: String,
    params: Value,
    run: Runner,
}

fn case(
    id: impl Into<String>,
    params: Value,
    run: impl Fn() -> Outcome + Send + Sync + 'static,
) -> Case {
    Case {
        id: id.into(),
        params,
        run: Box::new(run),
    }
}

fn expect(ok: bool, witness: impl FnOnce() -> String) -> Outcome {
    Ok(if ok { None } else { Some(witness()) })
}

/// First `n` in `range` for which `bad(n)` reports a problem.
fn first_failure<I: IntoIterator>(range: I, mut bad: impl FnMut(I::Item) -> Outcome) -> Outcome {
    for item in range {
        if let Some(w) = bad(item)? {
            return Ok(Some(w));
        }
    }
    Ok(None)
}

pub fn run_suite(suite: Suite, level: SizeLevel) -> Report {
    let cases = match suite {
        Suite::All => Suite::EACH
            .iter()
            .flat_map(|&s| cases_for(s, level))
            .collect(),
        other => cases_for(other, level),
    };
    let checks: Vec<CheckResult> = cases
        .into_par_iter()
        .map(|c| {
            let (passed, witness) = match (c.run)() {
                Ok(None) => (true, None),
                Ok(Some(w)) => (false, Some(w)),
                Err(e) => (false, Some(format!("error: {e}"))),
            };
            CheckResult {
                id: c.id,
                params: c.params,
                passed,
                witness,
            }
        })
        .collect();
    let passed = checks.iter().all(|c| c.passed);
    Report {
        suite: suite.name().to_string(),
        checks,
        passed,
    }
}

fn cases_for(suite: Suite, level: SizeLevel) -> Vec<Case> {
    let cases = match suite {
        Suite::All => unreachable!("expanded by run_suite"),
        Suite::Examples => examples(),
        Suite::RecurrenceVsEnumeration => recurrence_vs_enumeration(level),
        Suite::ClosedForms => closed_forms(level),
        Suite::InversePairs => inverse_pairs(level),
        Suite::Egf => egf(level),
        Suite::SeriesIdentities => series_identities(level),
        Suite::WardInterpretation => ward_interpretation(level),
    };
    cases
        .into_iter()
        .map(|mut c| {
            c.id = format!("{}/{}", suite.name(), c.id);
            c
        })
        .collect()
}

/// Every composition of `t` into `s` non-negative parts, largest first part first.
pub fn compositions(t: u32, s: usize) -> Vec<Vec<u32>> {
    if s == 0 {
        return if t == 0 { vec![Vec::new()] } else { Vec::new() };
    }
    if s == 1 {
        return vec![vec![t]];
    }
    (0..=t)
        .rev()
        .flat_map(|head| {
            compositions(t - head, s - 1)
                .into_iter()
                .map(move |mut rest| {
                    rest.insert(0, head);
                    rest
                })
        })
        .collect()
}

fn parse_word(s: &str) -> Result<Word> {
    s.parse()
}

fn examples() -> Vec<Case> {
    let single = |id: &'static str,
                  w: &'static str,
                  nu: u32,
                  t: u32,
                  ascents: Vec<usize>,
                  d: Option<Vec<u32>>| {
        case(id, json!({"word": w, "nu": nu, "t": t}), move || {
            let word = parse_word(w)?;
            let n = word.labels().len() as u32;
            if !crate::stirlingperm::validate_word(word.letters(), nu, t, n) {
                return Ok(Some("word rejected".into()));
            }
            let asc = ascent_positions(word.letters());
            if asc != ascents {
                return Ok(Some(format!("ascents {asc:?}")));
            }
            let tree = perm_to_tree(&word, nu, t)?;
            if !tree.is_valid() || tree_to_perm(&tree) != word {
                return Ok(Some("tree roundtrip failed".into()));
            }
            let dist: Vec<u32> = distinguished_set(&tree).into_iter().collect();
            if let Some(expected) = &d {
                if &dist != expected {
                    return Ok(Some(format!("distinguished set {dist:?}")));
                }
            }
            let left = leftmost_internal_set(&tree).len() + usize::from(t == 0 && n > 0);
            expect(
                dist.len() == left && dist.len() == n as usize - asc.len(),
                || {
                    format!(
                        "|D| = {} but n - j = {}",
                        dist.len(),
                        n as usize - asc.len()
                    )
                },
            )
        })
    };
    let mut cases = vec![
        single("chain-tree", "333222111", 3, 0, vec![], None),
        single("zero-root-tree", "00112221", 3, 2, vec![2, 4], None),
        single(
            "single-ascent-tree",
            "133322211",
            3,
            0,
            vec![1],
            Some(vec![1, 3]),
        ),
        single(
            "trailing-zero-tree",
            "11222100",
            3,
            2,
            vec![2],
            Some(vec![1]),
        ),
    ];
    cases.push(case(
        "four-part-forest",
        json!({"seq": ["23332200", "555111", "0444", ""], "nu": 3, "tvec": [2, 0, 1, 0]}),
        || {
            let entries = ["23332200", "555111", "0444", ""]
                .iter()
                .map(|s| parse_word(s))
                .collect::<Result<Vec<_>>>()?;
            let seq = StirlingSeq {
                nu: 3,
                tvec: vec![2, 0, 1, 0],
                entries,
            };
            if !seq.is_valid(5) {
                return Ok(Some("sequence rejected".into()));
            }
            if seq.ascent_count() != 2 {
                return Ok(Some(format!("{} ascents", seq.ascent_count())));
            }
            let forest = seq_to_forest(&seq)?;
            let d: Vec<u32> = forest_distinguished_set(&forest).into_iter().collect();
            if d != [1, 2, 5] {
                return Ok(Some(format!("distinguished set {d:?}")));
            }
            expect(forest_to_seq(&forest) == seq, || {
                "forest roundtrip failed".into()
            })
        },
    ));
    cases
}

fn recurrence_vs_enumeration(level: SizeLevel) -> Vec<Case> {
    let nmax = level.pick(3u32, 5);
    let sum_max = level.pick(6usize, 10);
    let mut cases = Vec::new();
    for nu in 1..=3u32 {
        for s in 1..=3i64 {
            for t in 0..=2i64 {
                cases.push(case(
                    "histogram",
                    json!({"nu": nu, "s": s, "t": t, "nmax": nmax}),
                    move || {
                        let p = Params::new(nu, s, t)?;
                        let tri = eulerian_table(&p, nmax as usize)?;
                        first_failure(0..=nmax, |n| {
                            if row_sum_product(&p, n as usize) > BigInt::from(ENUMERATION_LIMIT) {
                                return Ok(None);
                            }
                            let hist = ascent_histogram(&p, n)?;
                            expect(hist == tri.row(n as usize), || {
                                format!("n={n}: enumerated {hist:?}")
                            })
                        })
                    },
                ));
            }
        }
    }
    for nu in 1..=3u32 {
        for s in 0..=3i64 {
            for t in 0..=2i64 {
                cases.push(case(
                    "row-sum",
                    json!({"nu": nu, "s": s, "t": t, "nmax": sum_max}),
                    move || {
                        let p = Params::new(nu, s, t)?;
                        let tri = eulerian_table(&p, sum_max)?;
                        first_failure(0..=sum_max, |n| {
                            expect(tri.row_sum(n) == row_sum_product(&p, n), || {
                                format!("n={n}")
                            })
                        })
                    },
                ));
            }
        }
    }
    for nu in 1..=3u32 {
        cases.push(case(
            "composition-independence",
            json!({"nu": nu, "s": 3, "t": 2, "nmax": nmax.min(4)}),
            move || {
                let reference = eulerian_table(&Params::new(nu, 3, 2)?, 4)?;
                first_failure(compositions(2, 3), |tvec| {
                    let p = Params::with_tvec(nu, tvec.clone())?;
                    first_failure(0..=nmax.min(4), |n| {
                        let hist = ascent_histogram(&p, n)?;
                        expect(hist == reference.row(n as usize), || {
                            format!("tvec={tvec:?} n={n}")
                        })
                    })
                })
            },
        ));
    }
    cases
}

const ST_PAIRS: [(i64, i64); 4] = [(1, 0), (0, 1), (2, 3), (3, 1)];

fn closed_forms(level: SizeLevel) -> Vec<Case> {
    let nmax = level.pick(8usize, 15);
    let classic_max = level.pick(6usize, 10);
    let sms_max = level.pick(5usize, 8);
    let mut cases = Vec::new();
    for (order, form) in [
        (
            1u32,
            closed_form_order1 as fn(usize, usize, i64, i64) -> Result<BigInt>,
        ),
        (2, closed_form_order2),
    ] {
        for (s, t) in ST_PAIRS {
            cases.push(case(
                format!("order{order}"),
                json!({"nu": order, "s": s, "t": t, "nmax": nmax}),
                move || {
                    let tri = eulerian_table(&Params::new(order, s, t)?, nmax)?;
                    first_failure(
                        (0..=nmax).flat_map(|n| (0..=n).map(move |k| (n, k))),
                        |(n, k)| {
                            let v = form(n, k, s, t)?;
                            expect(v == tri.row(n)[k], || {
                                format!("n={n} k={k}: closed form {v}")
                            })
                        },
                    )
                },
            ));
        }
    }
    for (order, classic) in [
        (
            1u32,
            classic_eulerian as fn(usize, usize, Indexing) -> BigInt,
        ),
        (2, classic_second_order),
    ] {
        cases.push(case(
            format!("classic-indexing-order{order}"),
            json!({"nu": order, "nmax": classic_max}),
            move || {
                let standard = eulerian_table(&Params::new(order, 1, 0)?, classic_max)?;
                let traditional = eulerian_table(&Params::new(order, 0, 1)?, classic_max)?;
                first_failure(
                    (0..=classic_max).flat_map(|n| (0..=n).map(move |k| (n, k))),
                    |(n, k)| {
                        let (ni, ki) = (n as i64, k as i64);
                        let std_v = classic(n, k, Indexing::Standard);
                        let trad_v = classic(n, k, Indexing::Traditional);
                        let shift_ok = n == 0 || trad_v == standard.entry(ni, ki - 1);
                        expect(
                            std_v == standard.entry(ni, ki)
                                && trad_v == traditional.entry(ni, ki)
                                && shift_ok,
                            || format!("n={n} k={k}"),
                        )
                    },
                )
            },
        ));
    }
    for nu in 1..=2u32 {
        for s in 1..=3i64 {
            cases.push(case(
                "s-minus-s",
                json!({"nu": nu, "s": s, "t": -s, "nmax": sms_max}),
                move || {
                    let tri = eulerian_table(&Params::new(nu, s, -s)?, sms_max)?;
                    first_failure(
                        (0..=sms_max).flat_map(|n| (0..=n).map(move |k| (n, k))),
                        |(n, k)| {
                            let v = s_minus_s_closed_form(nu, n, k, s)?;
                            expect(v == tri.row(n)[k], || {
                                format!("n={n} k={k}: closed form {v}")
                            })
                        },
                    )
                },
            ));
        }
    }
    cases
}

fn to_rat(row: &[BigInt]) -> Vec<BigRational> {
    row.iter().cloned().map(BigRational::from_integer).collect()
}

fn inverse_pairs(level: SizeLevel) -> Vec<Case> {
    let nmax = level.pick(6usize, 10);
    let ward_sum = level.pick(10usize, 14);
    let smiley_max = level.pick(5usize, 8);
    let mut cases = Vec::new();
    for nu in 1..=3u32 {
        for s in 0..=3i64 {
            for t in -2..=2i64 {
                cases.push(case(
                    "euler-ward",
                    json!({"nu": nu, "s": s, "t": t, "nmax": nmax}),
                    move || {
                        let e = eulerian_table(&Params::new(nu + 1, s, t)?, nmax)?;
                        let w = ward_table(&Params::new(nu, s, t)?, nmax)?;
                        first_failure(0..=nmax, |n| {
                            let fwd = euler_to_ward(e.row(n), n)?;
                            let back = ward_to_euler(w.row(n), n)?;
                            expect(fwd == w.row(n) && back == e.row(n), || format!("n={n}"))
                        })
                    },
                ));
            }
        }
    }
    cases.push(case(
        "riordan-orthogonality",
        json!({"nmax": nmax}),
        move || {
            first_failure(0..=nmax, |n| {
                expect(riordan_orthogonality_check(n, n), || format!("n={n}"))
            })
        },
    ));
    for (num, den) in [(1i64, 1i64), (-1, 1), (2, 3)] {
        cases.push(case(
            "ratio-roundtrip",
            json!({"r": format!("{num}/{den}"), "nmax": nmax}),
            move || {
                let r = BigRational::new(num.into(), den.into());
                let data = eulerian_table(&Params::new(2, 2, 1)?, nmax)?;
                first_failure(0..=nmax, |n| {
                    let row = to_rat(data.row(n));
                    let there = general_inverse_transform(&row, n, &r, Direction::Forward)?;
                    let back = general_inverse_transform(&there, n, &r, Direction::Backward)?;
                    let back_first = general_inverse_transform(&row, n, &r, Direction::Backward)?;
                    let again = general_inverse_transform(&back_first, n, &r, Direction::Forward)?;
                    expect(back == row && again == row, || format!("n={n}"))
                })
            },
        ));
    }
    for nu in 1..=3u32 {
        for (s, t) in ST_PAIRS {
            cases.push(case(
                "general-pair",
                json!({"nu": nu, "s": s, "t": t, "nmax": nmax}),
                move || {
                    let mu = InversePairParams::eulerian(nu, s, t);
                    let mu_hat = InversePairParams::ward(nu, s, t);
                    let r = mu.ratio()?;
                    let a = mu.solve(nmax);
                    let a_hat = mu_hat.solve(nmax);
                    let e = eulerian_table(&Params::new(nu + 1, s, t)?, nmax)?;
                    let w = ward_table(&Params::new(nu, s, t)?, nmax)?;
                    first_failure(0..=nmax, |n| {
                        let fwd = general_inverse_transform(&a_hat[n], n, &r, Direction::Forward)?;
                        let back = general_inverse_transform(&a[n], n, &r, Direction::Backward)?;
                        expect(
                            fwd == a[n]
                                && back == a_hat[n]
                                && a[n] == to_rat(e.row(n))
                                && a_hat[n] == to_rat(w.row(n)),
                            || format!("n={n}"),
                        )
                    })
                },
            ));
        }
    }
    cases.push(case(
        "classic-ward",
        json!({"max_n_plus_k": ward_sum}),
        move || {
            let w = ward_table(&Params::new(1, 0, 1)?, ward_sum)?;
            first_failure(
                (0..=ward_sum).flat_map(|n| (0..=ward_sum - n).map(move |k| (n, k))),
                |(n, k)| {
                    let expected = assoc_stirling_subset(n + k, k);
                    let got = w.entry(n as i64, k as i64);
                    expect(got == expected, || {
                        format!("n={n} k={k}: {got} vs {expected}")
                    })
                },
            )
        },
    ));
    cases.push(case("smiley", json!({"nmax": smiley_max}), move || {
        Ok(smiley_identities_violation(smiley_max)
            .map(|(n, k, which)| format!("n={n} k={k} identity {which}")))
    }));
    cases
}

fn rat(num: i64, den: i64) -> BigRational {
    BigRational::new(num.into(), den.into())
}

const EGF_ST: [(i64, i64); 3] = [(1, 0), (2, 1), (1, 2)];

fn egf(level: SizeLevel) -> Vec<Case> {
    let count = level.pick(5usize, 8);
    let mut cases = Vec::new();
    for nu in 1..=3u32 {
        for (s, t) in EGF_ST {
            for (a, b) in [(1, 3), (1, 2), (2, 3)] {
                cases.push(case(
                    "eulerian",
                    json!({"nu": nu, "s": s, "t": t, "x0": format!("{a}/{b}"), "nmax": count}),
                    move || {
                        let x0 = rat(a, b);
                        let tri = eulerian_table(&Params::new(nu, s, t)?, count)?;
                        let series = series::egf_eulerian_coeffs(nu, s, t, &x0, count)?;
                        let table = series::row_evaluations(&tri, &x0);
                        first_failure(0..=count, |n| {
                            expect(series[n] == table[n], || {
                                format!("n={n}: {} vs {}", series[n], table[n])
                            })
                        })
                    },
                ));
            }
        }
    }
    for (s, t) in EGF_ST {
        cases.push(case(
            "eulerian-order1-direct",
            json!({"nu": 1, "s": s, "t": t, "x0": "1/2", "nmax": count}),
            move || {
                let x0 = rat(1, 2);
                let direct = series::egf_eulerian_order1_direct(s, t, &x0, count)?;
                let ode = series::egf_eulerian_coeffs(1, s, t, &x0, count)?;
                first_failure(0..=count, |n| {
                    expect(direct[n] == ode[n], || format!("n={n}"))
                })
            },
        ));
    }
    for nu in 1..=2u32 {
        for (s, t) in EGF_ST {
            for (a, b) in [(1, 2), (1, 1)] {
                cases.push(case(
                    "ward",
                    json!({"nu": nu, "s": s, "t": t, "x0": format!("{a}/{b}"), "nmax": count}),
                    move || {
                        let x0 = rat(a, b);
                        let tri = ward_table(&Params::new(nu, s, t)?, count)?;
                        let series = series::egf_ward_coeffs(nu, s, t, &x0, count)?;
                        let table = series::row_evaluations(&tri, &x0);
                        first_failure(0..=count, |n| {
                            expect(series[n] == table[n], || {
                                format!("n={n}: {} vs {}", series[n], table[n])
                            })
                        })
                    },
                ));
                cases.push(case(
                    "ward-eulerian-transform",
                    json!({"nu": nu, "s": s, "t": t, "x0": format!("{a}/{b}"), "nmax": count}),
                    move || {
                        let ok = series::egf_transform_check(nu, s, t, &rat(a, b), count)?;
                        expect(ok, || "coefficients differ".into())
                    },
                ));
            }
        }
    }
    cases
}

fn series_identities(level: SizeLevel) -> Vec<Case> {
    let k_tree = level.pick(10usize, 14);
    let k_prop = level.pick(8usize, 12);
    let n_prop = level.pick(3usize, 5);
    let sum_max = level.pick(15usize, 30);
    let mut cases = Vec::new();
    for nu in 1..=4u32 {
        cases.push(case(
            "t-nu-reversion",
            json!({"nu": nu, "order": k_tree}),
            move || {
                let t = series::t_nu_series(nu, k_tree)?;
                let inv = series::t_nu_inverse_series(nu, k_tree)?;
                let z = series::TruncSeries::var(k_tree);
                expect(inv.compose(&t)? == z && t.compose(&inv)? == z, || {
                    "not mutually inverse".into()
                })
            },
        ));
        cases.push(case(
            "t-nu-derivative",
            json!({"nu": nu, "order": k_tree}),
            move || {
                expect(series::t_nu_derivative_check(nu, k_tree)?, || {
                    "derivative identity fails".into()
                })
            },
        ));
    }
    for s in 1..=3u32 {
        cases.push(case(
            "tree-power",
            json!({"s": s, "order": k_tree}),
            move || {
                expect(series::tree_power_check(s, k_tree)?, || {
                    "power expansion differs".into()
                })
            },
        ));
    }
    for (s, t) in ST_PAIRS {
        cases.push(case(
            "prop-order1",
            json!({"s": s, "t": t, "nmax": n_prop, "order": k_prop}),
            move || {
                first_failure(0..=n_prop, |n| {
                    expect(series::order1_power_sum_check(n, s, t, k_prop)?, || {
                        format!("n={n}")
                    })
                })
            },
        ));
        cases.push(case(
            "prop-order2",
            json!({"s": s, "t": t, "nmax": n_prop, "order": k_prop}),
            move || {
                first_failure(0..=n_prop, |n| {
                    expect(series::order2_power_sum_check(n, s, t, k_prop)?, || {
                        format!("n={n}")
                    })
                })
            },
        ));
    }
    cases.push(case(
        "factorial-sums",
        json!({"nmax": sum_max}),
        move || {
            first_failure(1..=sum_max, |n| {
                expect(series::factorial_sum_check(n), || format!("n={n}"))
            })
        },
    ));
    cases
}

fn ward_interpretation(level: SizeLevel) -> Vec<Case> {
    let nmax = level.pick(3u32, 4);
    let mut cases = Vec::new();
    for nu in 1..=2u32 {
        for s in 1..=2usize {
            for t in 0..=2u32 {
                for tvec in compositions(t, s) {
                    let params = json!({"nu": nu, "tvec": tvec.clone(), "nmax": nmax});
                    let tv = tvec.clone();
                    cases.push(case("marked-forests", params.clone(), move || {
                        let p = Params::with_tvec(nu, tv.clone())?;
                        let tri = ward_table(&p, nmax as usize)?;
                        first_failure(0..=nmax, |n| {
                            let row = ward_marked_row(&p, n)?;
                            expect(row == tri.row(n as usize), || {
                                format!("n={n}: counted {row:?}")
                            })
                        })
                    }));
                    cases.push(case("distinguished-size", params, move || {
                        let p = Params::with_tvec(nu + 1, tvec.clone())?;
                        first_failure(0..=nmax, |n| {
                            first_failure(enumerate_sequences(&p, n)?, |seq| {
                                let forest = seq_to_forest(&seq)?;
                                let d = forest_distinguished_set(&forest).len();
                                let j = seq.ascent_count();
                                expect(d + j == n as usize && forest_to_seq(&forest) == seq, || {
                                    format!("{:?}: |D|={d} j={j}", seq.to_strings())
                                })
                            })
                        })
                    }));
                }
            }
        }
    }
    cases
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn compositions_enumerate_all() {
        assert_eq!(compositions(2, 2), vec![vec![2, 0], vec![1, 1], vec![0, 2]]);
        assert_eq!(compositions(0, 3), vec![vec![0, 0, 0]]);
        assert_eq!(compositions(3, 1), vec![vec![3]]);
        assert_eq!(compositions(2, 3).len(), 6);
    }

    #[test]
    fn suite_names_roundtrip() {
        for suite in std::iter::once(Suite::All).chain(Suite::EACH) {
            assert_eq!(suite.name().parse::<Suite>().unwrap(), suite);
        }
        assert!("nope".parse::<Suite>().is_err());
        assert_eq!("small".parse::<SizeLevel>().unwrap(), SizeLevel::Small);
        assert!("large".parse::<SizeLevel>().is_err());
    }

    #[test]
    fn small_suites_pass() {
        for suite in Suite::EACH {
            let report = run_suite(suite, SizeLevel::Small);
            let failed: Vec<_> = report.failures().collect();
            assert!(report.passed, "{suite}: {failed:?}");
            assert!(report.checks.iter().all(|c| c.id.starts_with(suite.name())));
        }
    }

    #[test]
    fn report_is_deterministic() {
        let a = run_suite(Suite::Examples, SizeLevel::Default).to_json_pretty();
        let b = run_suite(Suite::Examples, SizeLevel::Default).to_json_pretty();
        assert_eq!(a, b);
    }
}
