//! Exhaustive enumeration against a brute-force oracle that knows nothing
//! about block insertion: distribute labels over entries, permute each
//! entry's multiset in every way, and keep the words obeying betweenness.

use std::collections::BTreeSet;

use genstirling::eulerian::{eulerian_table, row_sum_product};
use genstirling::stirlingperm::{ascent_histogram, enumerate_sequences, StirlingSeq, Word};
use genstirling::Params;

/// Lexicographic successor of a sequence, `false` at the last one.
fn next_permutation(v: &mut [u32]) -> bool {
    let Some(i) = (1..v.len()).rev().find(|&i| v[i - 1] < v[i]) else {
        return false;
    };
    let j = (i..v.len()).rev().find(|&j| v[j] > v[i - 1]).unwrap();
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

fn multiset_permutations(mut v: Vec<u32>) -> Vec<Vec<u32>> {
    v.sort_unstable();
    let mut out = vec![v.clone()];
    while next_permutation(&mut v) {
        out.push(v.clone());
    }
    out
}

fn betweenness(w: &[u32]) -> bool {
    w.iter().enumerate().all(|(i, &x)| {
        let last = w.iter().rposition(|&y| y == x).unwrap();
        w[i..=last].iter().all(|&y| y >= x)
    })
}

fn brute_force(nu: u32, tvec: &[u32], n: u32) -> BTreeSet<Vec<Vec<u32>>> {
    let s = tvec.len();
    let mut out = BTreeSet::new();
    // every map from labels to entries
    for code in 0..(s as u64).pow(n) {
        let mut parts: Vec<Vec<u32>> = tvec.iter().map(|&t| vec![0; t as usize]).collect();
        let mut c = code;
        for label in 1..=n {
            let part = (c % s as u64) as usize;
            c /= s as u64;
            parts[part].extend(std::iter::repeat_n(label, nu as usize));
        }
        let choices: Vec<Vec<Vec<u32>>> = parts
            .into_iter()
            .map(|p| {
                multiset_permutations(p)
                    .into_iter()
                    .filter(|w| betweenness(w))
                    .collect()
            })
            .collect();
        let mut acc: Vec<Vec<Vec<u32>>> = vec![Vec::new()];
        for options in &choices {
            acc = acc
                .iter()
                .flat_map(|prefix| {
                    options.iter().map(move |w| {
                        let mut next = prefix.clone();
                        next.push(w.clone());
                        next
                    })
                })
                .collect();
        }
        out.extend(acc);
    }
    out
}

fn ascents(w: &[u32]) -> usize {
    w.windows(2).filter(|p| p[0] < p[1]).count()
}

#[test]
fn enumeration_equals_brute_force() {
    let cases: &[(u32, &[u32], u32)] = &[
        (1, &[0], 4),
        (2, &[0], 3),
        (2, &[1], 3),
        (3, &[2], 2),
        (2, &[1, 0], 3),
        (2, &[0, 1], 2),
        (1, &[2, 0, 1], 3),
        (3, &[2, 0, 1, 0], 2),
    ];
    for &(nu, tvec, n) in cases {
        let p = Params::with_tvec(nu, tvec.to_vec()).unwrap();
        let listed: Vec<Vec<Vec<u32>>> = enumerate_sequences(&p, n)
            .unwrap()
            .map(|seq| seq.entries.into_iter().map(|w| w.0).collect())
            .collect();
        let unique: BTreeSet<_> = listed.iter().cloned().collect();
        assert_eq!(
            unique.len(),
            listed.len(),
            "duplicates for nu={nu} tvec={tvec:?} n={n}"
        );
        assert_eq!(
            unique,
            brute_force(nu, tvec, n),
            "nu={nu} tvec={tvec:?} n={n}"
        );
        assert_eq!(p.s, tvec.len() as i64);
        assert_eq!(row_sum_product(&p, n as usize), listed.len().into());
    }
}

#[test]
fn brute_force_histogram_matches_triangle() {
    for nu in 1..=3u32 {
        for t in 0..=2u32 {
            for s in 1..=2usize {
                let mut tvec = vec![0; s];
                tvec[0] = t;
                let n = if nu == 3 { 2 } else { 3 };
                let mut hist = vec![0u64; n as usize + 1];
                for seq in brute_force(nu, &tvec, n) {
                    hist[seq.iter().map(|w| ascents(w)).sum::<usize>()] += 1;
                }
                let p = Params::new(nu, s as i64, t as i64).unwrap();
                let tri = eulerian_table(&p, n as usize).unwrap();
                let expected: Vec<_> = hist.iter().map(|&c| c.into()).collect::<Vec<_>>();
                assert_eq!(
                    tri.row(n as usize),
                    expected.as_slice(),
                    "nu={nu} s={s} t={t}"
                );
                assert_eq!(ascent_histogram(&p, n).unwrap(), expected);
            }
        }
    }
}

#[test]
fn every_listed_object_is_valid() {
    let p = Params::with_tvec(2, vec![1, 0, 2]).unwrap();
    for seq in enumerate_sequences(&p, 3).unwrap() {
        assert!(seq.is_valid(3));
        assert!(seq.entries.iter().all(|w: &Word| betweenness(&w.0)));
    }
}

#[test]
fn size_zero_has_one_object() {
    let p = Params::with_tvec(3, vec![2, 0, 1]).unwrap();
    let all: Vec<StirlingSeq> = enumerate_sequences(&p, 0).unwrap().collect();
    assert_eq!(all, vec![StirlingSeq::base(3, &[2, 0, 1])]);
}
