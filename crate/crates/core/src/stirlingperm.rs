//! Generalized Stirling permutations: validation, ascents, and exhaustive
//! enumeration by block insertion.
//!
//! Letters are non-negative integers; `0` is the distinguished letter that
//! appears `t` times, every other letter appears exactly `nu` times.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::params::Params;

/// A word over the non-negative integers.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word(pub Vec<u32>);

impl Word {
    pub fn letters(&self) -> &[u32] {
        &self.0
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    /// Sorted distinct non-zero letters.
    pub fn labels(&self) -> Vec<u32> {
        let mut v: Vec<u32> = self.0.iter().copied().filter(|&x| x != 0).collect();
        v.sort_unstable();
        v.dedup();
        v
    }

    pub fn zeros(&self) -> usize {
        self.0.iter().filter(|&&x| x == 0).count()
    }
}

/// Space-separated decimal letters; the empty word renders as an empty string.
impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{x}")?;
        }
        Ok(())
    }
}

/// Accepts space-separated letters (`"10 10 3"`), a compact digit string
/// where every character is one letter (`"00112221"`), or an empty string /
/// `∅` for the empty word.
impl FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() || s == "∅" {
            return Ok(Word::default());
        }
        let parse = |tok: &str| {
            tok.parse::<u32>()
                .map_err(|_| Error::Parse(format!("bad letter {tok:?} in word {s:?}")))
        };
        if s.contains(char::is_whitespace) {
            s.split_whitespace()
                .map(parse)
                .collect::<Result<_>>()
                .map(Word)
        } else {
            s.chars()
                .map(|c| {
                    c.to_digit(10)
                        .ok_or_else(|| Error::Parse(format!("bad letter {c:?} in word {s:?}")))
                })
                .collect::<Result<_>>()
                .map(Word)
        }
    }
}

/// Multiset and betweenness check against an explicit label set: zero occurs
/// `t` times, each label occurs `nu` times, nothing else occurs, and every
/// letter between two copies of `x` is at least `x`.
pub fn is_stirling_word(letters: &[u32], nu: u32, t: u32, labels: &[u32]) -> bool {
    let zeros = letters.iter().filter(|&&x| x == 0).count();
    if zeros != t as usize {
        return false;
    }
    let nonzero = letters.len() - zeros;
    if nonzero != labels.len() * nu as usize {
        return false;
    }
    for &x in labels {
        if x == 0 || letters.iter().filter(|&&y| y == x).count() != nu as usize {
            return false;
        }
    }
    betweenness_holds(letters)
}

fn betweenness_holds(letters: &[u32]) -> bool {
    let mut seen: Vec<u32> = letters.to_vec();
    seen.sort_unstable();
    seen.dedup();
    seen.into_iter().all(|x| {
        let first = letters.iter().position(|&y| y == x);
        let last = letters.iter().rposition(|&y| y == x);
        match (first, last) {
            (Some(a), Some(b)) => letters[a..=b].iter().all(|&y| y >= x),
            _ => true,
        }
    })
}

/// Validates a `(nu, t, [n])`-Stirling permutation.
pub fn validate_word(letters: &[u32], nu: u32, t: u32, n: u32) -> bool {
    let labels: Vec<u32> = (1..=n).collect();
    is_stirling_word(letters, nu, t, &labels)
}

/// 1-based positions `i` with `letter(i) < letter(i+1)`.
pub fn ascent_positions(letters: &[u32]) -> Vec<usize> {
    letters
        .windows(2)
        .enumerate()
        .filter(|(_, w)| w[0] < w[1])
        .map(|(i, _)| i + 1)
        .collect()
}

/// An `s`-tuple of words, entry `i` being a `(nu, t_i, X_i)`-Stirling
/// permutation for an ordered partition `(X_1, ..., X_s)` of `[n]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct StirlingSeq {
    pub nu: u32,
    pub tvec: Vec<u32>,
    pub entries: Vec<Word>,
}

impl StirlingSeq {
    /// The unique object of size zero: `(0^t_1, ..., 0^t_s)`.
    pub fn base(nu: u32, tvec: &[u32]) -> Self {
        StirlingSeq {
            nu,
            tvec: tvec.to_vec(),
            entries: tvec.iter().map(|&t| Word(vec![0; t as usize])).collect(),
        }
    }

    /// Number of distinct non-zero letters across all entries.
    pub fn n(&self) -> usize {
        self.label_partition().iter().map(Vec::len).sum()
    }

    /// `(X_1, ..., X_s)`, each sorted.
    pub fn label_partition(&self) -> Vec<Vec<u32>> {
        self.entries.iter().map(Word::labels).collect()
    }

    /// Full validity against `[n]`.
    pub fn is_valid(&self, n: u32) -> bool {
        if self.entries.len() != self.tvec.len() || self.nu < 1 {
            return false;
        }
        let partition = self.label_partition();
        let mut all: Vec<u32> = partition.iter().flatten().copied().collect();
        all.sort_unstable();
        if all != (1..=n).collect::<Vec<_>>() {
            return false;
        }
        self.entries
            .iter()
            .zip(&self.tvec)
            .zip(&partition)
            .all(|((w, &t), labels)| is_stirling_word(&w.0, self.nu, t, labels))
    }

    pub fn ascent_positions(&self) -> Vec<Vec<usize>> {
        self.entries
            .iter()
            .map(|w| ascent_positions(&w.0))
            .collect()
    }

    /// Total ascents, counted within entries only.
    pub fn ascent_count(&self) -> usize {
        self.entries
            .iter()
            .map(|w| ascent_positions(&w.0).len())
            .sum()
    }

    /// Entries rendered as space-separated letter strings.
    pub fn to_strings(&self) -> Vec<String> {
        self.entries.iter().map(Word::to_string).collect()
    }
}

pub fn seq_ascent_count(seq: &StirlingSeq) -> usize {
    seq.ascent_count()
}

/// Depth-first enumeration of all `(nu, tvec, n)`-Stirling permutations.
///
/// Level `m` objects are obtained from level `m-1` objects by inserting the
/// block `m^nu` into one of the `len_i + 1` gaps of some entry `i`. Gaps are
/// visited entry-major, left to right, so the output order is fixed.
pub struct SequenceEnumerator {
    n: u32,
    stack: Vec<(StirlingSeq, u32)>,
}

impl Iterator for SequenceEnumerator {
    type Item = StirlingSeq;

    fn next(&mut self) -> Option<StirlingSeq> {
        while let Some((seq, level)) = self.stack.pop() {
            if level == self.n {
                return Some(seq);
            }
            let m = level + 1;
            let nu = seq.nu as usize;
            let mut children = Vec::new();
            for (i, entry) in seq.entries.iter().enumerate() {
                for gap in 0..=entry.len() {
                    let mut next = seq.clone();
                    let letters = &mut next.entries[i].0;
                    letters.splice(gap..gap, std::iter::repeat_n(m, nu));
                    children.push((next, m));
                }
            }
            self.stack.extend(children.into_iter().rev());
        }
        None
    }
}

pub fn enumerate_sequences(p: &Params, n: u32) -> Result<SequenceEnumerator> {
    let tvec = p.composition()?;
    Ok(SequenceEnumerator {
        n,
        stack: vec![(StirlingSeq::base(p.nu, &tvec), 0)],
    })
}

/// `histogram[k]` = number of sequences of size `n` with exactly `k` ascents.
pub fn ascent_histogram(p: &Params, n: u32) -> Result<Vec<BigInt>> {
    let mut counts = vec![0u64; n as usize + 1];
    for seq in enumerate_sequences(p, n)? {
        let k = seq.ascent_count();
        if k > n as usize {
            return Err(Error::InvalidWord(format!("{} ascents exceed n = {n}", k)));
        }
        counts[k] += 1;
    }
    Ok(counts.into_iter().map(BigInt::from).collect())
}
