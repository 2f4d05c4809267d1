//! Permutations in one-line notation and their statistics.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::composition::Composition;
use crate::error::{Error, Result};

/// A permutation of `1..=n`, stored as its word `σ_1 σ_2 ... σ_n`.
///
/// The derived order is lexicographic on words, so sorting permutations of
/// the same size lists them in lexicographic order.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Permutation(Vec<usize>);

impl Permutation {
    pub fn new(word: Vec<usize>) -> Result<Self> {
        let n = word.len();
        let mut seen = vec![false; n + 1];
        for &v in &word {
            if v == 0 || v > n || seen[v] {
                return Err(Error::InvalidPermutation(format!("{word:?} is not a permutation of 1..={n}")));
            }
            seen[v] = true;
        }
        Ok(Permutation(word))
    }

    pub fn identity(n: usize) -> Self {
        Permutation((1..=n).collect())
    }

    /// `n (n-1) ... 1`
    pub fn decreasing(n: usize) -> Self {
        Permutation((1..=n).rev().collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn word(&self) -> &[usize] {
        &self.0
    }

    pub fn into_word(self) -> Vec<usize> {
        self.0
    }

    /// Position (1-based) of each value: `positions()[v - 1]`.
    pub fn positions(&self) -> Vec<usize> {
        let mut pos = vec![0; self.len()];
        for (i, &v) in self.0.iter().enumerate() {
            pos[v - 1] = i + 1;
        }
        pos
    }

    pub fn inverse(&self) -> Permutation {
        Permutation(self.positions())
    }

    pub fn inversions(&self) -> usize {
        let w = &self.0;
        (0..w.len()).map(|i| w[i + 1..].iter().filter(|&&b| b < w[i]).count()).sum()
    }

    /// Positions `i` with `σ_i > σ_{i+1}`.
    pub fn descent_set(&self) -> BTreeSet<usize> {
        self.0.windows(2).enumerate().filter(|(_, w)| w[0] > w[1]).map(|(i, _)| i + 1).collect()
    }

    pub fn descent_composition(&self) -> Composition {
        Composition::from_descent_set(&self.descent_set(), self.len()).expect("valid descent set")
    }

    /// Values `i` such that `i + 1` appears to the left of `i`.
    pub fn recoil_set(&self) -> BTreeSet<usize> {
        let pos = self.positions();
        (1..self.len()).filter(|&i| pos[i] < pos[i - 1]).collect()
    }

    pub fn recoil_composition(&self) -> Composition {
        Composition::from_descent_set(&self.recoil_set(), self.len()).expect("valid recoil set")
    }

    /// The unique factorization into initially dominated words (first letter
    /// larger than all the others) with increasing first letters.
    pub fn saillance_factors(&self) -> Vec<&[usize]> {
        let mut factors = Vec::new();
        let mut start = 0;
        for i in 1..self.len() {
            if self.0[i] > self.0[start] {
                factors.push(&self.0[start..i]);
                start = i;
            }
        }
        if !self.is_empty() {
            factors.push(&self.0[start..]);
        }
        factors
    }

    pub fn saillance_composition(&self) -> Composition {
        Composition::new(self.saillance_factors().iter().map(|f| f.len()).collect()).expect("factors are nonempty")
    }

    /// Positions (1-based) of the left-to-right maxima.
    pub fn ltr_maxima_positions(&self) -> Vec<usize> {
        let mut best = 0;
        let mut out = Vec::new();
        for (i, &v) in self.0.iter().enumerate() {
            if v > best {
                best = v;
                out.push(i + 1);
            }
        }
        out
    }

    /// Positions (1-based) of the left-to-right minima.
    pub fn ltr_minima_positions(&self) -> Vec<usize> {
        let mut best = usize::MAX;
        let mut out = Vec::new();
        for (i, &v) in self.0.iter().enumerate() {
            if v < best {
                best = v;
                out.push(i + 1);
            }
        }
        out
    }

    /// Values of the left-to-right minima, a decreasing sequence ending in 1.
    pub fn ltr_minima_values(&self) -> Vec<usize> {
        self.ltr_minima_positions().into_iter().map(|p| self.0[p - 1]).collect()
    }

    /// Cycles written smallest element first, sorted by smallest element.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.len();
        let mut seen = vec![false; n + 1];
        let mut out = Vec::new();
        for start in 1..=n {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                cycle.push(x);
                x = self.0[x - 1];
            }
            out.push(cycle);
        }
        out
    }

    /// Cycle lengths listed by increasing cycle maximum.
    pub fn ordered_cycle_type(&self) -> Composition {
        let mut cycles = self.cycles();
        cycles.sort_by_key(|c| c.iter().copied().max());
        Composition::new(cycles.iter().map(Vec::len).collect()).expect("cycles are nonempty")
    }

    /// Foata's first fundamental transformation: the standard cycle form
    /// with its parentheses erased.
    pub fn foata_first(&self) -> Permutation {
        Permutation(self.cycles().concat())
    }

    /// Conjugation by the longest permutation: `i -> n + 1 - σ(n + 1 - i)`.
    /// Cycle maxima become cycle minima.
    pub fn reverse_complement(&self) -> Permutation {
        let n = self.len();
        Permutation((1..=n).map(|i| n + 1 - self.0[n - i]).collect())
    }

    /// Carlitz's statistic. It is the inversion number of
    /// [`Self::foata_first`] taken in the reversed alphabet, so that cycles
    /// are keyed by their maxima as in [`Self::ordered_cycle_type`].
    pub fn invc(&self) -> usize {
        self.reverse_complement().foata_first().inversions()
    }

    /// Word with every letter increased by `k`.
    pub fn shifted(&self, k: usize) -> Vec<usize> {
        self.0.iter().map(|v| v + k).collect()
    }

    pub fn iter_all(n: usize) -> Permutations {
        Permutations { current: Some((1..=n).collect()) }
    }
}

/// The permutation with the same relative order as `word`, whose letters
/// must be distinct.
pub fn standardize(word: &[usize]) -> Permutation {
    let mut order: Vec<usize> = (0..word.len()).collect();
    order.sort_by_key(|&i| word[i]);
    let mut out = vec![0; word.len()];
    for (rank, i) in order.into_iter().enumerate() {
        out[i] = rank + 1;
    }
    Permutation(out)
}

/// All interleavings of two words, each keeping its internal order. Words
/// with distinct letters give distinct shuffles.
pub fn shuffle_words(a: &[usize], b: &[usize]) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut buf = Vec::with_capacity(a.len() + b.len());
    fn rec(a: &[usize], b: &[usize], buf: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if a.is_empty() {
            let mut w = buf.clone();
            w.extend_from_slice(b);
            out.push(w);
            return;
        }
        if b.is_empty() {
            let mut w = buf.clone();
            w.extend_from_slice(a);
            out.push(w);
            return;
        }
        buf.push(a[0]);
        rec(&a[1..], b, buf, out);
        buf.pop();
        buf.push(b[0]);
        rec(a, &b[1..], buf, out);
        buf.pop();
    }
    rec(a, b, &mut buf, &mut out);
    out
}

/// Shuffles of `alpha` with `beta` shifted up by `|alpha|`.
pub fn shifted_shuffle(alpha: &Permutation, beta: &Permutation) -> Vec<Permutation> {
    shuffle_words(alpha.word(), &beta.shifted(alpha.len())).into_iter().map(Permutation).collect()
}

/// A fixed permutation with saillance composition `comp`: block `j` is
/// `s_j, s_{j-1}+1, ..., s_j - 1` with `s_j` the partial sums.
pub fn canonical_representative(comp: &Composition) -> Result<Permutation> {
    if comp.is_empty() {
        return Err(Error::EmptyComposition);
    }
    let mut word = Vec::with_capacity(comp.weight());
    let mut prev = 0;
    for s in comp.partial_sums() {
        word.push(s);
        word.extend(prev + 1..s);
        prev = s;
    }
    Ok(Permutation(word))
}

/// Every permutation whose saillance composition is `comp`, sorted.
///
/// The last factor starts with `n`; its other letters are any arrangement
/// of any subset of the smaller values, and the remaining values are
/// arranged recursively.
pub fn saillance_fiber(comp: &Composition) -> Vec<Permutation> {
    fn rec(parts: &[usize], values: &[usize]) -> Vec<Vec<usize>> {
        let Some((&last, rest)) = parts.split_last() else {
            return vec![Vec::new()];
        };
        let (&top, smaller) = values.split_last().expect("weight matches");
        let mut out = Vec::new();
        for tail in arrangements(smaller, last - 1) {
            let remaining: Vec<usize> = smaller.iter().copied().filter(|v| !tail.contains(v)).collect();
            for mut head in rec(rest, &remaining) {
                head.push(top);
                head.extend_from_slice(&tail);
                out.push(head);
            }
        }
        out
    }
    let values: Vec<usize> = (1..=comp.weight()).collect();
    let mut out: Vec<Permutation> = rec(comp.parts(), &values).into_iter().map(Permutation).collect();
    out.sort();
    out
}

/// All ordered selections of `k` distinct items from `values`.
fn arrangements(values: &[usize], k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for (i, &v) in values.iter().enumerate() {
        let mut rest = values.to_vec();
        rest.remove(i);
        for mut tail in arrangements(&rest, k - 1) {
            tail.insert(0, v);
            out.push(tail);
        }
    }
    out
}

/// Lexicographic enumeration of the permutations of `1..=n`.
pub struct Permutations {
    current: Option<Vec<usize>>,
}

impl Iterator for Permutations {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        let cur = self.current.take()?;
        let mut next = cur.clone();
        let n = next.len();
        if n > 1 {
            if let Some(i) = (0..n - 1).rev().find(|&i| next[i] < next[i + 1]) {
                let j = (i + 1..n).rev().find(|&j| next[j] > next[i]).expect("successor exists");
                next.swap(i, j);
                next[i + 1..].reverse();
                self.current = Some(next);
            }
        }
        Some(Permutation(cur))
    }
}

impl TryFrom<Vec<usize>> for Permutation {
    type Error = Error;

    fn try_from(word: Vec<usize>) -> Result<Self> {
        Permutation::new(word)
    }
}

impl From<Permutation> for Vec<usize> {
    fn from(p: Permutation) -> Self {
        p.0
    }
}

/// One-line notation; letters run together up to size 9, comma separated
/// beyond.
impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            f.write_str("()")
        } else if self.len() <= 9 {
            self.0.iter().try_for_each(|v| write!(f, "{v}"))
        } else {
            let s: Vec<String> = self.0.iter().map(|v| v.to_string()).collect();
            f.write_str(&s.join(","))
        }
    }
}

impl FromStr for Permutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() || s == "()" {
            return Ok(Permutation::default());
        }
        let word = if s.contains(',') {
            s.split(',')
                .map(|t| t.trim().parse::<usize>().map_err(|_| Error::Parse(format!("bad letter {t:?}"))))
                .collect::<Result<Vec<_>>>()?
        } else {
            s.chars()
                .map(|c| {
                    c.to_digit(10).map(|d| d as usize).ok_or_else(|| Error::Parse(format!("bad letter {c:?} in {s:?}")))
                })
                .collect::<Result<Vec<_>>>()?
        };
        Permutation::new(word)
    }
}

/// Builds a permutation from a literal slice; panics when invalid.
pub fn perm(word: &[usize]) -> Permutation {
    Permutation::new(word.to_vec()).expect("permutation literal")
}
