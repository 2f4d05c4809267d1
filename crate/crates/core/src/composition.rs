//! Compositions of integers and the operations on their ribbon diagrams.
//!
//! A composition is stored as its list of parts. The derived `Ord` is the
//! plain lexicographic order on parts, which is the order used when listing
//! the terms of an expansion. The table order (by length, then
//! lexicographically) is provided separately by [`Composition::table_key`]
//! and [`compositions_ordered`].

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Composition(Vec<usize>);

impl Composition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidComposition(format!("parts must be positive, got {parts:?}")));
        }
        Ok(Composition(parts))
    }

    pub fn empty() -> Self {
        Composition(Vec::new())
    }

    /// The one-part composition `(n)`; empty when `n == 0`.
    pub fn single(n: usize) -> Self {
        if n == 0 {
            Self::empty()
        } else {
            Composition(vec![n])
        }
    }

    /// `(1, 1, ..., 1)` with `n` parts.
    pub fn ones(n: usize) -> Self {
        Composition(vec![1; n])
    }

    /// The composition of `n` whose descent set is `descents`.
    pub fn from_descent_set(descents: &BTreeSet<usize>, n: usize) -> Result<Self> {
        if n == 0 {
            return if descents.is_empty() {
                Ok(Self::empty())
            } else {
                Err(Error::InvalidComposition("descents given for weight 0".into()))
            };
        }
        let mut parts = Vec::with_capacity(descents.len() + 1);
        let mut last = 0;
        for &d in descents {
            if d <= last || d >= n {
                return Err(Error::InvalidComposition(format!("descent {d} outside 1..{n}")));
            }
            parts.push(d - last);
            last = d;
        }
        parts.push(n - last);
        Ok(Composition(parts))
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn into_parts(self) -> Vec<usize> {
        self.0
    }

    pub fn weight(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn last_part(&self) -> Option<usize> {
        self.0.last().copied()
    }

    /// Strict partial sums `i_1, i_1 + i_2, ..., i_1 + ... + i_{l-1}`.
    pub fn descent_set(&self) -> BTreeSet<usize> {
        self.partial_sums().into_iter().take(self.len().saturating_sub(1)).collect()
    }

    /// All partial sums `s_1, ..., s_l`, the last one being the weight.
    pub fn partial_sums(&self) -> Vec<usize> {
        self.0
            .iter()
            .scan(0, |acc, &p| {
                *acc += p;
                Some(*acc)
            })
            .collect()
    }

    pub fn maj(&self) -> usize {
        self.descent_set().iter().sum()
    }

    /// The composition of the same weight whose descent set is the
    /// complement of this one's in `1..n`. Written with a bar and a tilde
    /// in the literature; it is an involution.
    pub fn complement(&self) -> Composition {
        let n = self.weight();
        if n == 0 {
            return Self::empty();
        }
        let des = self.descent_set();
        let comp: BTreeSet<usize> = (1..n).filter(|d| !des.contains(d)).collect();
        Self::from_descent_set(&comp, n).expect("complement of a valid descent set")
    }

    pub fn reverse(&self) -> Composition {
        Composition(self.0.iter().rev().copied().collect())
    }

    /// Conjugate composition, obtained by transposing the ribbon diagram.
    ///
    /// The ribbon is drawn with `i_1` cells on the bottom row and each next
    /// row starting in the column where the previous one ends; the
    /// transposed cells are read back row by row from the bottom.
    pub fn conjugate(&self) -> Composition {
        if self.is_empty() {
            return Self::empty();
        }
        // (row counted from the bottom, column)
        let mut cells = Vec::with_capacity(self.weight());
        let mut col = 0;
        for (row, &p) in self.0.iter().enumerate() {
            for c in col..col + p {
                cells.push((row, c));
            }
            col += p - 1;
        }
        // Transposing an English-drawn diagram swaps its rows and columns;
        // in bottom-up row coordinates the new row index counts from the top.
        let height = self.len();
        let mut transposed: Vec<(usize, usize)> = cells.into_iter().map(|(row, c)| (c, height - 1 - row)).collect();
        transposed.sort();
        let mut rows: Vec<usize> = Vec::new();
        let mut current = None;
        for (row, _) in transposed {
            if current == Some(row) {
                *rows.last_mut().unwrap() += 1;
            } else {
                rows.push(1);
                current = Some(row);
            }
        }
        // rows were collected top-down in the transposed picture
        rows.reverse();
        Composition(rows)
    }

    /// The composition `I[k]` whose ribbon consists of the first `k` boxes
    /// of the ribbon of `self`.
    pub fn ribbon_prefix(&self, k: usize) -> Result<Composition> {
        let n = self.weight();
        if k > n {
            return Err(Error::OutOfRange { index: k, max: n });
        }
        let des: BTreeSet<usize> = self.descent_set().into_iter().filter(|&d| d < k).collect();
        Self::from_descent_set(&des, k)
    }

    pub fn concat(&self, other: &Composition) -> Composition {
        let mut parts = self.0.clone();
        parts.extend_from_slice(&other.0);
        Composition(parts)
    }

    /// Concatenation with the last part of `self` merged into the first
    /// part of `other`. `None` when either side is empty.
    pub fn near_concat(&self, other: &Composition) -> Option<Composition> {
        let (last, first) = (self.0.last()?, other.0.first()?);
        let mut parts = self.0[..self.len() - 1].to_vec();
        parts.push(last + first);
        parts.extend_from_slice(&other.0[1..]);
        Some(Composition(parts))
    }

    /// `self` with one more part appended.
    pub fn push(&self, part: usize) -> Composition {
        assert!(part > 0, "parts are positive");
        let mut parts = self.0.clone();
        parts.push(part);
        Composition(parts)
    }

    /// Whether `self` is obtained from `other` by merging adjacent parts.
    pub fn is_coarsening_of(&self, other: &Composition) -> bool {
        self.weight() == other.weight() && self.descent_set().is_subset(&other.descent_set())
    }

    /// Sort key for the table order: by length, then lexicographically.
    pub fn table_key(&self) -> (usize, &[usize]) {
        (self.len(), &self.0)
    }

    /// Compact label: digits run together when every part is a
    /// single digit, otherwise comma separated. The empty composition is `()`.
    pub fn compact(&self) -> String {
        if self.is_empty() {
            "()".to_string()
        } else if self.0.iter().all(|&p| p < 10) {
            self.0.iter().map(|p| p.to_string()).collect()
        } else {
            self.comma_list()
        }
    }

    pub fn comma_list(&self) -> String {
        self.0.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(",")
    }
}

impl TryFrom<Vec<usize>> for Composition {
    type Error = Error;

    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Composition::new(parts)
    }
}

impl From<Composition> for Vec<usize> {
    fn from(c: Composition) -> Self {
        c.0
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.compact())
    }
}

/// Parses `"2,3,1"`; `"()"` and the empty string give the empty composition.
impl FromStr for Composition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() || s == "()" {
            return Ok(Self::empty());
        }
        let parts = s
            .split(',')
            .map(|t| {
                t.trim().parse::<usize>().map_err(|_| Error::Parse(format!("bad composition part {t:?} in {s:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Composition::new(parts)
    }
}

/// Builds a composition from a literal slice; panics on zero parts.
pub fn comp(parts: &[usize]) -> Composition {
    Composition::new(parts.to_vec()).expect("composition literal")
}

/// All compositions of `n` in lexicographic order of their parts.
pub fn compositions(n: usize) -> Vec<Composition> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    fn rec(rest: usize, current: &mut Vec<usize>, out: &mut Vec<Composition>) {
        if rest == 0 {
            out.push(Composition(current.clone()));
            return;
        }
        for p in 1..=rest {
            current.push(p);
            rec(rest - p, current, out);
            current.pop();
        }
    }
    rec(n, &mut current, &mut out);
    out
}

/// All `2^(n-1)` compositions of `n` sorted by length, then
/// lexicographically. This is the row and column order of the transition
/// matrices.
pub fn compositions_ordered(n: usize) -> Vec<Composition> {
    let mut all = compositions(n);
    all.sort_by(|a, b| a.table_key().cmp(&b.table_key()));
    all
}

/// Compositions of `n` with exactly `len` parts, lexicographic.
pub fn compositions_of_length(n: usize, len: usize) -> Vec<Composition> {
    compositions(n).into_iter().filter(|c| c.len() == len).collect()
}
