//! Square integer matrices whose rows and columns are labelled by
//! compositions.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::composition::Composition;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntMatrix {
    labels: Vec<Composition>,
    index: HashMap<Composition, usize>,
    entries: Vec<Vec<BigInt>>,
}

impl IntMatrix {
    pub fn new(labels: Vec<Composition>, entries: Vec<Vec<BigInt>>) -> Result<Self> {
        let n = labels.len();
        if entries.len() != n || entries.iter().any(|row| row.len() != n) {
            return Err(Error::LabelMismatch(format!("expected a {n}x{n} array of entries")));
        }
        let index: HashMap<_, _> = labels.iter().cloned().enumerate().map(|(i, c)| (c, i)).collect();
        if index.len() != n {
            return Err(Error::LabelMismatch("duplicate labels".into()));
        }
        Ok(IntMatrix { labels, index, entries })
    }

    pub fn zeros(labels: Vec<Composition>) -> Self {
        let n = labels.len();
        Self::new(labels, vec![vec![BigInt::zero(); n]; n]).expect("square by construction")
    }

    pub fn identity(labels: Vec<Composition>) -> Self {
        let mut m = Self::zeros(labels);
        for i in 0..m.dim() {
            m.entries[i][i] = BigInt::one();
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[Composition] {
        &self.labels
    }

    pub fn position(&self, label: &Composition) -> Option<usize> {
        self.index.get(label).copied()
    }

    pub fn entry(&self, i: usize, j: usize) -> &BigInt {
        &self.entries[i][j]
    }

    pub fn entry_mut(&mut self, i: usize, j: usize) -> &mut BigInt {
        &mut self.entries[i][j]
    }

    /// Entry at the given row and column labels; zero for unknown labels.
    pub fn get(&self, row: &Composition, col: &Composition) -> BigInt {
        match (self.position(row), self.position(col)) {
            (Some(i), Some(j)) => self.entries[i][j].clone(),
            _ => BigInt::zero(),
        }
    }

    pub fn rows(&self) -> &[Vec<BigInt>] {
        &self.entries
    }

    pub fn transpose(&self) -> IntMatrix {
        let n = self.dim();
        let entries = (0..n).map(|i| (0..n).map(|j| self.entries[j][i].clone()).collect()).collect();
        IntMatrix::new(self.labels.clone(), entries).expect("square")
    }

    pub fn mul(&self, other: &IntMatrix) -> Result<IntMatrix> {
        if self.labels != other.labels {
            return Err(Error::LabelMismatch("product of differently labelled matrices".into()));
        }
        let n = self.dim();
        let mut out = IntMatrix::zeros(self.labels.clone());
        for i in 0..n {
            for k in 0..n {
                let a = &self.entries[i][k];
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let b = &other.entries[k][j];
                    if !b.is_zero() {
                        out.entries[i][j] += a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn is_upper_unitriangular(&self) -> bool {
        let n = self.dim();
        (0..n).all(|i| self.entries[i][i].is_one() && (0..i).all(|j| self.entries[i][j].is_zero()))
    }

    pub fn is_lower_unitriangular(&self) -> bool {
        self.transpose().is_upper_unitriangular()
    }

    /// Exact inverse over the integers.
    ///
    /// Unitriangular matrices (upper or lower) are inverted by
    /// back-substitution. Anything else goes through rational Gauss-Jordan
    /// elimination and is rejected when the inverse is not integral.
    pub fn inverse(&self) -> Result<IntMatrix> {
        if self.is_upper_unitriangular() {
            Ok(self.upper_unitriangular_inverse())
        } else if self.is_lower_unitriangular() {
            Ok(self.transpose().upper_unitriangular_inverse().transpose())
        } else {
            self.rational_inverse()
        }
    }

    fn upper_unitriangular_inverse(&self) -> IntMatrix {
        let n = self.dim();
        let mut inv = IntMatrix::identity(self.labels.clone());
        for j in 0..n {
            for i in (0..j).rev() {
                let mut acc = BigInt::zero();
                for k in i + 1..=j {
                    let a = &self.entries[i][k];
                    if !a.is_zero() {
                        acc += a * &inv.entries[k][j];
                    }
                }
                inv.entries[i][j] = -acc;
            }
        }
        inv
    }

    fn rational_inverse(&self) -> Result<IntMatrix> {
        let n = self.dim();
        let mut a: Vec<Vec<BigRational>> =
            self.entries.iter().map(|row| row.iter().map(|x| BigRational::from_integer(x.clone())).collect()).collect();
        let mut inv: Vec<Vec<BigRational>> = (0..n)
            .map(|i| (0..n).map(|j| if i == j { BigRational::one() } else { BigRational::zero() }).collect())
            .collect();
        for col in 0..n {
            let pivot = (col..n).find(|&r| !a[r][col].is_zero()).ok_or(Error::NotInvertible)?;
            a.swap(col, pivot);
            inv.swap(col, pivot);
            let p = a[col][col].clone();
            for j in 0..n {
                a[col][j] = &a[col][j] / &p;
                inv[col][j] = &inv[col][j] / &p;
            }
            for r in 0..n {
                if r == col || a[r][col].is_zero() {
                    continue;
                }
                let f = a[r][col].clone();
                for j in 0..n {
                    let t = &f * &a[col][j];
                    a[r][j] -= t;
                    let t = &f * &inv[col][j];
                    inv[r][j] -= t;
                }
            }
        }
        let entries = inv
            .into_iter()
            .map(|row| {
                row.into_iter()
                    .map(|x| if x.is_integer() { Ok(x.to_integer()) } else { Err(Error::NotInvertible) })
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        IntMatrix::new(self.labels.clone(), entries)
    }
}
