//! Finite formal linear combinations over an ordered index set.

use std::collections::btree_map;
use std::collections::BTreeMap;
use std::fmt::Debug;
use std::ops::{AddAssign, Mul, Neg};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::qpoly::QPoly;

/// Coefficient ring used by [`LinComb`]: implemented for `BigInt` and
/// [`QPoly`].
pub trait Coeff:
    Clone
    + Debug
    + PartialEq
    + Zero
    + One
    + Neg<Output = Self>
    + for<'a> AddAssign<&'a Self>
    + for<'a> Mul<&'a Self, Output = Self>
    + From<BigInt>
{
}

impl Coeff for BigInt {}
impl Coeff for QPoly {}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LinComb<K: Ord, C> {
    terms: BTreeMap<K, C>,
}

impl<K: Ord, C> Default for LinComb<K, C> {
    fn default() -> Self {
        LinComb { terms: BTreeMap::new() }
    }
}

impl<K: Ord + Clone, C: Coeff> LinComb<K, C> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn basis(key: K) -> Self {
        Self::term(key, C::one())
    }

    pub fn term(key: K, c: C) -> Self {
        let mut out = Self::new();
        out.add_term(key, &c);
        out
    }

    /// Adds `c * key`, dropping the entry if it cancels.
    pub fn add_term(&mut self, key: K, c: &C) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(key) {
            btree_map::Entry::Vacant(v) => {
                v.insert(c.clone());
            }
            btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn add_scaled(&mut self, other: &Self, scale: &C) {
        for (k, c) in &other.terms {
            self.add_term(k.clone(), &(c.clone() * scale));
        }
    }

    pub fn scaled(&self, scale: &C) -> Self {
        let mut out = Self::new();
        out.add_scaled(self, scale);
        out
    }

    pub fn get(&self, key: &K) -> C {
        self.terms.get(key).cloned().unwrap_or_else(C::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&K, &C)> {
        self.terms.iter()
    }

    pub fn keys(&self) -> impl Iterator<Item = &K> {
        self.terms.keys()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn neg(&self) -> Self {
        self.scaled(&(-C::one()))
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.add_scaled(other, &(-C::one()));
        out
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.add_scaled(other, &C::one());
        out
    }

    /// Applies a linear map given on basis elements.
    pub fn map_linear<K2: Ord + Clone>(&self, mut f: impl FnMut(&K) -> LinComb<K2, C>) -> LinComb<K2, C> {
        let mut out = LinComb::new();
        for (k, c) in &self.terms {
            out.add_scaled(&f(k), c);
        }
        out
    }

    /// Bilinear extension of a product given on pairs of basis elements.
    pub fn bilinear<K2: Ord + Clone, K3: Ord + Clone>(
        &self,
        other: &LinComb<K2, C>,
        mut f: impl FnMut(&K, &K2) -> LinComb<K3, C>,
    ) -> LinComb<K3, C> {
        let mut out = LinComb::new();
        for (a, x) in &self.terms {
            for (b, y) in &other.terms {
                out.add_scaled(&f(a, b), &(x.clone() * y));
            }
        }
        out
    }
}

impl<K: Ord + Clone, C: Coeff> FromIterator<(K, C)> for LinComb<K, C> {
    fn from_iter<T: IntoIterator<Item = (K, C)>>(iter: T) -> Self {
        let mut out = Self::new();
        for (k, c) in iter {
            out.add_term(k, &c);
        }
        out
    }
}

impl<K: Ord, C> IntoIterator for LinComb<K, C> {
    type Item = (K, C);
    type IntoIter = btree_map::IntoIter<K, C>;

    fn into_iter(self) -> Self::IntoIter {
        self.terms.into_iter()
    }
}

impl<'a, K: Ord, C> IntoIterator for &'a LinComb<K, C> {
    type Item = (&'a K, &'a C);
    type IntoIter = btree_map::Iter<'a, K, C>;

    fn into_iter(self) -> Self::IntoIter {
        self.terms.iter()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cancellation_removes_terms() {
        let mut x: LinComb<u32, BigInt> = LinComb::new();
        x.add_term(1, &BigInt::from(3));
        x.add_term(1, &BigInt::from(-3));
        assert!(x.is_zero());
        x.add_term(2, &BigInt::zero());
        assert_eq!(x.len(), 0);
    }

    #[test]
    fn bilinear_product() {
        let x: LinComb<u32, BigInt> = [(1, BigInt::from(2)), (2, BigInt::from(1))].into_iter().collect();
        let y = x.bilinear(&x, |a, b| LinComb::basis(a + b));
        assert_eq!(y.get(&2), BigInt::from(4));
        assert_eq!(y.get(&3), BigInt::from(4));
        assert_eq!(y.get(&4), BigInt::from(1));
    }
}
