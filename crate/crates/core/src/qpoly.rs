//! Polynomials in one variable `q` with arbitrary-precision integer
//! coefficients.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// Dense coefficient vector, lowest degree first, trailing zeros trimmed.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct QPoly {
    coeffs: Vec<BigInt>,
}

impl QPoly {
    pub fn from_coeffs<T: Into<BigInt>>(coeffs: impl IntoIterator<Item = T>) -> Self {
        let mut p = QPoly { coeffs: coeffs.into_iter().map(Into::into).collect() };
        p.trim();
        p
    }

    pub fn constant<T: Into<BigInt>>(c: T) -> Self {
        Self::from_coeffs([c.into()])
    }

    /// `c * q^e`
    pub fn monomial<T: Into<BigInt>>(c: T, e: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); e + 1];
        coeffs[e] = c.into();
        Self::from_coeffs(coeffs)
    }

    pub fn q() -> Self {
        Self::monomial(1, 1)
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, e: usize) -> BigInt {
        self.coeffs.get(e).cloned().unwrap_or_default()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Exponent of the lowest nonzero term.
    pub fn low_degree(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.coeffs.iter().rev().fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    pub fn at_one(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    /// Multiplication by `q^e`.
    pub fn shift(&self, e: usize) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut coeffs = vec![BigInt::zero(); e];
        coeffs.extend(self.coeffs.iter().cloned());
        QPoly { coeffs }
    }

    /// Keeps only the terms of degree `< n`.
    pub fn truncate(&self, n: usize) -> Self {
        Self::from_coeffs(self.coeffs.iter().take(n).cloned())
    }

    /// `q^d * p(1/q)` where `d` is the degree; the zero polynomial maps to itself.
    pub fn reversed(&self) -> Self {
        Self::from_coeffs(self.coeffs.iter().rev().cloned())
    }

    /// Exact quotient, or `None` when `divisor` does not divide `self`
    /// over the integers.
    pub fn div_exact(&self, divisor: &QPoly) -> Option<QPoly> {
        let d = divisor.degree()?;
        if self.is_zero() {
            return Some(QPoly::zero());
        }
        let lead = &divisor.coeffs[d];
        let mut rem = self.coeffs.clone();
        if rem.len() < d + 1 {
            return None;
        }
        let mut quot = vec![BigInt::zero(); rem.len() - d];
        for k in (0..quot.len()).rev() {
            let top = &rem[k + d];
            if top.is_zero() {
                continue;
            }
            if !(top % lead).is_zero() {
                return None;
            }
            let f = top / lead;
            for (i, c) in divisor.coeffs.iter().enumerate() {
                rem[k + i] -= &f * c;
            }
            quot[k] = f;
        }
        if rem.iter().all(|c| c.is_zero()) {
            Some(QPoly::from_coeffs(quot))
        } else {
            None
        }
    }

    /// `[n]_q = 1 + q + ... + q^(n-1)`; `[0]_q = 0`.
    pub fn q_int(n: usize) -> Self {
        Self::from_coeffs(vec![BigInt::one(); n])
    }

    /// `[n]_q! = [1]_q [2]_q ... [n]_q`.
    pub fn q_factorial(n: usize) -> Self {
        (1..=n).fold(QPoly::one(), |acc, k| &acc * &QPoly::q_int(k))
    }
}

impl Zero for QPoly {
    fn zero() -> Self {
        QPoly { coeffs: Vec::new() }
    }

    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl One for QPoly {
    fn one() -> Self {
        Self::constant(1)
    }
}

impl From<BigInt> for QPoly {
    fn from(c: BigInt) -> Self {
        QPoly::constant(c)
    }
}

impl From<i64> for QPoly {
    fn from(c: i64) -> Self {
        QPoly::constant(c)
    }
}

impl AddAssign<&QPoly> for QPoly {
    fn add_assign(&mut self, rhs: &QPoly) {
        if self.coeffs.len() < rhs.coeffs.len() {
            self.coeffs.resize(rhs.coeffs.len(), BigInt::zero());
        }
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            *a += b;
        }
        self.trim();
    }
}

impl Add<&QPoly> for &QPoly {
    type Output = QPoly;

    fn add(self, rhs: &QPoly) -> QPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for QPoly {
    type Output = QPoly;

    fn add(mut self, rhs: QPoly) -> QPoly {
        self += &rhs;
        self
    }
}

impl Neg for QPoly {
    type Output = QPoly;

    fn neg(self) -> QPoly {
        QPoly { coeffs: self.coeffs.into_iter().map(|c| -c).collect() }
    }
}

impl Neg for &QPoly {
    type Output = QPoly;

    fn neg(self) -> QPoly {
        -self.clone()
    }
}

impl Sub<&QPoly> for &QPoly {
    type Output = QPoly;

    fn sub(self, rhs: &QPoly) -> QPoly {
        self + &(-rhs)
    }
}

impl Sub for QPoly {
    type Output = QPoly;

    fn sub(self, rhs: QPoly) -> QPoly {
        &self - &rhs
    }
}

impl Mul<&QPoly> for &QPoly {
    type Output = QPoly;

    fn mul(self, rhs: &QPoly) -> QPoly {
        if self.is_zero() || rhs.is_zero() {
            return QPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        QPoly::from_coeffs(coeffs)
    }
}

impl Mul<&QPoly> for QPoly {
    type Output = QPoly;

    fn mul(self, rhs: &QPoly) -> QPoly {
        &self * rhs
    }
}

impl Mul for QPoly {
    type Output = QPoly;

    fn mul(self, rhs: QPoly) -> QPoly {
        &self * &rhs
    }
}

/// Descending powers with explicit signs: `q^17 + 3q^16 - q + 2`.
impl fmt::Display for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (e, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let abs = c.abs();
            let unit = abs.is_one();
            match e {
                0 => write!(f, "{abs}")?,
                1 if unit => f.write_str("q")?,
                1 => write!(f, "{abs}q")?,
                _ if unit => write!(f, "q^{e}")?,
                _ => write!(f, "{abs}q^{e}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn q_integers() {
        assert_eq!(QPoly::q_int(1), QPoly::one());
        assert_eq!(QPoly::q_int(3), QPoly::from_coeffs([1, 1, 1]));
        assert_eq!(QPoly::q_factorial(3), QPoly::from_coeffs([1, 2, 2, 1]));
        assert_eq!(QPoly::q_factorial(0), QPoly::one());
    }

    #[test]
    fn factorial_at_one() {
        let mut fact = BigInt::one();
        for n in 1..=12usize {
            fact *= n;
            assert_eq!(QPoly::q_factorial(n).at_one(), fact);
        }
    }

    #[test]
    fn exact_division() {
        let f = QPoly::q_factorial(5);
        let d = &QPoly::q_int(2) * &QPoly::q_int(5);
        let quot = f.div_exact(&d).unwrap();
        assert_eq!(&quot * &d, f);
        assert_eq!(QPoly::q_int(3).div_exact(&QPoly::q_int(2)), None);
        assert_eq!(QPoly::q_int(3).div_exact(&QPoly::zero()), None);
    }

    #[test]
    fn display() {
        let p = QPoly::from_coeffs([2, -1, 0, 3, 1]);
        assert_eq!(p.to_string(), "q^4 + 3q^3 - q + 2");
        assert_eq!((-QPoly::q()).to_string(), "-q");
        assert_eq!(QPoly::zero().to_string(), "0");
    }

    #[test]
    fn evaluation_and_reversal() {
        let p = QPoly::from_coeffs([0, 1, 2]);
        assert_eq!(p.eval(&BigInt::from(2)), BigInt::from(10));
        assert_eq!(p.reversed(), QPoly::from_coeffs([2, 1]));
        assert_eq!(p.low_degree(), Some(1));
        assert_eq!(p.shift(2), QPoly::from_coeffs([0, 0, 0, 1, 2]));
    }
}
