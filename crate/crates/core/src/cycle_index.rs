//! Coefficients of the noncommutative cycle index and their q-analogues.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::bases::{ribbon_mul, NsymBasis, NsymElement};
use crate::composition::{compositions, compositions_ordered, Composition};
use crate::error::{Error, Result};
use crate::linear::LinComb;
use crate::matrix::IntMatrix;
use crate::qpoly::QPoly;

/// Largest degree [`expand_sn_in_theta`] accepts unless told otherwise.
pub const DEFAULT_DEGREE_BOUND: usize = 7;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ThetaVariant {
    /// `Θ_n(q) = Σ_k (-q)^k R_{1^k, n-k}`
    Plain,
    /// `Θ̃_n(q) = Σ_k (-1)^k q^{n-1-k} R_{1^k, n-k}`
    Tilde,
}

/// Polynomial coefficients indexed by the compositions of one degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoefficientTable {
    pub degree: usize,
    pub entries: BTreeMap<Composition, QPoly>,
}

impl CoefficientTable {
    /// Sum of all entries at `q = 1`.
    pub fn total_mass(&self) -> BigInt {
        self.entries.values().map(QPoly::at_one).sum()
    }
}

fn check(comp: &Composition) -> Result<()> {
    if comp.is_empty() {
        Err(Error::EmptyComposition)
    } else {
        Ok(())
    }
}

/// `c_I = n! / (s_1 s_2 ... s_r)` with `s_j` the partial sums of `I`.
pub fn c_coefficient(comp: &Composition) -> Result<BigInt> {
    check(comp)?;
    let fact: BigInt = (1..=comp.weight()).map(BigInt::from).product();
    let den: BigInt = comp.partial_sums().into_iter().map(BigInt::from).product();
    Ok(fact / den)
}

/// `c̃_I(q) = [n]_q! / ([s_1]_q ... [s_r]_q)`.
pub fn c_q_tilde(comp: &Composition) -> Result<QPoly> {
    check(comp)?;
    let den = comp.partial_sums().into_iter().fold(QPoly::one(), |acc, s| &acc * &QPoly::q_int(s));
    QPoly::q_factorial(comp.weight())
        .div_exact(&den)
        .ok_or_else(|| Error::NotIntegral(format!("q-quotient for {comp}")))
}

/// `c_I(q) = q^{maj(I)} c̃_I(q)`.
pub fn c_q(comp: &Composition) -> Result<QPoly> {
    Ok(c_q_tilde(comp)?.shift(comp.maj()))
}

/// Closed-form coefficient table of one variant.
pub fn c_q_table(n: usize, variant: ThetaVariant) -> Result<CoefficientTable> {
    if n == 0 {
        return Err(Error::ZeroDegree);
    }
    let entries = compositions(n)
        .into_iter()
        .map(|c| {
            let p = match variant {
                ThetaVariant::Plain => c_q(&c)?,
                ThetaVariant::Tilde => c_q_tilde(&c)?,
            };
            Ok((c, p))
        })
        .collect::<Result<_>>()?;
    Ok(CoefficientTable { degree: n, entries })
}

fn sign_poly(k: usize) -> QPoly {
    QPoly::constant(if k.is_multiple_of(2) { 1 } else { -1 })
}

/// `Θ_n(q)` or `Θ̃_n(q)` in ribbons.
pub fn theta_n(n: usize, variant: ThetaVariant) -> Result<NsymElement<QPoly>> {
    if n == 0 {
        return Err(Error::ZeroDegree);
    }
    let terms = (0..n)
        .map(|k| {
            let e = match variant {
                ThetaVariant::Plain => k,
                ThetaVariant::Tilde => n - 1 - k,
            };
            (Composition::ones(k).push(n - k), sign_poly(k).shift(e))
        })
        .collect();
    Ok(NsymElement::new(NsymBasis::Ribbon, terms))
}

pub fn theta(n: usize) -> Result<NsymElement<QPoly>> {
    theta_n(n, ThetaVariant::Plain)
}

pub fn theta_tilde(n: usize) -> Result<NsymElement<QPoly>> {
    theta_n(n, ThetaVariant::Tilde)
}

/// `Θ^I = Θ_{i_1} ... Θ_{i_r}` in ribbons.
pub fn theta_product(comp: &Composition, variant: ThetaVariant) -> Result<LinComb<Composition, QPoly>> {
    let mut out = LinComb::basis(Composition::empty());
    for &p in comp.parts() {
        out = ribbon_mul(&out, theta_n(p, variant)?.terms());
    }
    Ok(out)
}

/// Solves `[n]_q! S_n = Σ_I x_I(q) Θ^I(q)` exactly in the ribbon basis.
///
/// With `A(q)` the matrix whose columns are the `Θ^I`, `A(0)` is
/// invertible over the integers (its columns are `S^I`, or `±Λ^I` for the
/// tilde variant), so the coefficients of `x` are found one power of `q`
/// at a time. The result is checked by substitution; if the degree guess
/// was too small it is doubled.
pub fn expand_sn_in_theta(n: usize, variant: ThetaVariant, bound: usize) -> Result<CoefficientTable> {
    if n == 0 {
        return Err(Error::ZeroDegree);
    }
    if n > bound {
        return Err(Error::DegreeBound { degree: n, bound });
    }
    let labels = compositions_ordered(n);
    let dim = labels.len();
    let columns: Vec<LinComb<Composition, QPoly>> =
        labels.iter().map(|c| theta_product(c, variant)).collect::<Result<_>>()?;
    let index: BTreeMap<&Composition, usize> = labels.iter().enumerate().map(|(i, c)| (c, i)).collect();

    // a[e][row][col]: coefficient of q^e
    let max_deg = columns.iter().flat_map(|col| col.iter().filter_map(|(_, p)| p.degree())).max().unwrap_or(0);
    let mut a = vec![vec![vec![BigInt::zero(); dim]; dim]; max_deg + 1];
    for (col, comb) in columns.iter().enumerate() {
        for (row_label, p) in comb.iter() {
            let row = index[row_label];
            for (e, c) in p.coeffs().iter().enumerate() {
                a[e][row][col] = c.clone();
            }
        }
    }
    let a0 = IntMatrix::new(labels.clone(), a[0].clone())?;
    let a0_inv = a0.inverse()?;
    let rhs = QPoly::q_factorial(n);
    let rhs_row = index[&Composition::single(n)];

    let mut degree = n * (n - 1) / 2;
    loop {
        let x = lift_solution(&a, &a0_inv, &rhs, rhs_row, dim, degree);
        let table: BTreeMap<Composition, QPoly> =
            labels.iter().zip(&x).filter(|(_, p)| !p.is_zero()).map(|(c, p)| (c.clone(), p.clone())).collect();
        if verifies(&columns, &table, &rhs, n) {
            return Ok(CoefficientTable { degree: n, entries: table });
        }
        if degree > 4 * n * n {
            return Err(Error::Solve(format!("no polynomial solution found in degree {n}")));
        }
        degree = 2 * degree + 1;
    }
}

/// `x_k = A_0^{-1} (b_k - Σ_{j ≥ 1} A_j x_{k-j})` for `k = 0..=degree`.
fn lift_solution(
    a: &[Vec<Vec<BigInt>>],
    a0_inv: &IntMatrix,
    rhs: &QPoly,
    rhs_row: usize,
    dim: usize,
    degree: usize,
) -> Vec<QPoly> {
    let mut xs: Vec<Vec<BigInt>> = Vec::with_capacity(degree + 1);
    for k in 0..=degree {
        let mut r = vec![BigInt::zero(); dim];
        r[rhs_row] = rhs.coeff(k);
        for (j, aj) in a.iter().enumerate().skip(1).take(k) {
            let prev = &xs[k - j];
            for (row, r_row) in r.iter_mut().enumerate() {
                for (col, v) in prev.iter().enumerate() {
                    let c = &aj[row][col];
                    if !c.is_zero() && !v.is_zero() {
                        *r_row -= c * v;
                    }
                }
            }
        }
        let xk: Vec<BigInt> =
            (0..dim).map(|i| (0..dim).filter(|&j| !r[j].is_zero()).map(|j| a0_inv.entry(i, j) * &r[j]).sum()).collect();
        xs.push(xk);
    }
    (0..dim).map(|i| QPoly::from_coeffs(xs.iter().map(|xk| xk[i].clone()))).collect()
}

fn verifies(
    columns: &[LinComb<Composition, QPoly>],
    table: &BTreeMap<Composition, QPoly>,
    rhs: &QPoly,
    n: usize,
) -> bool {
    let labels = compositions_ordered(n);
    let mut total: LinComb<Composition, QPoly> = LinComb::new();
    for (c, col) in labels.iter().zip(columns) {
        if let Some(x) = table.get(c) {
            total.add_scaled(col, x);
        }
    }
    total == LinComb::term(Composition::single(n), rhs.clone())
}
