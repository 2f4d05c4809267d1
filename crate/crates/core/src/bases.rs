//! Quasi-symmetric and noncommutative symmetric functions in the bases
//! needed here: F and U on the commutative side, R, S, Λ, Ψ, V and V' on
//! the noncommutative side. Everything noncommutative reduces to ribbons.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::composition::{compositions, compositions_ordered, Composition};
use crate::error::{Error, Result};
use crate::linear::{Coeff, LinComb};
use crate::matrix::IntMatrix;
use crate::permutation::{saillance_fiber, shifted_shuffle, Permutation};

/// Integer combination of compositions.
pub type IntComb = LinComb<Composition, BigInt>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum QsymBasis {
    Fundamental,
    U,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum NsymBasis {
    Ribbon,
    Lambda,
    Complete,
    PowerSum,
    V,
    VPrime,
}

impl QsymBasis {
    pub fn symbol(self) -> &'static str {
        match self {
            QsymBasis::Fundamental => "F",
            QsymBasis::U => "U",
        }
    }
}

impl NsymBasis {
    pub fn symbol(self) -> &'static str {
        match self {
            NsymBasis::Ribbon => "R",
            NsymBasis::Lambda => "Lambda",
            NsymBasis::Complete => "S",
            NsymBasis::PowerSum => "Psi",
            NsymBasis::V => "V",
            NsymBasis::VPrime => "V'",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QsymElement {
    basis: QsymBasis,
    terms: IntComb,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NsymElement<C: Coeff = BigInt> {
    basis: NsymBasis,
    terms: LinComb<Composition, C>,
}

fn lift<C: Coeff>(x: &IntComb) -> LinComb<Composition, C> {
    x.iter().map(|(k, c)| (k.clone(), C::from(c.clone()))).collect()
}

fn sign(k: usize) -> BigInt {
    if k.is_multiple_of(2) {
        BigInt::one()
    } else {
        -BigInt::one()
    }
}

/// Compositions obtained by merging adjacent parts, including `comp`.
pub fn coarsenings(comp: &Composition) -> Vec<Composition> {
    let des: Vec<usize> = comp.descent_set().into_iter().collect();
    subsets_as_compositions(&des, comp.weight())
}

/// Compositions obtained by splitting parts, including `comp`.
pub fn refinements(comp: &Composition) -> Vec<Composition> {
    let des = comp.descent_set();
    let free: Vec<usize> = (1..comp.weight()).filter(|d| !des.contains(d)).collect();
    let n = comp.weight();
    (0..1usize << free.len())
        .map(|mask| {
            let mut set = des.clone();
            set.extend(free.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &d)| d));
            Composition::from_descent_set(&set, n).expect("subset of 1..n")
        })
        .collect()
}

fn subsets_as_compositions(des: &[usize], n: usize) -> Vec<Composition> {
    (0..1usize << des.len())
        .map(|mask| {
            let set = des.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &d)| d).collect();
            Composition::from_descent_set(&set, n).expect("subset of a descent set")
        })
        .collect()
}

/// `R_I R_J = R_{I·J} + R_{I▹J}`, concatenation plus near-concatenation.
pub fn ribbon_product(i: &Composition, j: &Composition) -> IntComb {
    match i.near_concat(j) {
        None => IntComb::basis(i.concat(j)),
        Some(near) => {
            let mut out = IntComb::basis(i.concat(j));
            out.add_term(near, &BigInt::one());
            out
        }
    }
}

/// Bilinear extension of [`ribbon_product`].
pub fn ribbon_mul<C: Coeff>(x: &LinComb<Composition, C>, y: &LinComb<Composition, C>) -> LinComb<Composition, C> {
    x.bilinear(y, |a, b| lift(&ribbon_product(a, b)))
}

/// `S^I = Σ_{J coarser than I} R_J`.
pub fn complete_in_ribbon(comp: &Composition) -> IntComb {
    coarsenings(comp).into_iter().map(|j| (j, BigInt::one())).collect()
}

/// `Λ^J = Σ_{I finer than the complement of J} R_I`.
pub fn lambda_in_ribbon(comp: &Composition) -> IntComb {
    refinements(&comp.complement()).into_iter().map(|i| (i, BigInt::one())).collect()
}

/// `R_I = Σ_{J coarser than I} (-1)^{ℓ(I)-ℓ(J)} S^J`.
pub fn ribbon_in_complete(comp: &Composition) -> IntComb {
    coarsenings(comp)
        .into_iter()
        .map(|j| {
            let s = sign(comp.len() - j.len());
            (j, s)
        })
        .collect()
}

/// `R_K = Σ_{I finer than K} (-1)^{ℓ(I)-ℓ(K)} Λ^{complement of I}`.
pub fn ribbon_in_lambda(comp: &Composition) -> IntComb {
    refinements(comp)
        .into_iter()
        .map(|i| {
            let s = sign(i.len() - comp.len());
            (i.complement(), s)
        })
        .collect()
}

/// `Ψ_n` in ribbons, from `n S_n = Σ_{k=1}^{n} S_{n-k} Ψ_k`.
pub fn psi_n_in_ribbon(n: usize) -> Result<IntComb> {
    if n == 0 {
        return Err(Error::ZeroDegree);
    }
    let mut psis: Vec<IntComb> = Vec::with_capacity(n);
    for m in 1..=n {
        let mut psi = IntComb::term(Composition::single(m), BigInt::from(m));
        for (k, psi_k) in psis.iter().enumerate() {
            let s = IntComb::basis(Composition::single(m - k - 1));
            psi = psi.sub(&ribbon_mul(&s, psi_k));
        }
        psis.push(psi);
    }
    Ok(psis.pop().expect("n >= 1"))
}

/// `Ψ^I = Ψ_{i_1} ... Ψ_{i_r}` in ribbons.
pub fn psi_in_ribbon(comp: &Composition) -> Result<IntComb> {
    let mut out = IntComb::basis(Composition::empty());
    for &p in comp.parts() {
        out = ribbon_mul(&out, &psi_n_in_ribbon(p)?);
    }
    Ok(out)
}

fn m_cache() -> &'static Mutex<HashMap<usize, Arc<IntMatrix>>> {
    static CACHE: OnceLock<Mutex<HashMap<usize, Arc<IntMatrix>>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

fn minv_cache() -> &'static Mutex<HashMap<usize, Arc<IntMatrix>>> {
    static CACHE: OnceLock<Mutex<HashMap<usize, Arc<IntMatrix>>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// `M_n` computed from scratch: the entry in row `I`, column `J` is the
/// coefficient of `F_I` in `U_J`. Each permutation `σ` contributes to row
/// `RC(σ)` and column `complement(SC(σ))`.
pub fn compute_transition_matrix(n: usize) -> Result<IntMatrix> {
    if n == 0 {
        return Err(Error::ZeroDegree);
    }
    let mut m = IntMatrix::zeros(compositions_ordered(n));
    for s in Permutation::iter_all(n) {
        let i = m.position(&s.recoil_composition()).expect("composition of n");
        let j = m.position(&s.saillance_composition().complement()).expect("composition of n");
        *m.entry_mut(i, j) += 1;
    }
    Ok(m)
}

/// Memoized `M_n`.
pub fn transition_matrix(n: usize) -> Result<Arc<IntMatrix>> {
    if let Some(m) = m_cache().lock().expect("cache lock").get(&n) {
        return Ok(m.clone());
    }
    let m = Arc::new(compute_transition_matrix(n)?);
    m_cache().lock().expect("cache lock").insert(n, m.clone());
    Ok(m)
}

/// Installs a precomputed `M_n`, e.g. one read from disk. The matrix must
/// carry the labels of degree `n` in table order.
pub fn seed_transition_matrix(n: usize, m: IntMatrix) -> Result<()> {
    if m.labels() != compositions_ordered(n).as_slice() {
        return Err(Error::LabelMismatch(format!("not a degree {n} transition matrix")));
    }
    m_cache().lock().expect("cache lock").insert(n, Arc::new(m));
    Ok(())
}

/// Memoized `M_n^{-1}`.
pub fn transition_inverse(n: usize) -> Result<Arc<IntMatrix>> {
    if let Some(m) = minv_cache().lock().expect("cache lock").get(&n) {
        return Ok(m.clone());
    }
    let inv = Arc::new(transition_matrix(n)?.inverse()?);
    minv_cache().lock().expect("cache lock").insert(n, inv.clone());
    Ok(inv)
}

/// `U_I = Σ_{SC(σ) = complement(I)} F_{RC(σ)}`.
pub fn u_basis(comp: &Composition) -> Result<QsymElement> {
    if comp.is_empty() {
        return Err(Error::EmptyComposition);
    }
    let terms = saillance_fiber(&comp.complement()).iter().map(|s| (s.recoil_composition(), BigInt::one())).collect();
    Ok(QsymElement::new(QsymBasis::Fundamental, terms))
}

/// `V_J = Σ_I (M_n^{-1})_{J,I} R_I`.
pub fn v_in_ribbon(comp: &Composition) -> Result<IntComb> {
    if comp.is_empty() {
        return Ok(IntComb::basis(Composition::empty()));
    }
    let inv = transition_inverse(comp.weight())?;
    let j = inv.position(comp).expect("composition of n");
    Ok(inv.labels().iter().enumerate().map(|(i, label)| (label.clone(), inv.entry(j, i).clone())).collect())
}

/// `R_I = Σ_J (M_n)_{I,J} V_J`.
pub fn ribbon_in_v(comp: &Composition) -> Result<IntComb> {
    if comp.is_empty() {
        return Ok(IntComb::basis(Composition::empty()));
    }
    let m = transition_matrix(comp.weight())?;
    let i = m.position(comp).expect("composition of n");
    Ok(m.labels().iter().enumerate().map(|(j, label)| (label.clone(), m.entry(i, j).clone())).collect())
}

/// `V'_I = V_{complement(I)}`.
pub fn vprime_in_ribbon(comp: &Composition) -> Result<IntComb> {
    v_in_ribbon(&comp.complement())
}

pub fn ribbon_in_vprime(comp: &Composition) -> Result<IntComb> {
    Ok(ribbon_in_v(comp)?.map_linear(|j| IntComb::basis(j.complement())))
}

/// `Ψ_n = Σ_I (-1)^{ℓ(I)-1} V_I`, computed from the ribbon expansion.
pub fn psi_in_v(n: usize) -> Result<IntComb> {
    Ok(NsymElement::new(NsymBasis::PowerSum, IntComb::basis(Composition::single(n)))
        .convert(NsymBasis::V)?
        .into_terms())
}

impl QsymElement {
    pub fn new(basis: QsymBasis, terms: IntComb) -> Self {
        QsymElement { basis, terms }
    }

    pub fn basis_element(basis: QsymBasis, comp: Composition) -> Self {
        Self::new(basis, IntComb::basis(comp))
    }

    pub fn basis(&self) -> QsymBasis {
        self.basis
    }

    pub fn terms(&self) -> &IntComb {
        &self.terms
    }

    pub fn into_terms(self) -> IntComb {
        self.terms
    }

    pub fn to_fundamental(&self) -> Result<QsymElement> {
        match self.basis {
            QsymBasis::Fundamental => Ok(self.clone()),
            QsymBasis::U => {
                let mut out = IntComb::new();
                for (j, c) in self.terms.iter() {
                    out.add_scaled(u_basis(j)?.terms(), c);
                }
                Ok(QsymElement::new(QsymBasis::Fundamental, out))
            }
        }
    }

    /// `F_I = Σ_J (M_n^{-1})_{J,I} U_J`.
    pub fn to_u(&self) -> Result<QsymElement> {
        let f = self.to_fundamental()?;
        let mut out = IntComb::new();
        for (i, c) in f.terms.iter() {
            if i.is_empty() {
                out.add_term(i.clone(), c);
                continue;
            }
            let inv = transition_inverse(i.weight())?;
            let col = inv.position(i).expect("composition of n");
            for (row, j) in inv.labels().iter().enumerate() {
                out.add_term(j.clone(), &(c * inv.entry(row, col)));
            }
        }
        Ok(QsymElement::new(QsymBasis::U, out))
    }

    /// Duality pairing with `⟨F_I, R_J⟩ = δ_{IJ}`.
    pub fn pair(&self, other: &NsymElement) -> Result<BigInt> {
        let f = self.to_fundamental()?;
        let r = other.to_ribbon()?;
        Ok(f.terms.iter().map(|(k, c)| c * r.terms.get(k)).sum())
    }
}

impl<C: Coeff> NsymElement<C> {
    pub fn new(basis: NsymBasis, terms: LinComb<Composition, C>) -> Self {
        NsymElement { basis, terms }
    }

    pub fn basis_element(basis: NsymBasis, comp: Composition) -> Self {
        Self::new(basis, LinComb::basis(comp))
    }

    pub fn basis(&self) -> NsymBasis {
        self.basis
    }

    pub fn terms(&self) -> &LinComb<Composition, C> {
        &self.terms
    }

    pub fn into_terms(self) -> LinComb<Composition, C> {
        self.terms
    }

    pub fn to_ribbon(&self) -> Result<NsymElement<C>> {
        let expand: fn(&Composition) -> Result<IntComb> = match self.basis {
            NsymBasis::Ribbon => return Ok(self.clone()),
            NsymBasis::Lambda => |c| Ok(lambda_in_ribbon(c)),
            NsymBasis::Complete => |c| Ok(complete_in_ribbon(c)),
            NsymBasis::PowerSum => psi_in_ribbon,
            NsymBasis::V => v_in_ribbon,
            NsymBasis::VPrime => vprime_in_ribbon,
        };
        let mut out = LinComb::new();
        for (k, c) in self.terms.iter() {
            out.add_scaled(&lift(&expand(k)?), c);
        }
        Ok(NsymElement::new(NsymBasis::Ribbon, out))
    }

    /// Re-expands in `target`. Going to the power sums is refused since
    /// that change of basis is not integral.
    pub fn convert(&self, target: NsymBasis) -> Result<NsymElement<C>> {
        let r = self.to_ribbon()?;
        let expand: fn(&Composition) -> Result<IntComb> = match target {
            NsymBasis::Ribbon => return Ok(r),
            NsymBasis::Lambda => |c| Ok(ribbon_in_lambda(c)),
            NsymBasis::Complete => |c| Ok(ribbon_in_complete(c)),
            NsymBasis::PowerSum => {
                return Err(Error::NotIntegral("ribbons do not expand integrally in power sums".into()))
            }
            NsymBasis::V => ribbon_in_v,
            NsymBasis::VPrime => ribbon_in_vprime,
        };
        let mut out = LinComb::new();
        for (k, c) in r.terms.iter() {
            out.add_scaled(&lift(&expand(k)?), c);
        }
        Ok(NsymElement::new(target, out))
    }

    /// Product, expressed in the basis of `self`.
    pub fn mul(&self, other: &NsymElement<C>) -> Result<NsymElement<C>> {
        let p = ribbon_mul(self.to_ribbon()?.terms(), other.to_ribbon()?.terms());
        NsymElement::new(NsymBasis::Ribbon, p).convert(self.basis)
    }
}

/// Terms of `ΔF_I = Σ_k F_{I[k]} ⊗ F_{I/k}`, where `I/k` keeps the
/// descents of `I` beyond `k`, shifted down by `k`.
pub fn qsym_coproduct(comp: &Composition) -> Vec<(Composition, Composition)> {
    let n = comp.weight();
    let des = comp.descent_set();
    (0..=n)
        .map(|k| {
            let left = comp.ribbon_prefix(k).expect("k <= n");
            let right_des = des.iter().filter(|&&d| d > k).map(|d| d - k).collect();
            let right = Composition::from_descent_set(&right_des, n - k).expect("shifted descents");
            (left, right)
        })
        .collect()
}

/// Saillance compositions of the terms of `F_σ F_τ`, with multiplicity.
pub fn sc_distribution(sigma: &Permutation, tau: &Permutation) -> BTreeMap<Composition, usize> {
    let mut out = BTreeMap::new();
    for g in shifted_shuffle(sigma, tau) {
        *out.entry(g.saillance_composition()).or_default() += 1;
    }
    out
}

/// Whether the span of `F_σ - F_τ` with `SC(σ) = SC(τ)` is an ideal up to
/// total degree `n`: the saillance distribution of `F_σ F_τ` must depend
/// only on `SC(σ)` and `SC(τ)`.
pub fn quotient_class_check(n: usize) -> bool {
    for a in 1..n {
        for b in 1..=n - a {
            for j in compositions(a) {
                let left = saillance_fiber(&j);
                for k in compositions(b) {
                    let right = saillance_fiber(&k);
                    let reference = sc_distribution(&left[0], &right[0]);
                    let uniform = left.iter().all(|s| right.iter().all(|t| sc_distribution(s, t) == reference));
                    if !uniform {
                        return false;
                    }
                }
            }
        }
    }
    true
}

impl fmt::Display for QsymBasis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.symbol())
    }
}

impl fmt::Display for NsymBasis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.symbol())
    }
}

/// Whether every term of `x` has weight `n`.
pub fn is_homogeneous<C: Coeff>(x: &LinComb<Composition, C>, n: usize) -> bool {
    x.keys().all(|k| k.weight() == n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::composition::comp;
    use num_traits::Zero;

    fn int(terms: &[(&[usize], i64)]) -> IntComb {
        terms.iter().map(|(k, c)| (comp(k), BigInt::from(*c))).collect()
    }

    #[test]
    fn ribbon_products() {
        assert_eq!(ribbon_product(&comp(&[2]), &comp(&[2])), int(&[(&[2, 2], 1), (&[4], 1)]));
        assert_eq!(ribbon_product(&comp(&[1]), &comp(&[1, 2])), int(&[(&[1, 1, 2], 1), (&[2, 2], 1)]));
        assert_eq!(ribbon_product(&Composition::empty(), &comp(&[3])), int(&[(&[3], 1)]));
        // R_4 = R_2 R_2 - R_1 R_12 + R_112
        let r = ribbon_product(&comp(&[2]), &comp(&[2]))
            .sub(&ribbon_product(&comp(&[1]), &comp(&[1, 2])))
            .add(&int(&[(&[1, 1, 2], 1)]));
        assert_eq!(r, int(&[(&[4], 1)]));
    }

    #[test]
    fn complete_and_lambda_match_products() {
        for n in 1..=6 {
            for c in compositions(n) {
                let mut s = IntComb::basis(Composition::empty());
                let mut l = IntComb::basis(Composition::empty());
                for &p in c.parts() {
                    s = ribbon_mul(&s, &IntComb::basis(Composition::single(p)));
                    l = ribbon_mul(&l, &IntComb::basis(Composition::ones(p)));
                }
                assert_eq!(complete_in_ribbon(&c), s, "S^{c}");
                assert_eq!(lambda_in_ribbon(&c), l, "Lambda^{c}");
            }
        }
    }

    #[test]
    fn conversions_round_trip() {
        for n in 1..=8 {
            for c in compositions(n) {
                for basis in [NsymBasis::Lambda, NsymBasis::Complete, NsymBasis::V, NsymBasis::VPrime] {
                    let x = NsymElement::<BigInt>::basis_element(NsymBasis::Ribbon, c.clone());
                    let back = x.convert(basis).unwrap().to_ribbon().unwrap();
                    assert_eq!(back, x, "{c} via {basis}");
                }
            }
        }
    }

    #[test]
    fn transition_matrix_small() {
        let m = transition_matrix(3).unwrap();
        let labels: Vec<String> = m.labels().iter().map(|c| c.compact()).collect();
        assert_eq!(labels, ["3", "12", "21", "111"]);
        assert_eq!(m.get(&comp(&[2, 1]), &comp(&[1, 1, 1])), BigInt::one());
        assert!(m.is_upper_unitriangular());
        assert_eq!(transition_matrix(5).unwrap().get(&comp(&[2, 2, 1]), &comp(&[2, 1, 1, 1])), BigInt::from(5));
        assert_eq!(transition_matrix(1).unwrap().rows(), &[vec![BigInt::one()]]);
        assert_eq!(transition_matrix(0).unwrap_err(), Error::ZeroDegree);
    }

    #[test]
    fn transition_matrices_are_unitriangular() {
        for n in 1..=8 {
            let m = transition_matrix(n).unwrap();
            assert!(m.is_upper_unitriangular(), "n = {n}");
            let inv = transition_inverse(n).unwrap();
            assert_eq!(m.mul(&inv).unwrap(), IntMatrix::identity(m.labels().to_vec()));
        }
    }

    #[test]
    fn u_examples() {
        let u = |c: &[usize]| u_basis(&comp(c)).unwrap().into_terms();
        assert_eq!(u(&[2, 1]), int(&[(&[1, 2], 1), (&[2, 1], 1)]));
        assert_eq!(u(&[4]), int(&[(&[4], 1)]));
        assert_eq!(
            u(&[2, 1, 1, 1]),
            int(&[
                (&[1, 1, 1, 2], 1),
                (&[1, 1, 2, 1], 3),
                (&[1, 2, 1, 1], 3),
                (&[1, 2, 2], 2),
                (&[1, 3, 1], 3),
                (&[2, 1, 1, 1], 1),
                (&[2, 1, 2], 2),
                (&[2, 2, 1], 5),
                (&[3, 1, 1], 2),
                (&[3, 2], 1),
                (&[4, 1], 1),
            ])
        );
        for n in 1..=6 {
            let m = transition_matrix(n).unwrap();
            for j in compositions(n) {
                let col = u_basis(&j).unwrap();
                for i in compositions(n) {
                    assert_eq!(col.terms().get(&i), m.get(&i, &j));
                }
            }
        }
    }

    #[test]
    fn v_examples() {
        assert_eq!(v_in_ribbon(&comp(&[2, 1])).unwrap(), int(&[(&[1, 1, 1], -1), (&[2, 1], 1)]));
        assert_eq!(v_in_ribbon(&Composition::ones(4)).unwrap(), int(&[(&[1, 1, 1, 1], 1)]));
        assert_eq!(ribbon_in_v(&comp(&[1, 3])).unwrap(), int(&[(&[1, 3], 1), (&[2, 2], 1), (&[3, 1], 1)]));
        let v = |c: &[usize]| {
            NsymElement::<BigInt>::basis_element(NsymBasis::V, comp(c)).convert(NsymBasis::Lambda).unwrap().into_terms()
        };
        assert_eq!(v(&[2]), int(&[(&[1, 1], 1), (&[2], -1)]));
        assert_eq!(v(&[1, 1, 1, 1, 1]), int(&[(&[5], 1)]));
        assert_eq!(v(&[2, 1, 1]), int(&[(&[1, 3], 1), (&[4], -3)]));
    }

    #[test]
    fn duality() {
        for n in 1..=6 {
            for i in compositions(n) {
                let u = QsymElement::basis_element(QsymBasis::U, i.clone());
                for j in compositions(n) {
                    let v = NsymElement::basis_element(NsymBasis::V, j.clone());
                    let expected = if i == j { BigInt::one() } else { BigInt::zero() };
                    assert_eq!(u.pair(&v).unwrap(), expected);
                }
            }
        }
        let f = QsymElement::basis_element(QsymBasis::Fundamental, comp(&[1, 2, 1]));
        assert_eq!(f.to_u().unwrap().to_fundamental().unwrap(), f);
    }

    #[test]
    fn power_sums() {
        for n in 1..=7 {
            let psi = psi_n_in_ribbon(n).unwrap();
            let closed: IntComb = (0..n).map(|k| (Composition::ones(k).push(n - k), sign(k))).collect();
            assert_eq!(psi, closed, "n = {n}");
            let v = psi_in_v(n).unwrap();
            let expected: IntComb = compositions(n)
                .into_iter()
                .map(|c| {
                    let s = sign(c.len() - 1);
                    (c, s)
                })
                .collect();
            assert_eq!(v, expected, "n = {n}");
        }
        assert_eq!(psi_in_v(2).unwrap(), int(&[(&[2], 1), (&[1, 1], -1)]));
        let x = NsymElement::<BigInt>::basis_element(NsymBasis::Ribbon, comp(&[2]));
        assert!(x.convert(NsymBasis::PowerSum).is_err());
    }

    #[test]
    fn qsym_coproduct_terms() {
        let terms = qsym_coproduct(&comp(&[2, 1]));
        assert_eq!(
            terms,
            vec![
                (Composition::empty(), comp(&[2, 1])),
                (comp(&[1]), comp(&[1, 1])),
                (comp(&[2]), comp(&[1])),
                (comp(&[2, 1]), Composition::empty()),
            ]
        );
    }

    #[test]
    fn quotient_is_an_ideal() {
        assert!(quotient_class_check(2));
        assert!(quotient_class_check(6));
    }

    #[test]
    fn products_in_other_bases() {
        let l = NsymElement::<BigInt>::basis_element(NsymBasis::Lambda, comp(&[1]));
        let p = l.mul(&l).unwrap();
        assert_eq!(p.basis(), NsymBasis::Lambda);
        assert_eq!(p.into_terms(), int(&[(&[1, 1], 1)]));
    }
}
