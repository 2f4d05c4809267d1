//! Products in the `V'` basis: the Pieri rule, its alternating inverse,
//! the closed-form structure constants and a shuffle-counting oracle.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::binomial;
use num_traits::{One, Zero};

use crate::bases::IntComb;
use crate::composition::{compositions, Composition};
use crate::error::{Error, Result};
use crate::permutation::{canonical_representative, shifted_shuffle};

/// Default cap on `|I| + |J|` for [`vprime_product_oracle`].
pub const ORACLE_BOUND: usize = 9;

fn binom(n: usize, k: usize) -> BigInt {
    if k > n {
        BigInt::zero()
    } else {
        binomial(BigInt::from(n), BigInt::from(k))
    }
}

/// `V'_I Λ_k = Σ_{j=0}^{n} C(k+j-1, k-1) V'_{I[n-j], k+j}`.
pub fn pieri_lambda(comp: &Composition, k: usize) -> Result<IntComb> {
    if k == 0 {
        return Err(Error::ZeroDegree);
    }
    let n = comp.weight();
    let mut out = IntComb::new();
    for j in 0..=n {
        let key = comp.ribbon_prefix(n - j)?.push(k + j);
        out.add_term(key, &binom(k + j - 1, k - 1));
    }
    Ok(out)
}

/// One term `coeff · V'_{prefix} V'_k` of the alternating expansion.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReconstructionTerm {
    pub prefix: Composition,
    pub k: usize,
    pub coeff: BigInt,
}

/// `V'_I = Σ_{k=i_r}^{n} (-1)^{k-i_r} C(k-1, i_r-1) V'_{I[n-k]} V'_k`.
pub fn alternating_reconstruction(comp: &Composition) -> Result<Vec<ReconstructionTerm>> {
    let last = comp.last_part().ok_or(Error::EmptyComposition)?;
    let n = comp.weight();
    (last..=n)
        .map(|k| {
            let mut coeff = binom(k - 1, last - 1);
            if (k - last) % 2 == 1 {
                coeff = -coeff;
            }
            Ok(ReconstructionTerm { prefix: comp.ribbon_prefix(n - k)?, k, coeff })
        })
        .collect()
}

/// Expands [`alternating_reconstruction`] with the Pieri rule; the result
/// is `V'_I` alone when the corollary holds.
pub fn expand_reconstruction(comp: &Composition) -> Result<IntComb> {
    let mut out = IntComb::new();
    for t in alternating_reconstruction(comp)? {
        out.add_scaled(&pieri_lambda(&t.prefix, t.k)?, &t.coeff);
    }
    Ok(out)
}

/// Coefficient of `V'_K` in `V'_I V'_J` by the closed formula.
///
/// With `ℓ(I) = m`, `ℓ(J) = p`, `ℓ(K) = q` and `r = q - p`: the product of
/// `C(k_i - 1, j_i - 1)` when `q = p`; when `r > 0`, the product of
/// `C(k_{i+r} - 1, j_i - 1)` provided `K` starts with `i_1, ..., i_{r-1}`
/// and `k_r ≤ i_r`; zero otherwise.
pub fn vprime_coefficient(i: &Composition, j: &Composition, k: &Composition) -> BigInt {
    if k.weight() != i.weight() + j.weight() {
        return BigInt::zero();
    }
    if j.is_empty() {
        return if k == i { BigInt::one() } else { BigInt::zero() };
    }
    if i.is_empty() {
        return if k == j { BigInt::one() } else { BigInt::zero() };
    }
    let (ip, jp, kp) = (i.parts(), j.parts(), k.parts());
    let (p, q) = (jp.len(), kp.len());
    if q < p {
        return BigInt::zero();
    }
    let r = q - p;
    if r > 0 && (r > ip.len() || kp[..r - 1] != ip[..r - 1] || kp[r - 1] > ip[r - 1]) {
        return BigInt::zero();
    }
    jp.iter().zip(&kp[r..]).map(|(&jj, &kk)| binom(kk - 1, jj - 1)).product()
}

/// `V'_I V'_J` by the closed formula.
pub fn vprime_product(i: &Composition, j: &Composition) -> IntComb {
    compositions(i.weight() + j.weight())
        .into_iter()
        .map(|k| {
            let c = vprime_coefficient(i, j, &k);
            (k, c)
        })
        .collect()
}

/// `V'_I V'_J` by counting saillance compositions in the shifted shuffle of
/// canonical representatives of the two fibers.
pub fn vprime_product_oracle(i: &Composition, j: &Composition, bound: usize) -> Result<IntComb> {
    let total = i.weight() + j.weight();
    if total > bound {
        return Err(Error::DegreeBound { degree: total, bound });
    }
    if i.is_empty() {
        return Ok(IntComb::basis(j.clone()));
    }
    if j.is_empty() {
        return Ok(IntComb::basis(i.clone()));
    }
    let alpha = canonical_representative(i)?;
    let beta = canonical_representative(j)?;
    Ok(shifted_shuffle(&alpha, &beta).into_iter().map(|g| (g.saillance_composition(), BigInt::one())).collect())
}

/// `V_I V_J`, through `V_I = V'_{complement(I)}`.
pub fn v_product(i: &Composition, j: &Composition) -> IntComb {
    vprime_product(&i.complement(), &j.complement()).map_linear(|k| IntComb::basis(k.complement()))
}

/// All `c̄_{IJ}^K` with `|I| = m` and `|J| = n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StructureConstantTable {
    pub degrees: (usize, usize),
    pub entries: BTreeMap<(Composition, Composition, Composition), BigInt>,
}

impl StructureConstantTable {
    pub fn compute(m: usize, n: usize) -> Self {
        let mut entries = BTreeMap::new();
        for i in compositions(m) {
            for j in compositions(n) {
                for (k, c) in vprime_product(&i, &j) {
                    entries.insert((i.clone(), j.clone(), k), c);
                }
            }
        }
        StructureConstantTable { degrees: (m, n), entries }
    }

    /// Whether `Σ_K c̄_{IJ}^K = C(m + n, m)` for every pair.
    pub fn mass_holds(&self) -> bool {
        let (m, n) = self.degrees;
        let mut sums: BTreeMap<(&Composition, &Composition), BigInt> = BTreeMap::new();
        for ((i, j, _), c) in &self.entries {
            *sums.entry((i, j)).or_default() += c;
        }
        let expected = binom(m + n, m);
        sums.len() == compositions(m).len() * compositions(n).len() && sums.values().all(|s| *s == expected)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::composition::comp;

    fn int(terms: &[(&[usize], i64)]) -> IntComb {
        terms.iter().map(|(k, c)| (comp(k), BigInt::from(*c))).collect()
    }

    #[test]
    fn pieri() {
        assert_eq!(
            pieri_lambda(&comp(&[3, 2]), 3).unwrap(),
            int(&[(&[3, 2, 3], 1), (&[3, 1, 4], 3), (&[3, 5], 6), (&[2, 6], 10), (&[1, 7], 15), (&[8], 21)])
        );
        assert_eq!(pieri_lambda(&Composition::empty(), 4).unwrap(), int(&[(&[4], 1)]));
        assert_eq!(pieri_lambda(&comp(&[2]), 1).unwrap(), int(&[(&[2, 1], 1), (&[1, 2], 1), (&[3], 1)]));
        for n in 0..=5 {
            for c in compositions(n) {
                for k in 1..=8 - n.max(1) {
                    assert_eq!(pieri_lambda(&c, k).unwrap(), vprime_product(&c, &Composition::single(k)));
                }
            }
        }
    }

    #[test]
    fn reconstruction() {
        let terms = alternating_reconstruction(&comp(&[2, 2])).unwrap();
        let summary: Vec<(String, usize, i64)> =
            terms.iter().map(|t| (t.prefix.compact(), t.k, i64::try_from(t.coeff.clone()).unwrap())).collect();
        assert_eq!(summary, vec![("2".into(), 2, 1), ("1".into(), 3, -2), ("()".into(), 4, 3)]);
        assert_eq!(alternating_reconstruction(&comp(&[4])).unwrap().len(), 1);
        for n in 1..=7 {
            for c in compositions(n) {
                assert_eq!(expand_reconstruction(&c).unwrap(), IntComb::basis(c.clone()), "{c}");
            }
        }
    }

    #[test]
    fn printed_products() {
        assert_eq!(
            vprime_product(&comp(&[2]), &comp(&[3, 1])),
            int(&[(&[1, 3, 2], 1), (&[1, 4, 1], 3), (&[2, 3, 1], 1), (&[3, 3], 1), (&[4, 2], 3), (&[5, 1], 6)])
        );
        assert_eq!(
            vprime_product(&comp(&[3, 1]), &comp(&[2])),
            int(&[(&[1, 5], 4), (&[2, 4], 3), (&[3, 1, 2], 1), (&[3, 3], 2), (&[6], 5)])
        );
        assert_eq!(vprime_product(&comp(&[2, 1]), &comp(&[1, 2, 1])).get(&comp(&[2, 1, 3, 1])), BigInt::from(2));
        assert_eq!(
            v_product(&comp(&[1, 1, 2, 1]), &comp(&[1, 1, 1])),
            int(&[
                (&[1, 1, 1, 1, 1, 1, 1, 1], 21),
                (&[1, 1, 2, 1, 1, 1, 1], 6),
                (&[1, 1, 2, 2, 1, 1], 1),
                (&[1, 1, 3, 1, 1, 1], 3),
                (&[1, 2, 1, 1, 1, 1, 1], 10),
                (&[2, 1, 1, 1, 1, 1, 1], 15),
            ])
        );
        assert_eq!(v_product(&comp(&[1]), &comp(&[1])), int(&[(&[1, 1], 1), (&[2], 1)]));
    }

    #[test]
    fn oracle_agrees() {
        for total in 2..=8 {
            for m in 1..total {
                for i in compositions(m) {
                    for j in compositions(total - m) {
                        assert_eq!(
                            vprime_product(&i, &j),
                            vprime_product_oracle(&i, &j, ORACLE_BOUND).unwrap(),
                            "{i} * {j}"
                        );
                    }
                }
            }
        }
        assert_eq!(
            vprime_product_oracle(&comp(&[5]), &comp(&[5]), ORACLE_BOUND),
            Err(Error::DegreeBound { degree: 10, bound: 9 })
        );
        assert_eq!(vprime_product(&Composition::empty(), &comp(&[2])), int(&[(&[2], 1)]));
    }

    #[test]
    fn mass_and_associativity() {
        for m in 1..=4 {
            for n in 1..=4 {
                assert!(StructureConstantTable::compute(m, n).mass_holds());
            }
        }
        let mul = |x: &IntComb, y: &IntComb| x.bilinear(y, vprime_product);
        for a in compositions(2) {
            for b in compositions(2) {
                for c in compositions(3) {
                    let (x, y, z) = (IntComb::basis(a.clone()), IntComb::basis(b.clone()), IntComb::basis(c.clone()));
                    assert_eq!(mul(&mul(&x, &y), &z), mul(&x, &mul(&y, &z)));
                }
            }
        }
    }
}
