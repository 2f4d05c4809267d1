//! Labelled forests viewed as posets, their linear extensions and hook
//! lengths.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_bigint::BigInt;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::composition::Composition;
use crate::error::{Error, Result};
use crate::permutation::Permutation;
use crate::qpoly::QPoly;

/// Which end of a tree comes first in a linear extension.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Orientation {
    /// Every node precedes its children.
    RootFirst,
    /// Every node follows its children.
    RootLast,
}

/// How [`LabeledForest::bw_q_count`] obtained its answer.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CountMethod {
    HookFormula,
    BruteForce,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LabeledForest {
    orientation: Orientation,
    parent: BTreeMap<usize, Option<usize>>,
    children: BTreeMap<usize, Vec<usize>>,
}

#[derive(Serialize, Deserialize)]
struct ForestRepr {
    orientation: Orientation,
    nodes: Vec<NodeRepr>,
}

#[derive(Serialize, Deserialize)]
struct NodeRepr {
    node: usize,
    parent: Option<usize>,
}

impl LabeledForest {
    /// Builds a forest from `(label, parent label)` pairs.
    pub fn from_parents(
        orientation: Orientation,
        pairs: impl IntoIterator<Item = (usize, Option<usize>)>,
    ) -> Result<Self> {
        let mut parent = BTreeMap::new();
        for (label, p) in pairs {
            if parent.insert(label, p).is_some() {
                return Err(Error::InvalidForest(format!("label {label} appears twice")));
            }
        }
        let mut children: BTreeMap<usize, Vec<usize>> = parent.keys().map(|&k| (k, Vec::new())).collect();
        for (&label, p) in &parent {
            if let Some(p) = p {
                children
                    .get_mut(p)
                    .ok_or_else(|| Error::InvalidForest(format!("parent {p} of {label} is not a node")))?
                    .push(label);
            }
        }
        for &label in parent.keys() {
            let mut steps = 0;
            let mut x = label;
            while let Some(Some(p)) = parent.get(&x) {
                x = *p;
                steps += 1;
                if steps > parent.len() {
                    return Err(Error::InvalidForest(format!("cycle through {label}")));
                }
            }
        }
        Ok(LabeledForest { orientation, parent, children })
    }

    pub fn orientation(&self) -> Orientation {
        self.orientation
    }

    pub fn len(&self) -> usize {
        self.parent.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parent.is_empty()
    }

    pub fn labels(&self) -> impl Iterator<Item = usize> + '_ {
        self.parent.keys().copied()
    }

    pub fn parent(&self, label: usize) -> Option<usize> {
        self.parent.get(&label).copied().flatten()
    }

    /// Children in increasing label order.
    pub fn children(&self, label: usize) -> &[usize] {
        self.children.get(&label).map(Vec::as_slice).unwrap_or(&[])
    }

    pub fn roots(&self) -> Vec<usize> {
        self.parent.iter().filter(|(_, p)| p.is_none()).map(|(&l, _)| l).collect()
    }

    /// Labels in the subtree rooted at `label`, including it.
    pub fn subtree(&self, label: usize) -> BTreeSet<usize> {
        let mut out = BTreeSet::new();
        let mut stack = vec![label];
        while let Some(x) = stack.pop() {
            out.insert(x);
            stack.extend_from_slice(self.children(x));
        }
        out
    }

    /// Subtree sizes.
    pub fn hook_lengths(&self) -> BTreeMap<usize, usize> {
        let mut hooks = BTreeMap::new();
        for root in self.roots() {
            self.fill_hooks(root, &mut hooks);
        }
        hooks
    }

    fn fill_hooks(&self, label: usize, hooks: &mut BTreeMap<usize, usize>) -> usize {
        let h = 1 + self.children(label).iter().map(|&c| self.fill_hooks(c, hooks)).sum::<usize>();
        hooks.insert(label, h);
        h
    }

    /// Number of linear extensions, `n! / ∏ hooks`.
    pub fn hook_count(&self) -> BigInt {
        let n = self.len();
        let fact: BigInt = (1..=n).map(BigInt::from).product();
        let prod: BigInt = self.hook_lengths().values().map(|&h| BigInt::from(h)).product();
        fact / prod
    }

    fn check_standard(&self) -> Result<()> {
        let n = self.len();
        if self.labels().eq(1..=n) {
            Ok(())
        } else {
            Err(Error::LabelsNotStandard(n))
        }
    }

    /// All linear extensions in lexicographic order. Labels must be `1..=n`.
    pub fn linear_extensions(&self) -> Result<Vec<Permutation>> {
        self.check_standard()?;
        let mut out = Vec::new();
        let mut pending = self.initial_pending();
        let mut word = Vec::with_capacity(self.len());
        self.extend(&mut pending, &mut word, &mut out);
        Ok(out)
    }

    /// For each node, how many nodes must still be placed before it.
    fn initial_pending(&self) -> BTreeMap<usize, usize> {
        self.parent
            .iter()
            .map(|(&l, p)| {
                let k = match self.orientation {
                    Orientation::RootFirst => usize::from(p.is_some()),
                    Orientation::RootLast => self.children(l).len(),
                };
                (l, k)
            })
            .collect()
    }

    /// Nodes released by placing `label`.
    fn released(&self, label: usize) -> Vec<usize> {
        match self.orientation {
            Orientation::RootFirst => self.children(label).to_vec(),
            Orientation::RootLast => self.parent(label).into_iter().collect(),
        }
    }

    fn extend(&self, pending: &mut BTreeMap<usize, usize>, word: &mut Vec<usize>, out: &mut Vec<Permutation>) {
        if word.len() == self.len() {
            out.push(Permutation::new(word.clone()).expect("labels are 1..=n"));
            return;
        }
        let ready: Vec<usize> = pending.iter().filter(|(_, &k)| k == 0).map(|(&l, _)| l).collect();
        for label in ready {
            pending.remove(&label);
            let released = self.released(label);
            for r in &released {
                *pending.get_mut(r).expect("released node is pending") -= 1;
            }
            word.push(label);
            self.extend(pending, word, out);
            word.pop();
            for r in &released {
                *pending.get_mut(r).expect("released node is pending") += 1;
            }
            pending.insert(label, 0);
        }
    }

    /// The lexicographically smallest linear extension: always place the
    /// smallest available label.
    pub fn minimal_extension(&self) -> Result<Permutation> {
        self.check_standard()?;
        let mut pending = self.initial_pending();
        let mut word = Vec::with_capacity(self.len());
        while let Some(label) = pending.iter().find(|(_, &k)| k == 0).map(|(&l, _)| l) {
            pending.remove(&label);
            for r in self.released(label) {
                *pending.get_mut(&r).expect("released node is pending") -= 1;
            }
            word.push(label);
        }
        Permutation::new(word)
    }

    /// Every subtree carries an interval of labels.
    pub fn is_recursive(&self) -> bool {
        self.labels().all(|l| {
            let s = self.subtree(l);
            let lo = *s.first().expect("nonempty");
            let hi = *s.last().expect("nonempty");
            hi - lo + 1 == s.len()
        })
    }

    /// `Σ q^{inv(w)}` over the linear extensions `w`.
    ///
    /// Recursively labelled forests use the q-hook-length formula
    /// `q^{inv(min)} [n]_q! / ∏ [h_v]_q`; anything else is enumerated.
    pub fn bw_q_count(&self) -> Result<(QPoly, CountMethod)> {
        self.check_standard()?;
        if self.is_recursive() {
            let min = self.minimal_extension()?;
            let den = self.hook_lengths().values().fold(QPoly::one(), |acc, &h| &acc * &QPoly::q_int(h));
            let quot = QPoly::q_factorial(self.len())
                .div_exact(&den)
                .ok_or_else(|| Error::NotIntegral("q-hook quotient".into()))?;
            Ok((quot.shift(min.inversions()), CountMethod::HookFormula))
        } else {
            Ok((self.brute_q_count()?, CountMethod::BruteForce))
        }
    }

    /// `Σ q^{inv(w)}` by enumerating the extensions.
    pub fn brute_q_count(&self) -> Result<QPoly> {
        let mut coeffs: Vec<BigInt> = Vec::new();
        for w in self.linear_extensions()? {
            let k = w.inversions();
            if coeffs.len() <= k {
                coeffs.resize(k + 1, BigInt::default());
            }
            coeffs[k] += 1;
        }
        Ok(QPoly::from_coeffs(coeffs))
    }

    /// Canonical code of the unlabelled shape; equal codes mean isomorphic
    /// forests.
    pub fn shape_code(&self) -> String {
        let mut codes: Vec<String> = self.roots().into_iter().map(|r| self.node_code(r)).collect();
        codes.sort();
        codes.concat()
    }

    fn node_code(&self, label: usize) -> String {
        let mut codes: Vec<String> = self.children(label).iter().map(|&c| self.node_code(c)).collect();
        codes.sort();
        format!("({})", codes.concat())
    }

    /// Pairs of nodes matched by a shape isomorphism onto `other`, or `None`
    /// when the shapes differ. Siblings with equal shape codes are matched
    /// in increasing label order.
    pub fn isomorphism_to(&self, other: &LabeledForest) -> Option<BTreeMap<usize, usize>> {
        fn sorted_by_code(f: &LabeledForest, nodes: &[usize]) -> Vec<(String, usize)> {
            let mut v: Vec<(String, usize)> = nodes.iter().map(|&n| (f.node_code(n), n)).collect();
            v.sort();
            v
        }
        fn walk(
            a: &LabeledForest,
            b: &LabeledForest,
            xs: &[usize],
            ys: &[usize],
            map: &mut BTreeMap<usize, usize>,
        ) -> bool {
            let xs = sorted_by_code(a, xs);
            let ys = sorted_by_code(b, ys);
            if xs.len() != ys.len() {
                return false;
            }
            for ((cx, x), (cy, y)) in xs.iter().zip(&ys) {
                if cx != cy {
                    return false;
                }
                map.insert(*x, *y);
                if !walk(a, b, a.children(*x), b.children(*y), map) {
                    return false;
                }
            }
            true
        }
        let mut map = BTreeMap::new();
        walk(self, other, &self.roots(), &other.roots(), &mut map).then_some(map)
    }

    /// Relabels every node through `f`, keeping the shape.
    pub fn relabeled(&self, f: impl Fn(usize) -> usize) -> Result<LabeledForest> {
        LabeledForest::from_parents(self.orientation, self.parent.iter().map(|(&l, p)| (f(l), p.map(&f))))
    }

    /// `label(child child ...)` per root, roots separated by spaces.
    pub fn parenthesized(&self) -> String {
        let roots: Vec<String> = self.roots().into_iter().map(|r| self.node_string(r)).collect();
        roots.join(" ")
    }

    fn node_string(&self, label: usize) -> String {
        let kids = self.children(label);
        if kids.is_empty() {
            label.to_string()
        } else {
            let inner: Vec<String> = kids.iter().map(|&c| self.node_string(c)).collect();
            format!("{label}({})", inner.join(" "))
        }
    }
}

impl fmt::Display for LabeledForest {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.parenthesized())
    }
}

impl Serialize for LabeledForest {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        ForestRepr {
            orientation: self.orientation,
            nodes: self.parent.iter().map(|(&node, &parent)| NodeRepr { node, parent }).collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for LabeledForest {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let repr = ForestRepr::deserialize(d)?;
        LabeledForest::from_parents(repr.orientation, repr.nodes.into_iter().map(|n| (n.node, n.parent)))
            .map_err(serde::de::Error::custom)
    }
}

/// The comb poset whose linear extensions are the inverses of the
/// permutations with saillance composition `comp`.
///
/// With `b_j` the first label of block `j`, node `b_j` has children
/// `b_{j-1}` and `b_j + 1, ..., s_j`; the root is `b_r` and children come
/// before their parent.
pub fn comb_poset(comp: &Composition) -> Result<LabeledForest> {
    if comp.is_empty() {
        return Err(Error::EmptyComposition);
    }
    let mut pairs = Vec::with_capacity(comp.weight());
    let mut start = 1;
    let sums = comp.partial_sums();
    for (j, &s) in sums.iter().enumerate() {
        let next_start = sums.get(j + 1).map(|_| s + 1);
        pairs.push((start, next_start));
        for leaf in start + 1..=s {
            pairs.push((leaf, Some(start)));
        }
        start = s + 1;
    }
    LabeledForest::from_parents(Orientation::RootLast, pairs)
}

/// `2 ... i_1 1 (i_1 + 2) ... (i_1 + i_2) (i_1 + 1) ...`, the smallest
/// linear extension of [`comb_poset`].
pub fn minimal_extension(comp: &Composition) -> Result<Permutation> {
    if comp.is_empty() {
        return Err(Error::EmptyComposition);
    }
    let mut word = Vec::with_capacity(comp.weight());
    let mut prev = 0;
    for s in comp.partial_sums() {
        word.extend(prev + 2..=s);
        word.push(prev + 1);
        prev = s;
    }
    Permutation::new(word)
}
