//! Pattern-replacement equivalences on permutations and their insertion
//! algorithms.

use std::collections::{BTreeMap, BTreeSet, HashMap, VecDeque};
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::forest::{LabeledForest, Orientation};
use crate::permutation::{standardize, Permutation};

/// Largest size accepted by the breadth-first class enumeration.
pub const BFS_BOUND: usize = 8;
/// Largest size accepted by the chain enumeration of classes.
pub const CHAIN_BOUND: usize = 12;

/// The three relations studied here.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Relation {
    /// `cab ≡ cba`, `abc ≡ acb`
    Eq1,
    /// `bac ≡ bca`, `abc ≡ acb`
    Eq2,
    /// `321 ≡ 231`, `312 ≡ 132`, the reversal of `Eq2`
    Mirror,
}

impl Relation {
    pub fn name(self) -> &'static str {
        match self {
            Relation::Eq1 => "eq1",
            Relation::Eq2 => "eq2",
            Relation::Mirror => "mirror",
        }
    }

    pub fn patterns(self) -> PatternRelation {
        let pairs: &[([usize; 3], [usize; 3])] = match self {
            Relation::Eq1 => &[([3, 1, 2], [3, 2, 1]), ([1, 2, 3], [1, 3, 2])],
            Relation::Eq2 => &[([2, 1, 3], [2, 3, 1]), ([1, 2, 3], [1, 3, 2])],
            Relation::Mirror => &[([3, 2, 1], [2, 3, 1]), ([3, 1, 2], [1, 3, 2])],
        };
        PatternRelation::new(pairs.to_vec()).expect("built-in relations are valid")
    }
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Relation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "eq1" => Ok(Relation::Eq1),
            "eq2" => Ok(Relation::Eq2),
            "mirror" => Ok(Relation::Mirror),
            _ => Err(Error::Parse(format!("unknown relation {s:?}; expected eq1, eq2 or mirror"))),
        }
    }
}

/// Pairs of size-3 patterns; two permutations are related when one is
/// obtained from the other by rearranging the letters of an occurrence of
/// one pattern of a pair into the other. Occurrences are factors: three
/// adjacent letters.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PatternRelation {
    pairs: Vec<([usize; 3], [usize; 3])>,
}

impl PatternRelation {
    pub fn new(pairs: Vec<([usize; 3], [usize; 3])>) -> Result<Self> {
        for (a, b) in &pairs {
            for p in [a, b] {
                let mut s = *p;
                s.sort_unstable();
                if s != [1, 2, 3] {
                    return Err(Error::InvalidPermutation(format!("{p:?} is not a pattern of size 3")));
                }
            }
            if a == b {
                return Err(Error::InvalidPermutation(format!("pair {a:?} is trivial")));
            }
        }
        Ok(PatternRelation { pairs })
    }

    pub fn pairs(&self) -> &[([usize; 3], [usize; 3])] {
        &self.pairs
    }

    /// Every permutation reachable from `sigma` by one replacement.
    pub fn neighbours(&self, sigma: &Permutation) -> Vec<Permutation> {
        let w = sigma.word();
        let n = w.len();
        let mut out = Vec::new();
        for i in 0..n.saturating_sub(2) {
            let (j, k) = (i + 1, i + 2);
            {
                {
                    let letters = [w[i], w[j], w[k]];
                    let pattern = standardize(&letters);
                    let pattern: [usize; 3] = pattern.word().try_into().expect("three letters");
                    let mut sorted = letters;
                    sorted.sort_unstable();
                    for (a, b) in &self.pairs {
                        let target = if pattern == *a {
                            b
                        } else if pattern == *b {
                            a
                        } else {
                            continue;
                        };
                        let mut next = w.to_vec();
                        next[i] = sorted[target[0] - 1];
                        next[j] = sorted[target[1] - 1];
                        next[k] = sorted[target[2] - 1];
                        out.push(Permutation::new(next).expect("rearranged permutation"));
                    }
                }
            }
        }
        out
    }

    /// The class of `sigma`, by breadth-first search.
    pub fn closure(&self, sigma: &Permutation) -> BTreeSet<Permutation> {
        let mut seen = BTreeSet::from([sigma.clone()]);
        let mut queue = VecDeque::from([sigma.clone()]);
        while let Some(x) = queue.pop_front() {
            for y in self.neighbours(&x) {
                if seen.insert(y.clone()) {
                    queue.push_back(y);
                }
            }
        }
        seen
    }
}

pub fn pattern_closure(sigma: &Permutation, relation: Relation) -> BTreeSet<Permutation> {
    relation.patterns().closure(sigma)
}

/// Positions (1-based) of the W-chain. The last one is the position of
/// whichever of `1` and `n` is rightmost; each earlier one is the position
/// of the other extremum of the prefix ending at the next, down to
/// position 1.
pub fn w_chain(sigma: &Permutation) -> Vec<usize> {
    let w = sigma.word();
    let n = w.len();
    if n == 0 {
        return Vec::new();
    }
    let pos = sigma.positions();
    let mut chain = vec![pos[0].max(pos[n - 1])];
    loop {
        let end = *chain.last().expect("nonempty");
        if end == 1 {
            break;
        }
        let prefix = &w[..end];
        let (min_at, _) = prefix.iter().enumerate().min_by_key(|(_, &v)| v).expect("nonempty");
        let (max_at, _) = prefix.iter().enumerate().max_by_key(|(_, &v)| v).expect("nonempty");
        let other = if min_at + 1 == end { max_at } else { min_at };
        chain.push(other + 1);
    }
    chain.reverse();
    chain
}

/// A value forest and the position forest of the same shape.
/// `correspondence` sends each node of `p` to its node in `q`; the trees
/// alone do not fix it when the shape has symmetries.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InsertionPair {
    pub p: LabeledForest,
    pub q: LabeledForest,
    #[serde(with = "pair_list")]
    pub correspondence: BTreeMap<usize, usize>,
}

/// Integer-keyed maps as `[[key, value], ...]`; JSON object keys would be
/// strings and do not survive a tagged enum.
mod pair_list {
    use std::collections::BTreeMap;

    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(map: &BTreeMap<usize, usize>, s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(map.iter().map(|(k, v)| [*k, *v]))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BTreeMap<usize, usize>, D::Error> {
        let pairs = Vec::<[usize; 2]>::deserialize(d)?;
        Ok(pairs.into_iter().map(|[k, v]| (k, v)).collect())
    }
}

impl InsertionPair {
    fn new(p: LabeledForest, q: LabeledForest, sigma: &Permutation) -> Self {
        let correspondence = sigma.word().iter().enumerate().map(|(i, &v)| (v, i + 1)).collect();
        InsertionPair { p, q, correspondence }
    }

    /// The permutation the pair was built from.
    pub fn permutation(&self) -> Result<Permutation> {
        let mut word = vec![0; self.correspondence.len()];
        for (&v, &pos) in &self.correspondence {
            let slot =
                word.get_mut(pos - 1).ok_or_else(|| Error::InvalidForest(format!("position {pos} out of range")))?;
            *slot = v;
        }
        Permutation::new(word)
    }
}

/// Chain (top to bottom) with the other values of `1..=n` hung as leaves
/// by the rule of the relation.
fn chain_forest(chain: &[usize], n: usize, relation: Relation) -> Result<LabeledForest> {
    let on_chain: BTreeSet<usize> = chain.iter().copied().collect();
    let mut pairs: Vec<(usize, Option<usize>)> =
        chain.iter().enumerate().map(|(i, &v)| (v, i.checked_sub(1).map(|j| chain[j]))).collect();
    for v in (1..=n).filter(|v| !on_chain.contains(v)) {
        let parent = match relation {
            Relation::Eq1 => chain.windows(2).find(|w| w[0].min(w[1]) < v && v < w[0].max(w[1])).map(|w| w[0]),
            Relation::Eq2 | Relation::Mirror => chain.iter().copied().find(|&c| c < v),
        }
        .ok_or_else(|| Error::InvalidForest(format!("no chain node accepts {v}")))?;
        pairs.push((v, Some(parent)));
    }
    LabeledForest::from_parents(Orientation::RootFirst, pairs)
}

fn position_forest(p: &LabeledForest, sigma: &Permutation) -> Result<LabeledForest> {
    let pos = sigma.positions();
    p.relabeled(|v| pos[v - 1])
}

/// `P(σ)`: the W-chain values with every other value hung under the
/// topmost chain node `σ_{s_i}` whose interval to `σ_{s_{i+1}}` contains it.
pub fn insert_p(sigma: &Permutation) -> Result<LabeledForest> {
    let chain: Vec<usize> = w_chain(sigma).into_iter().map(|s| sigma.word()[s - 1]).collect();
    chain_forest(&chain, sigma.len(), Relation::Eq1)
}

/// `Q(σ)`: `P(σ)` with each value replaced by its position.
pub fn insert_q(sigma: &Permutation) -> Result<LabeledForest> {
    position_forest(&insert_p(sigma)?, sigma)
}

/// `P_2(σ)`: the left-to-right minima values as a chain, every other value
/// hung under the topmost chain node smaller than it.
pub fn insert_p2(sigma: &Permutation) -> Result<LabeledForest> {
    chain_forest(&sigma.ltr_minima_values(), sigma.len(), Relation::Eq2)
}

/// `Q_2(σ)`: `P_2(σ)` with each value replaced by its position.
pub fn insert_q2(sigma: &Permutation) -> Result<LabeledForest> {
    position_forest(&insert_p2(sigma)?, sigma)
}

fn reversed(sigma: &Permutation) -> Permutation {
    Permutation::new(sigma.word().iter().rev().copied().collect()).expect("reversal")
}

fn flip(forest: &LabeledForest, relabel: impl Fn(usize) -> usize) -> Result<LabeledForest> {
    let pairs: Vec<(usize, Option<usize>)> =
        forest.labels().map(|l| (relabel(l), forest.parent(l).map(&relabel))).collect();
    LabeledForest::from_parents(Orientation::RootLast, pairs)
}

/// Insertion for the relation of `relation`. The mirror relation is the
/// reversal of `Eq2`, so its symbols are those of the reversed word, read
/// from the leaves up.
pub fn insert(sigma: &Permutation, relation: Relation) -> Result<InsertionPair> {
    match relation {
        Relation::Eq1 => Ok(InsertionPair::new(insert_p(sigma)?, insert_q(sigma)?, sigma)),
        Relation::Eq2 => Ok(InsertionPair::new(insert_p2(sigma)?, insert_q2(sigma)?, sigma)),
        Relation::Mirror => {
            let r = reversed(sigma);
            let n = sigma.len();
            Ok(InsertionPair::new(flip(&insert_p2(&r)?, |v| v)?, flip(&insert_q2(&r)?, |pos| n + 1 - pos)?, sigma))
        }
    }
}

/// Rewrites occurrences of `acb` into `abc` and `bca` into `bac` until
/// none is left. The result is the smallest element of the `Eq2` class.
pub fn v_permutation(sigma: &Permutation) -> Permutation {
    let mut w = sigma.word().to_vec();
    let n = w.len();
    'outer: loop {
        for i in 0..n {
            for j in i + 1..n {
                for k in j + 1..n {
                    let (x, y, z) = (w[i], w[j], w[k]);
                    if x < z && z < y {
                        // acb -> abc
                        w[j] = z;
                        w[k] = y;
                        continue 'outer;
                    }
                    if z < x && x < y {
                        // bca -> bac
                        w[j] = z;
                        w[k] = y;
                        continue 'outer;
                    }
                }
            }
        }
        break;
    }
    Permutation::new(w).expect("rearranged permutation")
}

/// One equivalence class: its smallest element and its size.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct ClassInfo {
    pub min: Permutation,
    pub size: BigInt,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Census {
    pub n: usize,
    pub relation: Relation,
    /// Sorted by smallest element.
    pub classes: Vec<ClassInfo>,
}

impl Census {
    pub fn count(&self) -> usize {
        self.classes.len()
    }

    /// Class size ↦ number of classes of that size.
    pub fn size_multiset(&self) -> BTreeMap<BigInt, usize> {
        let mut out = BTreeMap::new();
        for c in &self.classes {
            *out.entry(c.size.clone()).or_default() += 1;
        }
        out
    }
}

/// Class id of every permutation of size `n`, ids numbered by increasing
/// smallest element, found by breadth-first search.
pub fn partition_bfs(n: usize, relation: Relation) -> Result<HashMap<Permutation, usize>> {
    if n > BFS_BOUND {
        return Err(Error::DegreeBound { degree: n, bound: BFS_BOUND });
    }
    let rel = relation.patterns();
    let mut ids = HashMap::new();
    let mut next = 0;
    for s in Permutation::iter_all(n) {
        if ids.contains_key(&s) {
            continue;
        }
        for x in rel.closure(&s) {
            ids.insert(x, next);
        }
        next += 1;
    }
    Ok(ids)
}

/// Classes found by breadth-first search (`n ≤ 8`).
pub fn class_census_bfs(n: usize, relation: Relation) -> Result<Census> {
    let ids = partition_bfs(n, relation)?;
    let mut classes: BTreeMap<usize, ClassInfo> = BTreeMap::new();
    for (s, id) in ids {
        let entry = classes.entry(id).or_insert_with(|| ClassInfo { min: s.clone(), size: BigInt::default() });
        entry.size += 1;
        if s < entry.min {
            entry.min = s;
        }
    }
    let mut classes: Vec<ClassInfo> = classes.into_values().collect();
    classes.sort();
    Ok(Census { n, relation, classes })
}

/// A class described by its chain: the forest whose linear extensions are
/// the class.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainClass {
    pub chain: Vec<usize>,
    pub forest: LabeledForest,
}

impl ChainClass {
    pub fn size(&self) -> BigInt {
        self.forest.hook_count()
    }

    pub fn min(&self) -> Permutation {
        self.forest.minimal_extension().expect("labels are 1..=n")
    }
}

/// Every chain that can occur for `Eq1`: a set containing `1` and `n`,
/// ordered from the bottom (`1` or `n`) upwards by alternately taking the
/// remaining maximum and minimum. Returned top to bottom.
fn eq1_chains(n: usize) -> Vec<Vec<usize>> {
    if n == 1 {
        return vec![vec![1]];
    }
    let middle: Vec<usize> = (2..n).collect();
    let mut out = Vec::new();
    for mask in 0..1usize << middle.len() {
        let mut set: VecDeque<usize> = std::iter::once(1)
            .chain(middle.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &v)| v))
            .chain(std::iter::once(n))
            .collect();
        for bottom_is_one in [true, false] {
            let mut rest = set.clone();
            let mut bottom_up = Vec::with_capacity(rest.len());
            let mut take_min = bottom_is_one;
            while !rest.is_empty() {
                let v = if take_min { rest.pop_front() } else { rest.pop_back() };
                bottom_up.push(v.expect("nonempty"));
                take_min = !take_min;
            }
            bottom_up.reverse();
            out.push(bottom_up);
        }
        set.clear();
    }
    out
}

/// Every decreasing sequence ending in `1`: the possible left-to-right
/// minima.
fn lrm_chains(n: usize) -> Vec<Vec<usize>> {
    let others: Vec<usize> = (2..=n).collect();
    (0..1usize << others.len())
        .map(|mask| {
            let mut chain: Vec<usize> =
                others.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &v)| v).collect();
            chain.reverse();
            chain.push(1);
            chain
        })
        .collect()
}

/// All classes of one relation, one per possible chain (`n ≤ 12`).
pub fn chain_classes(n: usize, relation: Relation) -> Result<Vec<ChainClass>> {
    if n == 0 {
        return Err(Error::ZeroDegree);
    }
    if n > CHAIN_BOUND {
        return Err(Error::DegreeBound { degree: n, bound: CHAIN_BOUND });
    }
    match relation {
        Relation::Eq1 => eq1_chains(n)
            .into_iter()
            .map(|chain| {
                let forest = chain_forest(&chain, n, Relation::Eq1)?;
                Ok(ChainClass { chain, forest })
            })
            .collect(),
        Relation::Eq2 => lrm_chains(n)
            .into_iter()
            .map(|chain| {
                let forest = chain_forest(&chain, n, Relation::Eq2)?;
                Ok(ChainClass { chain, forest })
            })
            .collect(),
        Relation::Mirror => lrm_chains(n)
            .into_iter()
            .map(|chain| {
                let forest = flip(&chain_forest(&chain, n, Relation::Eq2)?, |v| v)?;
                Ok(ChainClass { chain, forest })
            })
            .collect(),
    }
}

/// Classes from the chain enumeration, each checked to be consistent: its
/// smallest element has the chain it was built from, and the class sizes
/// add up to `n!`.
pub fn class_census_chain(n: usize, relation: Relation) -> Result<Census> {
    let mut classes = Vec::new();
    let mut total = BigInt::default();
    for c in chain_classes(n, relation)? {
        let min = c.min();
        let chain: Vec<usize> = match relation {
            Relation::Eq1 => w_chain(&min).into_iter().map(|s| min.word()[s - 1]).collect(),
            Relation::Eq2 => min.ltr_minima_values(),
            Relation::Mirror => reversed(&min).ltr_minima_values(),
        };
        if chain != c.chain {
            return Err(Error::InvalidForest(format!("class of {min} does not reproduce its chain")));
        }
        let size = c.size();
        total += &size;
        classes.push(ClassInfo { min, size });
    }
    let fact: BigInt = (1..=n).map(BigInt::from).product();
    if total != fact {
        return Err(Error::InvalidForest(format!("class sizes sum to {total}, not {n}!")));
    }
    classes.sort();
    Ok(Census { n, relation, classes })
}

/// Number of `Eq1` classes whose elements begin with `k`, for each `k`.
pub fn classes_by_first_letter(n: usize) -> Result<BTreeMap<usize, usize>> {
    let mut out: BTreeMap<usize, usize> = (1..=n).map(|k| (k, 0)).collect();
    for c in chain_classes(n, Relation::Eq1)? {
        *out.get_mut(&c.chain[0]).expect("letter of 1..=n") += 1;
    }
    Ok(out)
}

/// Pairing of `Eq1` classes with `Eq2` classes of the same shape.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassBijection {
    pub n: usize,
    /// (Eq1 class, Eq2 class), sorted by the Eq1 class minimum.
    pub pairs: Vec<(ChainClass, ChainClass)>,
}

/// Whether `1` sits directly below `n` at the bottom of an `Eq1` chain.
fn one_below_n(c: &ChainClass) -> bool {
    c.chain.last() == Some(&1)
}

/// Whether `1` sits directly below `2` at the bottom of an `Eq2` chain.
fn one_below_two(c: &ChainClass) -> bool {
    c.chain.len() >= 2 && c.chain[c.chain.len() - 2] == 2
}

/// Matches classes of `Eq1` and `Eq2` with the same naked poset: each shape
/// carries exactly two classes on each side, and the `Eq1` class with `1`
/// at the bottom of its chain goes to the `Eq2` class with `2` directly
/// above `1`.
pub fn class_bijection(n: usize) -> Result<ClassBijection> {
    let mut by_shape: BTreeMap<String, (Vec<ChainClass>, Vec<ChainClass>)> = BTreeMap::new();
    for c in chain_classes(n, Relation::Eq1)? {
        by_shape.entry(c.forest.shape_code()).or_default().0.push(c);
    }
    for c in chain_classes(n, Relation::Eq2)? {
        by_shape.entry(c.forest.shape_code()).or_default().1.push(c);
    }
    let mut pairs = Vec::new();
    for (shape, (left, right)) in by_shape {
        let expected = if n == 1 { 1 } else { 2 };
        if left.len() != expected || right.len() != expected {
            return Err(Error::InvalidForest(format!(
                "shape {shape} carries {} and {} classes",
                left.len(),
                right.len()
            )));
        }
        if n == 1 {
            pairs.push((left[0].clone(), right[0].clone()));
            continue;
        }
        let (l_low, l_high) = if one_below_n(&left[0]) { (0, 1) } else { (1, 0) };
        let (r_low, r_high) = if one_below_two(&right[0]) { (0, 1) } else { (1, 0) };
        if !one_below_n(&left[l_low])
            || one_below_n(&left[l_high])
            || !one_below_two(&right[r_low])
            || one_below_two(&right[r_high])
        {
            return Err(Error::InvalidForest(format!("shape {shape} is not labelled both ways")));
        }
        pairs.push((left[l_low].clone(), right[r_low].clone()));
        pairs.push((left[l_high].clone(), right[r_high].clone()));
    }
    pairs.sort_by_key(|(l, _)| l.min());
    Ok(ClassBijection { n, pairs })
}

impl ClassBijection {
    /// Image of `sigma`: the element of the paired `Eq2` class whose
    /// position symbol is that of `sigma`, carried across the shape
    /// isomorphism.
    pub fn image(&self, sigma: &Permutation) -> Result<Permutation> {
        let p = insert_p(sigma)?;
        let (_, target) = self
            .pairs
            .iter()
            .find(|(l, _)| l.forest == p)
            .ok_or_else(|| Error::InvalidPermutation(format!("{sigma} has size other than {}", self.n)))?;
        let iso =
            p.isomorphism_to(&target.forest).ok_or_else(|| Error::InvalidForest("paired shapes differ".into()))?;
        let mut word = vec![0; sigma.len()];
        for (i, &v) in sigma.word().iter().enumerate() {
            word[i] = iso[&v];
        }
        Permutation::new(word)
    }
}

/// Whether `SC(σ) = SC(τ)` exactly when `σ^{-1}` and `τ^{-1}` are related
/// by the mirror relation, over `S_n`.
pub fn saillance_correspondence_check(n: usize) -> Result<bool> {
    let ids = partition_bfs(n, Relation::Mirror)?;
    Ok(same_partition(Permutation::iter_all(n).map(|s| {
        let id = ids[&s.inverse()];
        (s.saillance_composition(), id)
    })))
}

/// The same check without inverses; it fails from `n = 3` on.
pub fn saillance_correspondence_literal_check(n: usize) -> Result<bool> {
    let ids = partition_bfs(n, Relation::Mirror)?;
    Ok(same_partition(Permutation::iter_all(n).map(|s| {
        let id = ids[&s];
        (s.saillance_composition(), id)
    })))
}

/// Whether two labelings of the same items induce the same partition.
fn same_partition<A: Ord, B: Ord + Clone>(items: impl Iterator<Item = (A, B)>) -> bool {
    let mut forward: BTreeMap<A, B> = BTreeMap::new();
    let mut backward: BTreeSet<B> = BTreeSet::new();
    for (a, b) in items {
        match forward.get(&a) {
            Some(existing) if *existing != b => return false,
            Some(_) => {}
            None => {
                if !backward.insert(b.clone()) {
                    return false;
                }
                forward.insert(a, b);
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_integer::binomial;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    fn set(words: &[&str]) -> BTreeSet<Permutation> {
        words.iter().map(|w| p(w)).collect()
    }

    #[test]
    fn closures() {
        assert_eq!(pattern_closure(&p("321"), Relation::Eq1), set(&["312", "321"]));
        assert_eq!(pattern_closure(&p("213"), Relation::Eq2), set(&["213", "231"]));
        assert_eq!(pattern_closure(&p("123"), Relation::Eq1), set(&["123", "132"]));
        assert!(PatternRelation::new(vec![([1, 2, 2], [1, 2, 3])]).is_err());
    }

    #[test]
    fn chains() {
        let s = p("532498617");
        assert_eq!(w_chain(&s), vec![1, 3, 5, 8]);
        assert_eq!(w_chain(&p("321")), vec![1, 3]);
        assert_eq!(w_chain(&p("1")), vec![1]);
    }

    #[test]
    fn insertion_examples() {
        let s = p("532498617");
        let pp = insert_p(&s).unwrap();
        assert_eq!(pp.parenthesized(), "5(2(6 7 8 9(1)) 3 4)");
        let q = insert_q(&s).unwrap();
        assert_eq!(q.parenthesized(), "1(2 3(5(8) 6 7 9) 4)");
        assert_eq!(pp.hook_count(), BigInt::from(3360));
        let hooks = pp.hook_lengths();
        assert_eq!((hooks[&5], hooks[&2], hooks[&9], hooks[&1]), (9, 6, 2, 1));

        let t = p("739465281");
        assert_eq!(insert_p2(&t).unwrap().parenthesized(), "7(3(2(1) 4 5 6) 8 9)");
        assert_eq!(insert_q2(&t).unwrap().parenthesized(), "1(2(4 5 6 7(9)) 3 8)");
        assert_eq!(insert_p2(&p("231")).unwrap().parenthesized(), "2(1 3)");
        assert_eq!(insert_p2(&p("1234")).unwrap().parenthesized(), "1(2 3 4)");
        assert_eq!(insert_p(&p("1")).unwrap().parenthesized(), "1");
    }

    #[test]
    fn extensions_are_classes() {
        for n in 1..=6 {
            for relation in [Relation::Eq1, Relation::Eq2, Relation::Mirror] {
                for s in Permutation::iter_all(n) {
                    let pair = insert(&s, relation).unwrap();
                    let ext: BTreeSet<Permutation> = pair.p.linear_extensions().unwrap().into_iter().collect();
                    assert_eq!(ext, pattern_closure(&s, relation), "{s} {relation}");
                    assert_eq!(pair.p.hook_count(), BigInt::from(ext.len()));
                    assert_eq!(pair.p.shape_code(), pair.q.shape_code());
                    assert_eq!(pair.permutation().unwrap(), s);
                    for (v, pos) in &pair.correspondence {
                        let up = pair.p.parent(*v).map(|u| pair.correspondence[&u]);
                        assert_eq!(up, pair.q.parent(*pos));
                    }
                }
            }
        }
    }

    #[test]
    fn position_symbols_are_increasing() {
        for s in Permutation::iter_all(6) {
            for q in [insert_q(&s).unwrap(), insert_q2(&s).unwrap()] {
                assert!(q.labels().all(|l| q.parent(l).is_none_or(|par| par < l)));
            }
        }
    }

    #[test]
    fn censuses() {
        assert_eq!(class_census_bfs(1, Relation::Eq1).unwrap().count(), 1);
        let c3 = class_census_bfs(3, Relation::Eq1).unwrap();
        let sizes: Vec<i64> = c3.classes.iter().map(|c| i64::try_from(c.size.clone()).unwrap()).collect();
        assert_eq!(sizes, vec![2, 1, 1, 2]);
        for n in 1..=7 {
            let mut multisets = Vec::new();
            for relation in [Relation::Eq1, Relation::Eq2, Relation::Mirror] {
                let bfs = class_census_bfs(n, relation).unwrap();
                assert_eq!(bfs.count(), 1 << (n - 1));
                assert_eq!(bfs, class_census_chain(n, relation).unwrap());
                multisets.push(bfs.size_multiset());
            }
            assert_eq!(multisets[0], multisets[1]);
            assert_eq!(multisets[1], multisets[2]);
        }
        assert_eq!(class_census_bfs(9, Relation::Eq1), Err(Error::DegreeBound { degree: 9, bound: 8 }));
        let c9 = class_census_chain(9, Relation::Eq1).unwrap();
        assert_eq!(c9.count(), 256);
        let class = pattern_closure(&p("123"), Relation::Eq1);
        assert_eq!(class.len(), 2);
    }

    #[test]
    fn first_letters() {
        assert_eq!(classes_by_first_letter(3).unwrap(), BTreeMap::from([(1, 1), (2, 2), (3, 1)]));
        for n in 1..=10 {
            let counts = classes_by_first_letter(n).unwrap();
            for (k, c) in counts {
                assert_eq!(c, binomial(n - 1, k - 1));
            }
        }
        assert_eq!(classes_by_first_letter(8).unwrap()[&4], 35);
    }

    #[test]
    fn v_permutations() {
        assert_eq!(v_permutation(&p("231")), p("213"));
        assert_eq!(v_permutation(&Permutation::identity(5)), Permutation::identity(5));
        let s = p("739465281");
        assert_eq!(&v_permutation(&s), pattern_closure(&s, Relation::Eq2).first().unwrap());
        for s in Permutation::iter_all(6) {
            assert_eq!(&v_permutation(&s), pattern_closure(&s, Relation::Eq2).first().unwrap());
        }
    }

    #[test]
    fn bijection() {
        let b = class_bijection(3).unwrap();
        let mins: Vec<(String, String)> =
            b.pairs.iter().map(|(l, r)| (l.min().to_string(), r.min().to_string())).collect();
        assert!(mins.contains(&("312".to_string(), "213".to_string())));
        for n in 1..=6 {
            let b = class_bijection(n).unwrap();
            assert_eq!(b.pairs.len(), 1 << (n - 1));
            for (l, r) in &b.pairs {
                assert_eq!(l.size(), r.size());
            }
            let images: BTreeSet<Permutation> = Permutation::iter_all(n).map(|s| b.image(&s).unwrap()).collect();
            assert_eq!(images.len(), (1..=n).product::<usize>());
            for s in Permutation::iter_all(n) {
                let t = b.image(&s).unwrap();
                assert_eq!(insert_q(&s).unwrap().shape_code(), insert_q2(&t).unwrap().shape_code());
            }
        }
    }

    #[test]
    fn saillance_correspondence() {
        for n in 1..=6 {
            assert!(saillance_correspondence_check(n).unwrap(), "n = {n}");
        }
        assert!(saillance_correspondence_literal_check(2).unwrap());
        assert!(!saillance_correspondence_literal_check(3).unwrap());
    }
}
