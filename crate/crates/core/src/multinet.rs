//! Multinets: axiom checking, construction from a base locus through
//! `Q(X)`, exhaustive discovery, refinement of weak multinets and exponents.

use std::collections::HashSet;
use std::fmt;

use itertools::Itertools;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;
use rayon::prelude::*;
use thiserror::Error;

use crate::arrangement::{IncidenceLattice, MultiArrangement};
use crate::cartan::{decompose, CartanError, VinbergType};

/// Default bound on the number of candidate base loci visited by
/// [`discover`].
pub const DEFAULT_CAP: u128 = 1 << 22;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Axiom {
    /// Well-formed partition into at least three classes.
    Partition,
    /// (i) equal class degrees.
    ClassDegree,
    /// (ii) lines of different classes meet in `X`.
    BaseLocus,
    /// (iii) equal class weights at every base point.
    Weights,
    /// (iv) connectivity of each class off `X`.
    Connectivity,
    /// Multiplicities have no common factor.
    Coprime,
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Axiom::Partition => "partition",
            Axiom::ClassDegree => "(i) class degree",
            Axiom::BaseLocus => "(ii) base locus",
            Axiom::Weights => "(iii) point weights",
            Axiom::Connectivity => "(iv) connectivity",
            Axiom::Coprime => "coprime multiplicities",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MultinetError {
    #[error("invalid base locus: {0}")]
    InvalidBase(#[from] CartanError),
    #[error("line {line} contains no point of X")]
    NotGlobal { line: usize },
    #[error("Q(X) has only {blocks} blocks")]
    TooFewBlocks { blocks: usize },
    #[error("block {block} of Q(X) is of {kind} type")]
    NonAffineBlock { block: usize, kind: &'static str },
    #[error("axiom {axiom} fails: {witness}")]
    AxiomFailure { axiom: Axiom, witness: String },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DiscoverError {
    #[error("{points} multiple points give {subsets} candidate base loci, above the cap of {cap}")]
    SearchSpaceTooLarge {
        points: usize,
        subsets: u128,
        cap: u128,
    },
}

/// A partition of the lines with multiplicities and a base locus; no axiom
/// is assumed.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct WeakMultinet {
    pub classes: Vec<Vec<usize>>,
    pub base: Vec<usize>,
    pub mult: Vec<u32>,
}

impl WeakMultinet {
    /// Uses as base locus every point where lines of two different classes
    /// meet.
    pub fn from_partition(
        lat: &IncidenceLattice,
        classes: Vec<Vec<usize>>,
        mult: Vec<u32>,
    ) -> Self {
        let class_of = class_index(&classes, lat.n_lines());
        let base = (0..lat.points().len())
            .filter(|&p| {
                let mut seen = lat.point(p).lines.iter().filter_map(|&l| class_of[l]);
                match seen.next() {
                    Some(first) => seen.any(|c| c != first),
                    None => false,
                }
            })
            .collect();
        WeakMultinet {
            classes,
            base,
            mult,
        }
    }

    /// Classes given by line labels, multiplicities taken from the arrangement.
    pub fn from_labels(
        arr: &MultiArrangement,
        lat: &IncidenceLattice,
        classes: &[Vec<String>],
    ) -> Result<Self, String> {
        let mut idx = Vec::with_capacity(classes.len());
        for class in classes {
            let mut c = Vec::with_capacity(class.len());
            for label in class {
                c.push(
                    arr.index_of(label)
                        .ok_or_else(|| format!("unknown line label '{label}'"))?,
                );
            }
            idx.push(c);
        }
        Ok(Self::from_partition(
            lat,
            idx,
            arr.multiplicities().to_vec(),
        ))
    }

    pub fn k(&self) -> usize {
        self.classes.len()
    }
}

/// A multinet whose axioms (i)-(iv) have been checked.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Multinet {
    weak: WeakMultinet,
    d: u64,
    weights: Vec<u64>,
}

impl Multinet {
    /// Checks all axioms. Classes are put in canonical order: sorted
    /// internally and by smallest member.
    pub fn new(lat: &IncidenceLattice, mut weak: WeakMultinet) -> Result<Self, MultinetError> {
        for c in weak.classes.iter_mut() {
            c.sort_unstable();
        }
        weak.classes.sort();
        weak.base.sort_unstable();
        let report = verify(&weak, lat);
        if let Some(bad) = report.axioms.iter().find(|a| !a.passed) {
            return Err(MultinetError::AxiomFailure {
                axiom: bad.axiom,
                witness: bad.witness.clone().unwrap_or_default(),
            });
        }
        let d = report.d.expect("class degrees agree");
        let weights = report
            .weights
            .iter()
            .map(|w| w.expect("weights agree"))
            .collect();
        Ok(Multinet { weak, d, weights })
    }

    pub fn classes(&self) -> &[Vec<usize>] {
        &self.weak.classes
    }

    pub fn base(&self) -> &[usize] {
        &self.weak.base
    }

    pub fn mult(&self) -> &[u32] {
        &self.weak.mult
    }

    pub fn k(&self) -> usize {
        self.weak.classes.len()
    }

    pub fn d(&self) -> u64 {
        self.d
    }

    /// `n_p` for each base point, aligned with [`Multinet::base`].
    pub fn weights(&self) -> &[u64] {
        &self.weights
    }

    pub fn weight_of(&self, p: usize) -> Option<u64> {
        self.weak
            .base
            .binary_search(&p)
            .ok()
            .map(|i| self.weights[i])
    }

    pub fn class_of(&self, line: usize) -> usize {
        self.weak
            .classes
            .iter()
            .position(|c| c.contains(&line))
            .expect("classes cover every line")
    }

    /// All multiplicities and weights equal to one.
    pub fn is_net(&self) -> bool {
        self.weak.mult.iter().all(|&m| m == 1) && self.weights.iter().all(|&w| w == 1)
    }

    pub fn as_weak(&self) -> &WeakMultinet {
        &self.weak
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxiomResult {
    pub axiom: Axiom,
    pub passed: bool,
    pub witness: Option<String>,
}

/// Outcome of [`verify`]. Never an error: every check is reported.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultinetReport {
    /// Partition, (i), (ii), (iii), (iv), coprime, in that order.
    pub axioms: Vec<AxiomResult>,
    pub k: usize,
    pub class_degrees: Vec<u64>,
    /// Common class degree when (i) holds.
    pub d: Option<u64>,
    /// `n_p` per base point when (iii) holds there.
    pub weights: Vec<Option<u64>>,
    /// `Σ m(ℓ) = dk`.
    pub lemma_total: bool,
    /// `Σ_{p∈X} n_p² = d²`.
    pub lemma_squares: bool,
    /// `Σ_{p∈X∩ℓ} n_p = d` for every line.
    pub lemma_lines: bool,
    pub lemma_witness: Option<String>,
}

impl MultinetReport {
    fn get(&self, a: Axiom) -> bool {
        self.axioms.iter().any(|r| r.axiom == a && r.passed)
    }

    /// Partition and axioms (i)-(iii).
    pub fn weak_ok(&self) -> bool {
        [
            Axiom::Partition,
            Axiom::ClassDegree,
            Axiom::BaseLocus,
            Axiom::Weights,
        ]
        .into_iter()
        .all(|a| self.get(a))
    }

    pub fn multinet_ok(&self) -> bool {
        self.axioms.iter().all(|a| a.passed)
    }

    pub fn lemma_ok(&self) -> bool {
        self.lemma_total && self.lemma_squares && self.lemma_lines
    }
}

fn class_index(classes: &[Vec<usize>], n: usize) -> Vec<Option<usize>> {
    let mut class_of = vec![None; n];
    for (i, c) in classes.iter().enumerate() {
        for &l in c {
            if l < n {
                class_of[l] = Some(i);
            }
        }
    }
    class_of
}

fn partition_problem(wm: &WeakMultinet, n: usize) -> Option<String> {
    if wm.mult.len() != n {
        return Some(format!("{} multiplicities for {n} lines", wm.mult.len()));
    }
    if let Some(l) = wm.mult.iter().position(|&m| m == 0) {
        return Some(format!("line {l} has multiplicity 0"));
    }
    if wm.classes.len() < 3 {
        return Some(format!("{} classes, need at least 3", wm.classes.len()));
    }
    let mut seen = vec![false; n];
    for (i, c) in wm.classes.iter().enumerate() {
        if c.is_empty() {
            return Some(format!("class {i} is empty"));
        }
        for &l in c {
            if l >= n {
                return Some(format!("line index {l} out of range"));
            }
            if seen[l] {
                return Some(format!("line {l} is in two classes"));
            }
            seen[l] = true;
        }
    }
    if let Some(l) = seen.iter().position(|s| !s) {
        return Some(format!("line {l} is in no class"));
    }
    let mut base = wm.base.clone();
    base.sort_unstable();
    if base.windows(2).any(|w| w[0] == w[1]) {
        return Some("base locus lists a point twice".into());
    }
    None
}

/// Checks every multinet axiom plus the numerical identities that follow
/// from (i)-(iii).
pub fn verify(wm: &WeakMultinet, lat: &IncidenceLattice) -> MultinetReport {
    let n = lat.n_lines();
    let k = wm.classes.len();
    let mut axioms = Vec::new();
    let res = |axiom, witness: Option<String>| AxiomResult {
        axiom,
        passed: witness.is_none(),
        witness,
    };
    let structural = partition_problem(wm, n).or_else(|| {
        wm.base
            .iter()
            .find(|&&p| p >= lat.points().len())
            .map(|p| format!("point {p} out of range"))
    });
    let failed = |axioms: &mut Vec<AxiomResult>| {
        for a in [
            Axiom::ClassDegree,
            Axiom::BaseLocus,
            Axiom::Weights,
            Axiom::Connectivity,
            Axiom::Coprime,
        ] {
            axioms.push(res(a, Some("partition is malformed".into())));
        }
    };
    if let Some(msg) = structural {
        axioms.push(res(Axiom::Partition, Some(msg)));
        failed(&mut axioms);
        return MultinetReport {
            axioms,
            k,
            class_degrees: Vec::new(),
            d: None,
            weights: vec![None; wm.base.len()],
            lemma_total: false,
            lemma_squares: false,
            lemma_lines: false,
            lemma_witness: Some("partition is malformed".into()),
        };
    }
    axioms.push(res(Axiom::Partition, None));
    let class_of: Vec<usize> = class_index(&wm.classes, n)
        .into_iter()
        .map(|c| c.expect("partition covers every line"))
        .collect();
    let in_base = {
        let mut v = vec![false; lat.points().len()];
        for &p in &wm.base {
            v[p] = true;
        }
        v
    };

    // (i)
    let class_degrees: Vec<u64> = wm
        .classes
        .iter()
        .map(|c| c.iter().map(|&l| wm.mult[l] as u64).sum())
        .collect();
    let d = class_degrees
        .iter()
        .all(|&x| x == class_degrees[0])
        .then(|| class_degrees[0]);
    axioms.push(res(
        Axiom::ClassDegree,
        d.is_none().then(|| {
            let i = class_degrees
                .iter()
                .position(|&x| x != class_degrees[0])
                .expect("differs");
            format!(
                "class 0 has degree {} but class {i} has degree {}",
                class_degrees[0], class_degrees[i]
            )
        }),
    ));

    // (ii)
    let mut witness = None;
    'outer: for a in 0..n {
        for b in a + 1..n {
            if class_of[a] != class_of[b] && !in_base[lat.point_of(a, b)] {
                witness = Some(format!(
                    "lines {a} and {b} of different classes meet at point {} outside X",
                    lat.point_of(a, b)
                ));
                break 'outer;
            }
        }
    }
    axioms.push(res(Axiom::BaseLocus, witness));

    // (iii)
    let mut weights = Vec::with_capacity(wm.base.len());
    let mut witness = None;
    for &p in &wm.base {
        let mut per_class = vec![0u64; k];
        for &l in &lat.point(p).lines {
            per_class[class_of[l]] += wm.mult[l] as u64;
        }
        if per_class.iter().all(|&x| x == per_class[0]) {
            weights.push(Some(per_class[0]));
        } else {
            weights.push(None);
            if witness.is_none() {
                witness = Some(format!("point {p} has class weights {per_class:?}"));
            }
        }
    }
    axioms.push(res(Axiom::Weights, witness));

    // (iv)
    let mut witness = None;
    for (i, c) in wm.classes.iter().enumerate() {
        let mut reached = vec![c[0]];
        let mut idx = 0;
        while idx < reached.len() {
            let a = reached[idx];
            for &b in c {
                if b != a && !reached.contains(&b) && !in_base[lat.point_of(a, b)] {
                    reached.push(b);
                }
            }
            idx += 1;
        }
        if reached.len() < c.len() {
            witness = Some(format!("class {i} is disconnected off X"));
            break;
        }
    }
    axioms.push(res(Axiom::Connectivity, witness));

    let g = wm.mult.iter().fold(0u32, |g, &m| g.gcd(&m));
    axioms.push(res(
        Axiom::Coprime,
        (g != 1).then(|| format!("multiplicities share the factor {g}")),
    ));

    let total: u64 = wm.mult.iter().map(|&m| m as u64).sum();
    let (lemma_total, lemma_squares, lemma_lines, lemma_witness) = match d {
        Some(d) if weights.iter().all(Option::is_some) => {
            let w: Vec<u64> = weights.iter().map(|w| w.expect("checked")).collect();
            let lt = total == d * k as u64;
            let sq: u64 = w.iter().map(|x| x * x).sum();
            let ls = sq == d * d;
            let mut witness = None;
            for l in 0..n {
                let s: u64 = wm
                    .base
                    .iter()
                    .zip(&w)
                    .filter(|(&p, _)| lat.is_on(p, l))
                    .map(|(_, &x)| x)
                    .sum();
                if s != d {
                    witness = Some(format!("line {l} carries base weight {s}, expected {d}"));
                    break;
                }
            }
            let ll = witness.is_none();
            if witness.is_none() && !lt {
                witness = Some(format!(
                    "total multiplicity {total} differs from dk = {}",
                    d * k as u64
                ));
            }
            if witness.is_none() && !ls {
                witness = Some(format!(
                    "sum of squared weights {sq} differs from d^2 = {}",
                    d * d
                ));
            }
            (lt, ls, ll, witness)
        }
        _ => (
            false,
            false,
            false,
            Some("class degrees or weights are inconsistent".into()),
        ),
    };

    MultinetReport {
        axioms,
        k,
        class_degrees,
        d,
        weights,
        lemma_total,
        lemma_squares,
        lemma_lines,
        lemma_witness,
    }
}

/// Builds the multinet whose classes are the blocks of `Q(X)`, with
/// multiplicities read off the rescaled kernel vectors.
pub fn multinet_from_base(lat: &IncidenceLattice, x: &[usize]) -> Result<Multinet, MultinetError> {
    let dec = decompose(lat, x)?;
    if let Some(line) = (0..lat.n_lines()).find(|l| !dec.j.lines.contains(l)) {
        return Err(MultinetError::NotGlobal { line });
    }
    if dec.blocks.len() < 3 {
        return Err(MultinetError::TooFewBlocks {
            blocks: dec.blocks.len(),
        });
    }
    let mut kernels = Vec::with_capacity(dec.blocks.len());
    for (i, b) in dec.blocks.iter().enumerate() {
        match &b.kind {
            VinbergType::Affine(u) => kernels.push(u),
            other => {
                return Err(MultinetError::NonAffineBlock {
                    block: i,
                    kind: other.name(),
                })
            }
        }
    }
    let sigmas: Vec<BigInt> = kernels.iter().map(|u| u.iter().sum()).collect();
    let d = sigmas.iter().fold(BigInt::from(1), |acc, s| acc.lcm(s));
    let mut mult = vec![0u32; lat.n_lines()];
    for ((b, u), s) in dec.blocks.iter().zip(&kernels).zip(&sigmas) {
        let scale = &d / s;
        for (&line, ui) in b.lines.iter().zip(u.iter()) {
            mult[line] = (ui * &scale)
                .to_u32()
                .ok_or_else(|| MultinetError::AxiomFailure {
                    axiom: Axiom::ClassDegree,
                    witness: "multiplicity does not fit in 32 bits".into(),
                })?;
        }
    }
    let classes = dec.blocks.iter().map(|b| b.lines.clone()).collect();
    let mut base = x.to_vec();
    base.sort_unstable();
    Multinet::new(
        lat,
        WeakMultinet {
            classes,
            base,
            mult,
        },
    )
}

fn passes_prefilter(lat: &IncidenceLattice, in_x: &[bool]) -> bool {
    let n = lat.n_lines();
    let mut covered = vec![false; n];
    for (p, &inside) in in_x.iter().enumerate() {
        if inside {
            for &l in &lat.point(p).lines {
                covered[l] = true;
            }
        }
    }
    if covered.iter().any(|c| !c) {
        return false;
    }
    // Lines of different classes meet in X, so each class is a union of
    // components of the graph joining lines that meet off X.
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut [usize], mut a: usize) -> usize {
        while parent[a] != a {
            parent[a] = parent[parent[a]];
            a = parent[a];
        }
        a
    }
    let mut comps = n;
    for a in 0..n {
        for b in a + 1..n {
            if !in_x[lat.point_of(a, b)] {
                let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
                if ra != rb {
                    parent[ra] = rb;
                    comps -= 1;
                    if comps < 3 {
                        return false;
                    }
                }
            }
        }
    }
    if comps < 3 {
        return false;
    }
    // Every class passes through every base point.
    let roots: Vec<usize> = (0..n).map(|l| find(&mut parent, l)).collect();
    let mut touched = Vec::with_capacity(n);
    for (p, &inside) in in_x.iter().enumerate() {
        if !inside {
            continue;
        }
        touched.clear();
        for &l in &lat.point(p).lines {
            if !touched.contains(&roots[l]) {
                touched.push(roots[l]);
            }
        }
        if touched.len() != comps {
            return false;
        }
    }
    true
}

/// All global multinets of the arrangement, found by trying every set of
/// multiple points as base locus (by size, then lexicographically).
pub fn discover(lat: &IncidenceLattice, cap: u128) -> Result<Vec<Multinet>, DiscoverError> {
    let multiple = lat.multiple_points();
    let m = multiple.len();
    let subsets = if m >= 128 { u128::MAX } else { 1u128 << m };
    if subsets > cap {
        return Err(DiscoverError::SearchSpaceTooLarge {
            points: m,
            subsets,
            cap,
        });
    }
    let npts = lat.points().len();
    let mut found = Vec::new();
    let mut seen = HashSet::new();
    for size in 1..=m {
        let combos: Vec<Vec<usize>> = multiple.iter().copied().combinations(size).collect();
        let hits: Vec<Multinet> = combos
            .par_iter()
            .filter_map(|x| {
                let mut in_x = vec![false; npts];
                for &p in x {
                    in_x[p] = true;
                }
                if !passes_prefilter(lat, &in_x) {
                    return None;
                }
                multinet_from_base(lat, x).ok()
            })
            .collect();
        for mn in hits {
            let key = (mn.classes().to_vec(), mn.mult().to_vec());
            if seen.insert(key) {
                found.push(mn);
            }
        }
    }
    Ok(found)
}

/// The multinet with the same base locus as a weak multinet.
pub fn refine_weak(wm: &WeakMultinet, lat: &IncidenceLattice) -> Result<Multinet, MultinetError> {
    multinet_from_base(lat, &wm.base)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExponentReport {
    pub exponents: Vec<u64>,
    pub pairwise_coprime: bool,
    /// When three or more exponents exceed one, they all lie in {2, 3, 5}.
    pub large_exponents_ok: bool,
}

/// Exponents from per-class multiplicity lists.
pub fn exponents_of_classes(class_mults: &[Vec<u64>]) -> ExponentReport {
    let exponents: Vec<u64> = class_mults
        .iter()
        .map(|c| c.iter().fold(0u64, |g, &m| g.gcd(&m)))
        .collect();
    let pairwise_coprime = exponents
        .iter()
        .tuple_combinations()
        .all(|(a, b)| a.gcd(b) == 1);
    let big: Vec<u64> = exponents.iter().copied().filter(|&e| e > 1).collect();
    let large_exponents_ok = big.len() < 3 || big.iter().all(|e| [2, 3, 5].contains(e));
    ExponentReport {
        exponents,
        pairwise_coprime,
        large_exponents_ok,
    }
}

/// `e_i` is the gcd of the multiplicities in class `i`.
pub fn exponents(mn: &Multinet) -> ExponentReport {
    let cm: Vec<Vec<u64>> = mn
        .classes()
        .iter()
        .map(|c| c.iter().map(|&l| mn.mult()[l] as u64).collect())
        .collect();
    exponents_of_classes(&cm)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arrangement::build_lattice;
    use crate::corpus;

    #[test]
    fn ceva3_net_from_base() {
        let lat = build_lattice(&corpus::ceva(3));
        let x: Vec<usize> = lat
            .multiple_points()
            .into_iter()
            .filter(|&p| {
                lat.point(p)
                    .coords
                    .as_ref()
                    .unwrap()
                    .coords()
                    .iter()
                    .all(|c| !c.is_zero())
            })
            .collect();
        let mn = multinet_from_base(&lat, &x).unwrap();
        assert_eq!((mn.k(), mn.d()), (3, 3));
        assert!(mn.is_net());
        let r = verify(mn.as_weak(), &lat);
        assert!(r.multinet_ok() && r.lemma_ok());
    }

    #[test]
    fn triangle_has_nothing() {
        let arr = MultiArrangement::simple(
            1,
            vec![
                crate::arrangement::ProjLine::from_ints("x", 1, 0, 0).unwrap(),
                crate::arrangement::ProjLine::from_ints("y", 0, 1, 0).unwrap(),
                crate::arrangement::ProjLine::from_ints("z", 0, 0, 1).unwrap(),
            ],
        )
        .unwrap();
        let lat = build_lattice(&arr);
        assert!(discover(&lat, DEFAULT_CAP).unwrap().is_empty());
        assert!(matches!(
            multinet_from_base(&lat, &[0]),
            Err(MultinetError::InvalidBase(CartanError::NotMultiplePoint(0)))
        ));
    }

    #[test]
    fn concurrent_five() {
        let lat = build_lattice(&corpus::concurrent(5));
        let found = discover(&lat, DEFAULT_CAP).unwrap();
        assert_eq!(found.len(), 1);
        assert_eq!((found[0].k(), found[0].d()), (5, 1));
    }

    #[test]
    fn cap_is_enforced() {
        let lat = build_lattice(&corpus::ceva(3));
        let e = discover(&lat, 1000).unwrap_err();
        assert_eq!(
            e,
            DiscoverError::SearchSpaceTooLarge {
                points: 12,
                subsets: 4096,
                cap: 1000
            }
        );
    }

    #[test]
    fn exponent_examples() {
        let r = exponents_of_classes(&[vec![2, 2], vec![4], vec![1, 3]]);
        assert_eq!(r.exponents, vec![2, 4, 1]);
        assert!(!r.pairwise_coprime);
        let r = exponents_of_classes(&[vec![1, 1, 2], vec![1, 1, 2], vec![1, 1, 2]]);
        assert_eq!(r.exponents, vec![1, 1, 1]);
        assert!(r.pairwise_coprime && r.large_exponents_ok);
        let r = exponents_of_classes(&[vec![2], vec![3], vec![7]]);
        assert!(r.pairwise_coprime && !r.large_exponents_ok);
    }

    #[test]
    fn perturbed_b3_fails_degree() {
        let arr = corpus::b3();
        let lat = build_lattice(&arr);
        let e = corpus::monomial_entry(2).expected.unwrap();
        let mut wm = WeakMultinet::from_labels(&arr, &lat, &e.classes).unwrap();
        assert!(verify(&wm, &lat).multinet_ok());
        wm.mult[0] = 3;
        let r = verify(&wm, &lat);
        assert!(!r.axioms[1].passed);
        assert_eq!(r.axioms[1].axiom, Axiom::ClassDegree);
    }
}
