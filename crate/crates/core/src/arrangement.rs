//! Lines and points of the projective plane over Q(ζₙ), multi-arrangements,
//! and their intersection lattices.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use thiserror::Error;

use crate::exactfield::CycloElem;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ArrangementError {
    #[error("zero coordinate triple")]
    ZeroTriple,
    #[error("lines {0} and {1} are proportional")]
    ProportionalLines(String, String),
    #[error("line {0} has multiplicity zero")]
    ZeroMultiplicity(String),
    #[error("duplicate line label {0}")]
    DuplicateLabel(String),
    #[error("multiplicity vector has length {got}, expected {expected}")]
    MultiplicityLength { expected: usize, got: usize },
    #[error("abstract point record {0} must name at least two distinct lines")]
    DegeneratePoint(usize),
    #[error("abstract point record {0} refers to line index {1} out of range")]
    LineIndexOutOfRange(usize, usize),
    #[error("lines {0} and {1} share more than one abstract point")]
    PairInTwoPoints(String, String),
    #[error("operation requires coordinates but the arrangement is abstract")]
    AbstractArrangement,
}

/// Scales a triple so its first nonzero entry is 1.
fn normalize(v: [CycloElem; 3]) -> Option<[CycloElem; 3]> {
    let lead = v.iter().find(|c| !c.is_zero())?.clone();
    let inv = lead.inv().ok()?;
    Some(v.map(|c| &c * &inv))
}

fn cross(a: &[CycloElem; 3], b: &[CycloElem; 3]) -> [CycloElem; 3] {
    [
        &(&a[1] * &b[2]) - &(&a[2] * &b[1]),
        &(&a[2] * &b[0]) - &(&a[0] * &b[2]),
        &(&a[0] * &b[1]) - &(&a[1] * &b[0]),
    ]
}

fn dot(a: &[CycloElem; 3], b: &[CycloElem; 3]) -> CycloElem {
    &(&(&a[0] * &b[0]) + &(&a[1] * &b[1])) + &(&a[2] * &b[2])
}

/// A point of P², normalized so that its first nonzero coordinate is 1.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct ProjPoint {
    coords: [CycloElem; 3],
}

impl ProjPoint {
    pub fn new(coords: [CycloElem; 3]) -> Result<Self, ArrangementError> {
        normalize(coords)
            .map(|coords| ProjPoint { coords })
            .ok_or(ArrangementError::ZeroTriple)
    }

    pub fn from_ints(x: i64, y: i64, z: i64) -> Result<Self, ArrangementError> {
        Self::new([x.into(), y.into(), z.into()])
    }

    pub fn coords(&self) -> &[CycloElem; 3] {
        &self.coords
    }

    pub fn promote(&self, order: u32) -> Self {
        ProjPoint {
            coords: self.coords.clone().map(|c| c.promote(order)),
        }
    }
}

impl fmt::Display for ProjPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[{} : {} : {}]",
            self.coords[0], self.coords[1], self.coords[2]
        )
    }
}

/// A line `a x + b y + c z = 0` with its normalized coefficient triple.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProjLine {
    coeffs: [CycloElem; 3],
    label: String,
}

impl ProjLine {
    pub fn new(label: impl Into<String>, coeffs: [CycloElem; 3]) -> Result<Self, ArrangementError> {
        let coeffs = normalize(coeffs).ok_or(ArrangementError::ZeroTriple)?;
        Ok(ProjLine {
            coeffs,
            label: label.into(),
        })
    }

    pub fn from_ints(
        label: impl Into<String>,
        a: i64,
        b: i64,
        c: i64,
    ) -> Result<Self, ArrangementError> {
        Self::new(label, [a.into(), b.into(), c.into()])
    }

    /// The line through two distinct points.
    pub fn through(
        label: impl Into<String>,
        p: &ProjPoint,
        q: &ProjPoint,
    ) -> Result<Self, ArrangementError> {
        Self::new(label, cross(&p.coords, &q.coords))
    }

    pub fn coeffs(&self) -> &[CycloElem; 3] {
        &self.coeffs
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    /// The linear form evaluated at a point representative.
    pub fn eval(&self, p: &ProjPoint) -> CycloElem {
        dot(&self.coeffs, &p.coords)
    }

    pub fn contains(&self, p: &ProjPoint) -> bool {
        self.eval(p).is_zero()
    }

    /// Same projective line (labels ignored).
    pub fn same_line(&self, other: &ProjLine) -> bool {
        self.coeffs == other.coeffs
    }

    pub fn promote(&self, order: u32) -> Self {
        ProjLine {
            coeffs: self.coeffs.clone().map(|c| c.promote(order)),
            label: self.label.clone(),
        }
    }

    fn max_order(&self) -> u32 {
        self.coeffs
            .iter()
            .map(CycloElem::order)
            .fold(1, num_integer::lcm)
    }
}

/// Intersection point of two distinct lines.
pub fn meet(l1: &ProjLine, l2: &ProjLine) -> Result<ProjPoint, ArrangementError> {
    ProjPoint::new(cross(&l1.coeffs, &l2.coeffs))
        .map_err(|_| ArrangementError::ProportionalLines(l1.label.clone(), l2.label.clone()))
}

/// How the lines of an arrangement are known.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Realization {
    /// Explicit linear forms over Q(ζ_order).
    Coordinates { order: u32, lines: Vec<ProjLine> },
    /// Only the incidence structure: each record lists the lines through one
    /// intersection point. Pairs of lines not covered by a record meet in a
    /// double point of their own.
    Abstract { points: Vec<Vec<usize>> },
}

/// Lines with positive multiplicities. Lines are pairwise distinct.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiArrangement {
    labels: Vec<String>,
    mult: Vec<u32>,
    realization: Realization,
}

fn check_labels_and_mult(labels: &[String], mult: &[u32]) -> Result<(), ArrangementError> {
    if labels.len() != mult.len() {
        return Err(ArrangementError::MultiplicityLength {
            expected: labels.len(),
            got: mult.len(),
        });
    }
    let mut seen = BTreeSet::new();
    for (l, &m) in labels.iter().zip(mult) {
        if !seen.insert(l.as_str()) {
            return Err(ArrangementError::DuplicateLabel(l.clone()));
        }
        if m == 0 {
            return Err(ArrangementError::ZeroMultiplicity(l.clone()));
        }
    }
    Ok(())
}

impl MultiArrangement {
    /// Builds a coordinate arrangement; all coefficients are promoted to the
    /// common order `lcm(order, orders of the coefficients)`.
    pub fn from_lines(
        order: u32,
        lines: Vec<ProjLine>,
        mult: Vec<u32>,
    ) -> Result<Self, ArrangementError> {
        let labels: Vec<String> = lines.iter().map(|l| l.label.clone()).collect();
        check_labels_and_mult(&labels, &mult)?;
        let order = lines
            .iter()
            .map(ProjLine::max_order)
            .fold(order.max(1), num_integer::lcm);
        let lines: Vec<ProjLine> = lines.iter().map(|l| l.promote(order)).collect();
        for i in 0..lines.len() {
            for j in i + 1..lines.len() {
                if lines[i].same_line(&lines[j]) {
                    return Err(ArrangementError::ProportionalLines(
                        labels[i].clone(),
                        labels[j].clone(),
                    ));
                }
            }
        }
        Ok(MultiArrangement {
            labels,
            mult,
            realization: Realization::Coordinates { order, lines },
        })
    }

    /// A coordinate arrangement with every multiplicity equal to 1.
    pub fn simple(order: u32, lines: Vec<ProjLine>) -> Result<Self, ArrangementError> {
        let n = lines.len();
        Self::from_lines(order, lines, vec![1; n])
    }

    /// Builds an abstract arrangement from point records (sets of line
    /// indices through a common point).
    pub fn from_incidences(
        labels: Vec<String>,
        mult: Vec<u32>,
        points: Vec<Vec<usize>>,
    ) -> Result<Self, ArrangementError> {
        check_labels_and_mult(&labels, &mult)?;
        let n = labels.len();
        let mut owner: BTreeMap<(usize, usize), usize> = BTreeMap::new();
        let mut records = Vec::with_capacity(points.len());
        for (r, pt) in points.iter().enumerate() {
            let set: BTreeSet<usize> = pt.iter().copied().collect();
            if let Some(&bad) = set.iter().find(|&&i| i >= n) {
                return Err(ArrangementError::LineIndexOutOfRange(r, bad));
            }
            if set.len() < 2 {
                return Err(ArrangementError::DegeneratePoint(r));
            }
            let v: Vec<usize> = set.into_iter().collect();
            for a in 0..v.len() {
                for b in a + 1..v.len() {
                    if owner.insert((v[a], v[b]), r).is_some() {
                        return Err(ArrangementError::PairInTwoPoints(
                            labels[v[a]].clone(),
                            labels[v[b]].clone(),
                        ));
                    }
                }
            }
            records.push(v);
        }
        Ok(MultiArrangement {
            labels,
            mult,
            realization: Realization::Abstract { points: records },
        })
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn multiplicities(&self) -> &[u32] {
        &self.mult
    }

    pub fn realization(&self) -> &Realization {
        &self.realization
    }

    pub fn is_abstract(&self) -> bool {
        matches!(self.realization, Realization::Abstract { .. })
    }

    /// Coordinate lines, or an error for abstract arrangements.
    pub fn lines(&self) -> Result<&[ProjLine], ArrangementError> {
        match &self.realization {
            Realization::Coordinates { lines, .. } => Ok(lines),
            Realization::Abstract { .. } => Err(ArrangementError::AbstractArrangement),
        }
    }

    /// Cyclotomic order of the coefficients (1 for abstract arrangements).
    pub fn order(&self) -> u32 {
        match &self.realization {
            Realization::Coordinates { order, .. } => *order,
            Realization::Abstract { .. } => 1,
        }
    }

    /// Same lines with new multiplicities.
    pub fn with_multiplicities(&self, mult: Vec<u32>) -> Result<Self, ArrangementError> {
        check_labels_and_mult(&self.labels, &mult)?;
        Ok(MultiArrangement {
            labels: self.labels.clone(),
            mult,
            realization: self.realization.clone(),
        })
    }

    /// The sub-arrangement on the given line indices (in the given order).
    pub fn restrict(&self, keep: &[usize]) -> Result<Self, ArrangementError> {
        let labels: Vec<String> = keep.iter().map(|&i| self.labels[i].clone()).collect();
        let mult: Vec<u32> = keep.iter().map(|&i| self.mult[i]).collect();
        match &self.realization {
            Realization::Coordinates { order, lines } => {
                let lines = keep.iter().map(|&i| lines[i].clone()).collect();
                Self::from_lines(*order, lines, mult)
            }
            Realization::Abstract { points } => {
                let pos: BTreeMap<usize, usize> = keep
                    .iter()
                    .enumerate()
                    .map(|(new, &old)| (old, new))
                    .collect();
                let points = points
                    .iter()
                    .map(|p| {
                        p.iter()
                            .filter_map(|i| pos.get(i).copied())
                            .collect::<Vec<_>>()
                    })
                    .filter(|p| p.len() >= 2)
                    .collect();
                Self::from_incidences(labels, mult, points)
            }
        }
    }
}

/// One intersection point with the (sorted) indices of the lines through it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LatticePoint {
    pub coords: Option<ProjPoint>,
    pub lines: Vec<usize>,
}

impl LatticePoint {
    /// Number of lines through the point.
    pub fn multiplicity(&self) -> usize {
        self.lines.len()
    }
}

/// All pairwise intersection points of an arrangement (its rank-two flats).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IncidenceLattice {
    n_lines: usize,
    points: Vec<LatticePoint>,
    pair_point: Vec<usize>,
}

impl IncidenceLattice {
    fn from_points(n_lines: usize, points: Vec<LatticePoint>) -> Self {
        let mut pair_point = vec![usize::MAX; n_lines * n_lines];
        for (idx, p) in points.iter().enumerate() {
            for &a in &p.lines {
                for &b in &p.lines {
                    if a != b {
                        pair_point[a * n_lines + b] = idx;
                    }
                }
            }
        }
        IncidenceLattice {
            n_lines,
            points,
            pair_point,
        }
    }

    pub fn n_lines(&self) -> usize {
        self.n_lines
    }

    pub fn points(&self) -> &[LatticePoint] {
        &self.points
    }

    pub fn point(&self, p: usize) -> &LatticePoint {
        &self.points[p]
    }

    /// Index of the point where two distinct lines meet.
    pub fn point_of(&self, a: usize, b: usize) -> usize {
        assert_ne!(a, b, "a line does not meet itself in a point");
        self.pair_point[a * self.n_lines + b]
    }

    pub fn multiplicity(&self, p: usize) -> usize {
        self.points[p].lines.len()
    }

    pub fn is_on(&self, p: usize, line: usize) -> bool {
        self.points[p].lines.binary_search(&line).is_ok()
    }

    /// Points lying on a given line, in lattice order.
    pub fn points_on(&self, line: usize) -> Vec<usize> {
        (0..self.points.len())
            .filter(|&p| self.is_on(p, line))
            .collect()
    }

    /// Looks up a point by coordinates.
    pub fn find(&self, q: &ProjPoint) -> Option<usize> {
        self.points
            .iter()
            .position(|p| p.coords.as_ref() == Some(q))
    }

    /// Points on at least three lines.
    pub fn multiple_points(&self) -> Vec<usize> {
        multiple_points(self)
    }

    /// Human-readable name of a point: its coordinates when known, otherwise
    /// the labels of its lines.
    pub fn describe(&self, p: usize, arr: &MultiArrangement) -> String {
        match &self.points[p].coords {
            Some(c) => c.to_string(),
            None => {
                let names: Vec<&str> = self.points[p].lines.iter().map(|&l| arr.label(l)).collect();
                format!("{{{}}}", names.join(","))
            }
        }
    }
}

/// Computes every intersection point of the underlying simple arrangement.
///
/// Coordinate arrangements are sorted lexicographically by normalized
/// coordinates; abstract ones by their sorted line sets.
pub fn build_lattice(arr: &MultiArrangement) -> IncidenceLattice {
    let n = arr.len();
    match arr.realization() {
        Realization::Coordinates { lines, .. } => {
            let mut groups: BTreeMap<ProjPoint, BTreeSet<usize>> = BTreeMap::new();
            for i in 0..n {
                for j in i + 1..n {
                    let p = meet(&lines[i], &lines[j]).expect("arrangement lines are distinct");
                    let set = groups.entry(p).or_default();
                    set.insert(i);
                    set.insert(j);
                }
            }
            let points = groups
                .into_iter()
                .map(|(p, set)| LatticePoint {
                    coords: Some(p),
                    lines: set.into_iter().collect(),
                })
                .collect();
            IncidenceLattice::from_points(n, points)
        }
        Realization::Abstract { points } => {
            let mut covered = vec![false; n * n];
            let mut sets: Vec<Vec<usize>> = Vec::new();
            for p in points {
                for &a in p {
                    for &b in p {
                        covered[a * n + b] = true;
                    }
                }
                sets.push(p.clone());
            }
            for i in 0..n {
                for j in i + 1..n {
                    if !covered[i * n + j] {
                        sets.push(vec![i, j]);
                    }
                }
            }
            sets.sort();
            let points = sets
                .into_iter()
                .map(|lines| LatticePoint {
                    coords: None,
                    lines,
                })
                .collect();
            IncidenceLattice::from_points(n, points)
        }
    }
}

/// Indices of the points lying on three or more lines, in lattice order.
pub fn multiple_points(lat: &IncidenceLattice) -> Vec<usize> {
    (0..lat.points.len())
        .filter(|&p| lat.points[p].lines.len() >= 3)
        .collect()
}
