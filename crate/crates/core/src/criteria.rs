//! Numerical criteria attached to a multinet: the Riemann-Hurwitz type
//! inequality, the local test at base points and the transversality test
//! for extra lines.

use thiserror::Error;

use crate::arrangement::{meet, IncidenceLattice, MultiArrangement, ProjLine, ProjPoint};
use crate::multinet::Multinet;

/// Both sides of `3 + |X| >= (2-k)[3d - d² + Σ(n_p² - n_p)] + 2|L| - Σ_{X̄}(m_p - 1)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RHReport {
    pub lhs: i64,
    pub rhs: i64,
    /// `(2-k) χ_F + Σ_i χ_i`, the same quantity assembled class by class.
    pub rhs_by_classes: i64,
    /// The right side with `Σ n_p² = d²` substituted.
    pub rhs_rewritten: i64,
    pub deficit: i64,
    pub complete: bool,
    /// `3d - d² + Σ(n_p² - n_p)`.
    pub fiber_euler: i64,
    /// `2|L_i| - Σ_{p ∈ X̄_i}(m_p - 1)` for each class.
    pub class_euler: Vec<i64>,
    /// Intersection points outside the base locus.
    pub xbar: Vec<usize>,
}

pub fn euler_sides(mn: &Multinet, lat: &IncidenceLattice) -> RHReport {
    let k = mn.k() as i64;
    let d = mn.d() as i64;
    let n_lines = lat.n_lines() as i64;
    let xbar: Vec<usize> = (0..lat.points().len())
        .filter(|p| mn.base().binary_search(p).is_err())
        .collect();
    let sum_n: i64 = mn.weights().iter().map(|&w| w as i64).sum();
    let sum_n2: i64 = mn.weights().iter().map(|&w| (w * w) as i64).sum();
    let fiber_euler = 3 * d - d * d + sum_n2 - sum_n;
    let xbar_defect: i64 = xbar.iter().map(|&p| lat.multiplicity(p) as i64 - 1).sum();
    let class_euler: Vec<i64> = mn
        .classes()
        .iter()
        .map(|c| {
            let defect: i64 = xbar
                .iter()
                .filter(|&&p| c.iter().any(|&l| lat.is_on(p, l)))
                .map(|&p| lat.multiplicity(p) as i64 - 1)
                .sum();
            2 * c.len() as i64 - defect
        })
        .collect();
    let lhs = 3 + mn.base().len() as i64;
    let rhs = (2 - k) * fiber_euler + 2 * n_lines - xbar_defect;
    let rhs_by_classes = (2 - k) * fiber_euler + class_euler.iter().sum::<i64>();
    let rhs_rewritten = (k - 2) * (-3 * d + sum_n) + 2 * n_lines - xbar_defect;
    RHReport {
        lhs,
        rhs,
        rhs_by_classes,
        rhs_rewritten,
        deficit: lhs - rhs,
        complete: lhs == rhs,
        fiber_euler,
        class_euler,
        xbar,
    }
}

/// The rank-two identity `2n - 2 = Σ (m_j - 1)` for a pencil of binary forms
/// of degree `n` with fiber multiplicity profile `m`.
pub fn rank2_hurwitz(n: u64, profile: &[u64]) -> bool {
    let rhs: i64 = profile.iter().map(|&m| m as i64 - 1).sum();
    2 * n as i64 - 2 == rhs
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LocalPoint {
    pub point: usize,
    pub weight: u64,
    /// `2 n_p - 2`.
    pub lhs: i64,
    /// `Σ_{ℓ ∋ p} (m(ℓ) - 1)`.
    pub rhs: i64,
    pub passed: bool,
    /// [`rank2_hurwitz`] on the multiplicities of the lines through `p`.
    pub hurwitz: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LocalTestReport {
    pub points: Vec<LocalPoint>,
}

impl LocalTestReport {
    pub fn passed(&self) -> bool {
        self.points.iter().all(|p| p.passed)
    }

    /// Base points where the identity fails.
    pub fn failures(&self) -> Vec<usize> {
        self.points
            .iter()
            .filter(|p| !p.passed)
            .map(|p| p.point)
            .collect()
    }
}

/// Checks `2n_p - 2 = Σ_{ℓ ∋ p} (m(ℓ) - 1)` at every base point. A failure
/// anywhere means the multinet is not complete.
pub fn local_test(mn: &Multinet, lat: &IncidenceLattice) -> LocalTestReport {
    let points = mn
        .base()
        .iter()
        .zip(mn.weights())
        .map(|(&p, &w)| {
            let profile: Vec<u64> = lat
                .point(p)
                .lines
                .iter()
                .map(|&l| mn.mult()[l] as u64)
                .collect();
            let rhs: i64 = profile.iter().map(|&m| m as i64 - 1).sum();
            let lhs = 2 * w as i64 - 2;
            LocalPoint {
                point: p,
                weight: w,
                lhs,
                rhs,
                passed: lhs == rhs,
                hurwitz: rank2_hurwitz(w, &profile),
            }
        })
        .collect();
    LocalTestReport { points }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TransverseError {
    #[error("the multinet is not complete (deficit {deficit})")]
    NotComplete { deficit: i64 },
    #[error("the line coincides with arrangement line '{0}'")]
    LineInArrangement(String),
    #[error("abstract arrangements have no coordinates")]
    Abstract,
    #[error("added lines {0} and {1} coincide")]
    RepeatedLine(usize, usize),
    #[error("added lines {0} and {1} meet outside the arrangement")]
    MeetOutside(usize, usize),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TransverseReport {
    /// Points of `ℓ₀ ∩ ∪L` outside `X`.
    pub points: Vec<ProjPoint>,
    /// `2 - 2d`.
    pub lhs: i64,
    /// `|ℓ₀ ∩ ∪L - X| - kd`.
    pub rhs: i64,
    pub transverse: bool,
}

/// Tests `2 - 2d = |ℓ₀ ∩ ∪L - X| - kd` for a line `ℓ₀` not in the
/// arrangement. Requires a complete multinet.
pub fn transversality(
    mn: &Multinet,
    lat: &IncidenceLattice,
    arr: &MultiArrangement,
    extra: &ProjLine,
) -> Result<TransverseReport, TransverseError> {
    let lines = arr.lines().map_err(|_| TransverseError::Abstract)?;
    if let Some(l) = lines.iter().find(|l| l.same_line(extra)) {
        return Err(TransverseError::LineInArrangement(l.label().to_string()));
    }
    let rh = euler_sides(mn, lat);
    if !rh.complete {
        return Err(TransverseError::NotComplete {
            deficit: rh.deficit,
        });
    }
    let mut points: Vec<ProjPoint> = Vec::new();
    for l in lines {
        let q = meet(l, extra).expect("lines are distinct");
        let in_base = lat
            .find(&q)
            .is_some_and(|p| mn.base().binary_search(&p).is_ok());
        if !in_base && !points.contains(&q) {
            points.push(q);
        }
    }
    points.sort();
    let k = mn.k() as i64;
    let d = mn.d() as i64;
    let lhs = 2 - 2 * d;
    let rhs = points.len() as i64 - k * d;
    Ok(TransverseReport {
        points,
        lhs,
        rhs,
        transverse: lhs == rhs,
    })
}

/// Applies [`transversality`] to several added lines. Each line must meet
/// the earlier ones at points of `∪L`.
pub fn transversality_chain(
    mn: &Multinet,
    lat: &IncidenceLattice,
    arr: &MultiArrangement,
    extras: &[ProjLine],
) -> Result<Vec<TransverseReport>, TransverseError> {
    let lines = arr.lines().map_err(|_| TransverseError::Abstract)?;
    for j in 0..extras.len() {
        for i in 0..j {
            if extras[i].same_line(&extras[j]) {
                return Err(TransverseError::RepeatedLine(i, j));
            }
            let q = meet(&extras[i], &extras[j]).expect("distinct lines");
            if !lines.iter().any(|l| l.contains(&q)) {
                return Err(TransverseError::MeetOutside(i, j));
            }
        }
    }
    extras
        .iter()
        .map(|e| transversality(mn, lat, arr, e))
        .collect()
}
