//! Generalized Cartan matrices `Q(X) = JᵀJ - E` attached to a set `X` of
//! multiple points, their indecomposable blocks and the Vinberg trichotomy.

use num_bigint::BigInt;
use num_traits::Signed;
use thiserror::Error;

use crate::arrangement::IncidenceLattice;
use crate::linalg::{leading_principal_minors, rational_kernel, to_rational};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CartanError {
    #[error("the base locus is empty")]
    EmptyBase,
    #[error("point index {0} is out of range")]
    PointOutOfRange(usize),
    #[error("point {0} lies on fewer than three lines")]
    NotMultiplePoint(usize),
    #[error("point {0} is listed twice")]
    RepeatedPoint(usize),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ClassifyError {
    #[error("matrix is not square and symmetric")]
    NotSymmetric,
    #[error("positive off-diagonal entry at ({0}, {1})")]
    PositiveOffDiagonal(usize, usize),
}

/// The 0/1 incidence matrix between the points of `X` (rows) and the lines
/// `L'` through at least one of them (columns).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IncMatrix {
    pub points: Vec<usize>,
    pub lines: Vec<usize>,
    pub entries: Vec<Vec<u8>>,
}

impl IncMatrix {
    pub fn rows(&self) -> usize {
        self.points.len()
    }

    pub fn cols(&self) -> usize {
        self.lines.len()
    }

    pub fn as_i64(&self) -> Vec<Vec<i64>> {
        self.entries
            .iter()
            .map(|r| r.iter().map(|&x| x as i64).collect())
            .collect()
    }
}

/// Builds `J` for a set of multiple points. The points are taken in
/// increasing index order; `L'` is listed in increasing line order.
pub fn incidence_matrix(lat: &IncidenceLattice, x: &[usize]) -> Result<IncMatrix, CartanError> {
    if x.is_empty() {
        return Err(CartanError::EmptyBase);
    }
    let mut points = x.to_vec();
    points.sort_unstable();
    for w in points.windows(2) {
        if w[0] == w[1] {
            return Err(CartanError::RepeatedPoint(w[0]));
        }
    }
    for &p in &points {
        if p >= lat.points().len() {
            return Err(CartanError::PointOutOfRange(p));
        }
        if lat.multiplicity(p) < 3 {
            return Err(CartanError::NotMultiplePoint(p));
        }
    }
    let mut used = vec![false; lat.n_lines()];
    for &p in &points {
        for &l in &lat.point(p).lines {
            used[l] = true;
        }
    }
    let lines: Vec<usize> = (0..lat.n_lines()).filter(|&l| used[l]).collect();
    let entries = points
        .iter()
        .map(|&p| lines.iter().map(|&l| lat.is_on(p, l) as u8).collect())
        .collect();
    Ok(IncMatrix {
        points,
        lines,
        entries,
    })
}

/// `Q = JᵀJ - E` where `E` is the all-ones matrix.
pub fn cartan_matrix(j: &IncMatrix) -> Vec<Vec<i64>> {
    let n = j.cols();
    let mut q = vec![vec![-1i64; n]; n];
    for row in &j.entries {
        for a in 0..n {
            if row[a] == 0 {
                continue;
            }
            for b in 0..n {
                q[a][b] += row[b] as i64;
            }
        }
    }
    q
}

/// Connected components of the graph joining `a` and `b` whenever
/// `q[a][b] != 0`. Components are sorted and listed by smallest member.
pub fn block_decompose(q: &[Vec<i64>]) -> Vec<Vec<usize>> {
    let n = q.len();
    let mut comp = vec![usize::MAX; n];
    let mut blocks = Vec::new();
    for s in 0..n {
        if comp[s] != usize::MAX {
            continue;
        }
        let id = blocks.len();
        let mut members = vec![s];
        comp[s] = id;
        let mut i = 0;
        while i < members.len() {
            let a = members[i];
            for b in 0..n {
                if b != a && comp[b] == usize::MAX && (q[a][b] != 0 || q[b][a] != 0) {
                    comp[b] = id;
                    members.push(b);
                }
            }
            i += 1;
        }
        members.sort_unstable();
        blocks.push(members);
    }
    blocks
}

/// Principal submatrix on the given indices.
pub fn submatrix(q: &[Vec<i64>], idx: &[usize]) -> Vec<Vec<i64>> {
    idx.iter()
        .map(|&a| idx.iter().map(|&b| q[a][b]).collect())
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum VinbergType {
    Finite,
    /// Primitive kernel vector with strictly positive entries.
    Affine(Vec<BigInt>),
    Indefinite,
}

impl VinbergType {
    pub fn is_affine(&self) -> bool {
        matches!(self, VinbergType::Affine(_))
    }

    pub fn name(&self) -> &'static str {
        match self {
            VinbergType::Finite => "finite",
            VinbergType::Affine(_) => "affine",
            VinbergType::Indefinite => "indefinite",
        }
    }
}

/// Vinberg type of an indecomposable symmetric generalized Cartan matrix.
pub fn vinberg_classify(block: &[Vec<i64>]) -> Result<VinbergType, ClassifyError> {
    let n = block.len();
    if block.iter().any(|r| r.len() != n) {
        return Err(ClassifyError::NotSymmetric);
    }
    for a in 0..n {
        for b in 0..n {
            if block[a][b] != block[b][a] {
                return Err(ClassifyError::NotSymmetric);
            }
            if a != b && block[a][b] > 0 {
                return Err(ClassifyError::PositiveOffDiagonal(a, b));
            }
        }
    }
    let big: Vec<Vec<BigInt>> = block
        .iter()
        .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
        .collect();
    if n > 0
        && leading_principal_minors(&big)
            .iter()
            .all(|m| m.is_positive())
    {
        return Ok(VinbergType::Finite);
    }
    let ker = rational_kernel(&to_rational(block), n);
    if ker.len() == 1 {
        let u = &ker[0];
        if u.iter().all(|x| x.is_positive()) {
            return Ok(VinbergType::Affine(u.clone()));
        }
        if u.iter().all(|x| x.is_negative()) {
            return Ok(VinbergType::Affine(u.iter().map(|x| -x).collect()));
        }
    }
    Ok(VinbergType::Indefinite)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CartanBlock {
    /// Positions in `L'` (columns of `J`).
    pub positions: Vec<usize>,
    /// The corresponding line indices.
    pub lines: Vec<usize>,
    pub kind: VinbergType,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CartanDecomp {
    pub j: IncMatrix,
    pub q: Vec<Vec<i64>>,
    pub blocks: Vec<CartanBlock>,
}

impl CartanDecomp {
    pub fn all_affine(&self) -> bool {
        self.blocks.iter().all(|b| b.kind.is_affine())
    }
}

/// Builds and classifies `Q(X)`.
pub fn decompose(lat: &IncidenceLattice, x: &[usize]) -> Result<CartanDecomp, CartanError> {
    let j = incidence_matrix(lat, x)?;
    let q = cartan_matrix(&j);
    let blocks = block_decompose(&q)
        .into_iter()
        .map(|positions| {
            let kind = vinberg_classify(&submatrix(&q, &positions))
                .expect("Q(X) has off-diagonal entries in {-1, 0}");
            let lines = positions.iter().map(|&p| j.lines[p]).collect();
            CartanBlock {
                positions,
                lines,
                kind,
            }
        })
        .collect();
    Ok(CartanDecomp { j, q, blocks })
}
