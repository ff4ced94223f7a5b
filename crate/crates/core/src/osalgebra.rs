//! Degrees one and two of the Orlik-Solomon algebra over Q.
//!
//! `A²` has one basis element `e_{j₀} e_j` for every intersection point `p`
//! and every line `j ≠ j₀` through `p`, where `j₀` is the smallest line
//! through `p`. Any other product of two lines through `p` reduces by the
//! relation `e_i e_j = e_{j₀} e_j - e_{j₀} e_i`.

use std::collections::HashMap;
use std::ops::{Add, Sub};

use num_traits::Zero;

use crate::arrangement::IncidenceLattice;
use crate::exactfield::Rational;
use crate::linalg::rank;
use crate::multinet::Multinet;

/// A degree-one element `Σ a_ℓ ω_ℓ`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct A1Vector(pub Vec<Rational>);

impl A1Vector {
    pub fn zero(n: usize) -> Self {
        A1Vector(vec![Rational::zero(); n])
    }

    pub fn from_ints(v: &[i64]) -> Self {
        A1Vector(
            v.iter()
                .map(|&x| Rational::from_integer(x.into()))
                .collect(),
        )
    }

    /// The generator `ω_ℓ`.
    pub fn basis(n: usize, line: usize) -> Self {
        let mut v = Self::zero(n);
        v.0[line] = Rational::from_integer(1.into());
        v
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn scale(&self, c: &Rational) -> Self {
        A1Vector(self.0.iter().map(|x| x * c).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }
}

impl Add for &A1Vector {
    type Output = A1Vector;
    fn add(self, o: &A1Vector) -> A1Vector {
        A1Vector(self.0.iter().zip(&o.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &A1Vector {
    type Output = A1Vector;
    fn sub(self, o: &A1Vector) -> A1Vector {
        A1Vector(self.0.iter().zip(&o.0).map(|(a, b)| a - b).collect())
    }
}

/// Coordinates of a degree-two element in the basis of [`A2Basis`].
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct A2Vector(pub Vec<Rational>);

impl A2Vector {
    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        A2Vector(self.0.iter().map(|x| x * c).collect())
    }
}

impl Add for &A2Vector {
    type Output = A2Vector;
    fn add(self, o: &A2Vector) -> A2Vector {
        A2Vector(self.0.iter().zip(&o.0).map(|(a, b)| a + b).collect())
    }
}

/// The basis `{e_{j₀} e_j}` of `A²`, listed point by point in lattice order.
#[derive(Clone, Debug)]
pub struct A2Basis {
    /// `(point, j₀, j)` for each basis element.
    pub elements: Vec<(usize, usize, usize)>,
    index: HashMap<(usize, usize), usize>,
    n_lines: usize,
}

impl A2Basis {
    pub fn new(lat: &IncidenceLattice) -> Self {
        let mut elements = Vec::new();
        let mut index = HashMap::new();
        for (p, pt) in lat.points().iter().enumerate() {
            let j0 = pt.lines[0];
            for &j in &pt.lines[1..] {
                index.insert((j0, j), elements.len());
                elements.push((p, j0, j));
            }
        }
        A2Basis {
            elements,
            index,
            n_lines: lat.n_lines(),
        }
    }

    pub fn dim(&self) -> usize {
        self.elements.len()
    }

    /// `a ∧ b` in this basis.
    pub fn wedge(&self, lat: &IncidenceLattice, a: &A1Vector, b: &A1Vector) -> A2Vector {
        assert_eq!(a.len(), self.n_lines);
        assert_eq!(b.len(), self.n_lines);
        let mut out = vec![Rational::zero(); self.dim()];
        for i in 0..self.n_lines {
            for j in i + 1..self.n_lines {
                let c = &a.0[i] * &b.0[j] - &a.0[j] * &b.0[i];
                if c.is_zero() {
                    continue;
                }
                let j0 = lat.point(lat.point_of(i, j)).lines[0];
                out[self.index[&(j0, j)]] += &c;
                if i != j0 {
                    out[self.index[&(j0, i)]] -= &c;
                }
            }
        }
        A2Vector(out)
    }
}

/// `a ∧ b`.
pub fn wedge(a: &A1Vector, b: &A1Vector, lat: &IncidenceLattice) -> A2Vector {
    A2Basis::new(lat).wedge(lat, a, b)
}

/// True when every pairwise product vanishes.
pub fn isotropic_check(vectors: &[A1Vector], lat: &IncidenceLattice) -> bool {
    let basis = A2Basis::new(lat);
    for (i, a) in vectors.iter().enumerate() {
        for b in &vectors[i + 1..] {
            if !basis.wedge(lat, a, b).is_zero() {
                return false;
            }
        }
    }
    true
}

/// `u_i = Σ_{ℓ ∈ class i} m(ℓ) ω_ℓ`.
pub fn class_vectors(mn: &Multinet) -> Vec<A1Vector> {
    let n = mn.mult().len();
    mn.classes()
        .iter()
        .map(|c| {
            let mut v = A1Vector::zero(n);
            for &l in c {
                v.0[l] = Rational::from_integer(mn.mult()[l].into());
            }
            v
        })
        .collect()
}

/// The vectors `u_i - u_1`, `i = 2..k`, spanning the resonance component of
/// the multinet.
pub fn resonance_from_multinet(mn: &Multinet, _lat: &IncidenceLattice) -> Vec<A1Vector> {
    let u = class_vectors(mn);
    u[1..].iter().map(|ui| ui - &u[0]).collect()
}

/// Dimension of the span of a family of degree-one vectors.
pub fn span_dim(vectors: &[A1Vector]) -> usize {
    match vectors.first() {
        None => 0,
        Some(v) => rank(
            &vectors.iter().map(|v| v.0.clone()).collect::<Vec<_>>(),
            v.len(),
        ),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arrangement::{build_lattice, MultiArrangement, ProjLine};
    use crate::corpus;
    use crate::multinet::discover;

    fn r(n: i64) -> Rational {
        Rational::from_integer(n.into())
    }

    #[test]
    fn triangle_single_product() {
        let arr = MultiArrangement::simple(
            1,
            vec![
                ProjLine::from_ints("a", 1, 0, 0).unwrap(),
                ProjLine::from_ints("b", 0, 1, 0).unwrap(),
                ProjLine::from_ints("c", 0, 0, 1).unwrap(),
            ],
        )
        .unwrap();
        let lat = build_lattice(&arr);
        let basis = A2Basis::new(&lat);
        assert_eq!(basis.dim(), 3);
        let w = wedge(&A1Vector::basis(3, 0), &A1Vector::basis(3, 1), &lat);
        let p = lat.point_of(0, 1);
        let k = basis.elements.iter().position(|&(q, _, _)| q == p).unwrap();
        let mut expect = vec![r(0); 3];
        expect[k] = r(1);
        assert_eq!(w.0, expect);
        assert!(wedge(&A1Vector::basis(3, 2), &A1Vector::basis(3, 2), &lat).is_zero());
    }

    #[test]
    fn reduction_rule_at_triple_point() {
        // Three concurrent lines: e1 e2 = e0 e2 - e0 e1.
        let lat = build_lattice(&corpus::concurrent(3));
        let w = wedge(&A1Vector::basis(3, 1), &A1Vector::basis(3, 2), &lat);
        assert_eq!(w.0, vec![r(-1), r(1)]);
    }

    #[test]
    fn ceva3_resonance() {
        let lat = build_lattice(&corpus::ceva(3));
        let found = discover(&lat, 1 << 20).unwrap();
        let mn = found
            .iter()
            .find(|m| m.classes() == [vec![0, 1, 2], vec![3, 4, 5], vec![6, 7, 8]])
            .unwrap();
        let v = resonance_from_multinet(mn, &lat);
        assert_eq!(v.len(), 2);
        assert!(isotropic_check(&v, &lat));
        assert_eq!(span_dim(&v), 2);
        assert_eq!(v[0], A1Vector::from_ints(&[-1, -1, -1, 1, 1, 1, 0, 0, 0]));
        assert_eq!(v[1], A1Vector::from_ints(&[-1, -1, -1, 0, 0, 0, 1, 1, 1]));
    }

    #[test]
    fn generic_pair_is_not_isotropic() {
        let lat = build_lattice(&corpus::concurrent(3));
        let a = A1Vector::from_ints(&[1, 2, 0]);
        let b = A1Vector::from_ints(&[0, 1, 3]);
        assert!(!isotropic_check(&[a, b], &lat));
    }
}
