//! Ternary forms and the realization of a multinet as a pencil of curves
//! whose completely reducible fibers are the class products.

use std::fmt;

use num_traits::{Signed, Zero};
use thiserror::Error;

use crate::arrangement::{IncidenceLattice, MultiArrangement, ProjLine, ProjPoint};
use crate::exactfield::CycloElem;
use crate::multinet::{verify, Axiom, Multinet};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum PencilError {
    #[error("abstract arrangements have no coordinates to expand")]
    Abstract,
    #[error("fibers have different degrees ({0} and {1})")]
    DegreeMismatch(u32, u32),
    #[error("at least three fibers are needed, got {0}")]
    TooFewFibers(usize),
    #[error("axiom (iii) fails at point {point}")]
    Inconsistent { point: usize },
    #[error("fiber {fiber} is not in the pencil spanned by the first two")]
    NotCollinear {
        fiber: usize,
        report: Box<PencilReport>,
    },
    #[error("fiber {fiber} does not vanish at base point {point}")]
    BaseNotVanishing { fiber: usize, point: usize },
}

/// A homogeneous form of degree `d` in `x, y, z`. Coefficients are indexed by
/// the monomials `x^a y^b z^c` in graded lex order with `x > y > z`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CurveVec {
    degree: u32,
    coeffs: Vec<CycloElem>,
}

/// Position of `x^a y^b z^{d-a-b}` among the monomials of degree `d`.
pub fn monomial_index(d: u32, a: u32, b: u32) -> usize {
    let (d, a, b) = (d as usize, a as usize, b as usize);
    (d - a) * (d - a + 1) / 2 + (d - a - b)
}

/// Exponent triples of degree `d` in coefficient order.
pub fn monomials(d: u32) -> Vec<[u32; 3]> {
    let mut out = Vec::with_capacity(((d + 1) * (d + 2) / 2) as usize);
    for a in (0..=d).rev() {
        for b in (0..=d - a).rev() {
            out.push([a, b, d - a - b]);
        }
    }
    out
}

impl CurveVec {
    pub fn zero(degree: u32) -> Self {
        let n = ((degree + 1) * (degree + 2) / 2) as usize;
        CurveVec {
            degree,
            coeffs: vec![CycloElem::zero(); n],
        }
    }

    pub fn constant(c: CycloElem) -> Self {
        CurveVec {
            degree: 0,
            coeffs: vec![c],
        }
    }

    /// The form `αx + βy + γz`.
    pub fn linear(c: &[CycloElem; 3]) -> Self {
        CurveVec {
            degree: 1,
            coeffs: c.to_vec(),
        }
    }

    pub fn from_coeffs(degree: u32, coeffs: Vec<CycloElem>) -> Self {
        assert_eq!(coeffs.len(), ((degree + 1) * (degree + 2) / 2) as usize);
        CurveVec { degree, coeffs }
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn coeffs(&self) -> &[CycloElem] {
        &self.coeffs
    }

    pub fn coeff(&self, a: u32, b: u32) -> &CycloElem {
        &self.coeffs[monomial_index(self.degree, a, b)]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(CycloElem::is_zero)
    }

    pub fn mul(&self, other: &CurveVec) -> CurveVec {
        let mut out = CurveVec::zero(self.degree + other.degree);
        let ma = monomials(self.degree);
        let mb = monomials(other.degree);
        for (ea, ca) in ma.iter().zip(&self.coeffs) {
            if ca.is_zero() {
                continue;
            }
            for (eb, cb) in mb.iter().zip(&other.coeffs) {
                if cb.is_zero() {
                    continue;
                }
                let i = monomial_index(out.degree, ea[0] + eb[0], ea[1] + eb[1]);
                out.coeffs[i] = &out.coeffs[i] + &(ca * cb);
            }
        }
        out
    }

    pub fn pow(&self, e: u32) -> CurveVec {
        let mut acc = CurveVec::constant(CycloElem::one());
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn add(&self, other: &CurveVec) -> CurveVec {
        assert_eq!(self.degree, other.degree);
        CurveVec {
            degree: self.degree,
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn scale(&self, c: &CycloElem) -> CurveVec {
        CurveVec {
            degree: self.degree,
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    pub fn eval(&self, p: &ProjPoint) -> CycloElem {
        let [x, y, z] = p.coords();
        monomials(self.degree)
            .iter()
            .zip(&self.coeffs)
            .filter(|(_, c)| !c.is_zero())
            .map(|(e, c)| c * &(&(&x.pow(e[0]) * &y.pow(e[1])) * &z.pow(e[2])))
            .sum()
    }

    /// Scales the form so its first nonzero coefficient is 1. Returns the
    /// normalized form and the factor `c` with `self = c * normalized`.
    pub fn normalized(&self) -> Option<(CurveVec, CycloElem)> {
        let lead = self.coeffs.iter().find(|c| !c.is_zero())?.clone();
        let inv = lead.inv().expect("nonzero");
        Some((self.scale(&inv), lead))
    }
}

impl fmt::Display for CurveVec {
    /// Roots of unity are written `w`, so `x, y, z` stay free for monomials.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (e, c) in monomials(self.degree).iter().zip(&self.coeffs) {
            if c.is_zero() {
                continue;
            }
            let mut mono = String::new();
            for (v, &k) in ["x", "y", "z"].iter().zip(e) {
                match k {
                    0 => {}
                    1 => mono.push_str(v),
                    _ => mono.push_str(&format!("{v}^{k}")),
                }
            }
            let terms = c.coeffs().iter().filter(|q| !q.is_zero()).count();
            let neg = terms == 1
                && c.coeffs()
                    .iter()
                    .find(|q| !q.is_zero())
                    .is_some_and(|q| q.is_negative());
            let body = if neg {
                (-c).to_literal("w")
            } else {
                c.to_literal("w")
            };
            let coef = if terms > 1 { format!("({body})") } else { body };
            let sign = if neg { "-" } else { "+" };
            if first {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            match (coef.as_str(), mono.is_empty()) {
                (_, true) => f.write_str(&coef)?,
                ("1", false) => f.write_str(&mono)?,
                (_, false) => write!(f, "{coef}*{mono}")?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

/// `Π α_ℓ^{m_ℓ}` over the given lines.
pub fn expand_lines(lines: &[(&ProjLine, u32)]) -> CurveVec {
    lines
        .iter()
        .fold(CurveVec::constant(CycloElem::one()), |acc, (l, m)| {
            acc.mul(&CurveVec::linear(l.coeffs()).pow(*m))
        })
}

/// The completely reducible curve `C_i = Π_{ℓ ∈ class} α_ℓ^{m(ℓ)}`.
pub fn expand_class(
    arr: &MultiArrangement,
    class: &[usize],
    mult: &[u32],
) -> Result<CurveVec, PencilError> {
    let lines = arr.lines().map_err(|_| PencilError::Abstract)?;
    let factors: Vec<(&ProjLine, u32)> = class.iter().map(|&l| (&lines[l], mult[l])).collect();
    Ok(expand_lines(&factors))
}

/// Whether a family of forms lies on one line in the space of forms.
#[derive(Clone, Debug, PartialEq)]
pub struct Collinearity {
    /// Dimension of the span of the first two forms.
    pub span_dim: usize,
    /// `(a, b)` with `C_i = a C_1 + b C_2`, when such scalars exist.
    pub scalars: Vec<Option<(CycloElem, CycloElem)>>,
    pub collinear: bool,
}

pub fn collinear(fibers: &[CurveVec]) -> Result<Collinearity, PencilError> {
    if fibers.len() < 3 {
        return Err(PencilError::TooFewFibers(fibers.len()));
    }
    let d = fibers[0].degree;
    if let Some(f) = fibers.iter().find(|f| f.degree != d) {
        return Err(PencilError::DegreeMismatch(d, f.degree));
    }
    let (c1, c2) = (&fibers[0].coeffs, &fibers[1].coeffs);
    let n = c1.len();
    let mut minor = None;
    'search: for r in 0..n {
        for s in r + 1..n {
            let det = &(&c1[r] * &c2[s]) - &(&c1[s] * &c2[r]);
            if !det.is_zero() {
                minor = Some((r, s, det));
                break 'search;
            }
        }
    }
    let Some((r, s, det)) = minor else {
        return Ok(Collinearity {
            span_dim: if fibers[0].is_zero() && fibers[1].is_zero() {
                0
            } else {
                1
            },
            scalars: vec![None; fibers.len()],
            collinear: false,
        });
    };
    let inv = det.inv().expect("nonzero minor");
    let scalars: Vec<Option<(CycloElem, CycloElem)>> = fibers
        .iter()
        .map(|f| {
            let ci = &f.coeffs;
            let a = &(&(&ci[r] * &c2[s]) - &(&ci[s] * &c2[r])) * &inv;
            let b = &(&(&c1[r] * &ci[s]) - &(&c1[s] * &ci[r])) * &inv;
            let fits = (0..n).all(|t| &(&a * &c1[t]) + &(&b * &c2[t]) == ci[t]);
            fits.then_some((a, b))
        })
        .collect();
    let collinear = scalars.iter().all(Option::is_some);
    Ok(Collinearity {
        span_dim: 2,
        scalars,
        collinear,
    })
}

/// `n_p` for every base point, computed class by class from the line
/// multiplicities.
pub fn base_weights(
    mn: &Multinet,
    lat: &IncidenceLattice,
) -> Result<Vec<(usize, u64)>, PencilError> {
    mn.base()
        .iter()
        .map(|&p| {
            let per_class: Vec<u64> = mn
                .classes()
                .iter()
                .map(|c| {
                    c.iter()
                        .filter(|&&l| lat.is_on(p, l))
                        .map(|&l| mn.mult()[l] as u64)
                        .sum()
                })
                .collect();
            if per_class.iter().all(|&w| w == per_class[0]) {
                Ok((p, per_class[0]))
            } else {
                Err(PencilError::Inconsistent { point: p })
            }
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq)]
pub struct PencilReport {
    /// Class products, each scaled to leading coefficient 1.
    pub fibers: Vec<CurveVec>,
    /// `(a_i, b_i)` with `C_i = a_i C_1 + b_i C_2` for the normalized fibers.
    pub scalars: Vec<Option<(CycloElem, CycloElem)>>,
    pub collinear: bool,
    pub connected: bool,
    /// Every fiber vanishes at every base point.
    pub base_vanishing: bool,
    pub verdict: String,
}

/// Expands every class, checks that the products span a pencil and that the
/// pencil vanishes on the base locus.
pub fn ceva_verdict(
    mn: &Multinet,
    lat: &IncidenceLattice,
    arr: &MultiArrangement,
) -> Result<PencilReport, PencilError> {
    if arr.is_abstract() {
        return Err(PencilError::Abstract);
    }
    let mut fibers = Vec::with_capacity(mn.k());
    for c in mn.classes() {
        let (f, _) = expand_class(arr, c, mn.mult())?
            .normalized()
            .expect("a product of nonzero forms is nonzero");
        fibers.push(f);
    }
    let col = collinear(&fibers)?;
    let connected = verify(mn.as_weak(), lat)
        .axioms
        .iter()
        .any(|a| a.axiom == Axiom::Connectivity && a.passed);
    let mut vanishing = None;
    'outer: for (i, f) in fibers.iter().enumerate() {
        for &p in mn.base() {
            let q = lat.point(p).coords.as_ref().expect("coordinate lattice");
            if !f.eval(q).is_zero() {
                vanishing = Some((i, p));
                break 'outer;
            }
        }
    }
    let verdict = if col.collinear && connected && vanishing.is_none() {
        format!(
            "Ceva pencil realized: {} completely reducible fibers of degree {}",
            mn.k(),
            mn.d()
        )
    } else {
        "not realized".to_string()
    };
    let report = PencilReport {
        fibers,
        scalars: col.scalars,
        collinear: col.collinear,
        connected,
        base_vanishing: vanishing.is_none(),
        verdict,
    };
    if !report.collinear {
        let fiber = report.scalars.iter().position(Option::is_none).unwrap_or(0);
        return Err(PencilError::NotCollinear {
            fiber,
            report: Box::new(report),
        });
    }
    if let Some((fiber, point)) = vanishing {
        return Err(PencilError::BaseNotVanishing { fiber, point });
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;

    fn lin(a: i64, b: i64, c: i64) -> CurveVec {
        CurveVec::linear(&[a.into(), b.into(), c.into()])
    }

    #[test]
    fn monomial_order() {
        assert_eq!(
            monomials(2),
            vec![
                [2, 0, 0],
                [1, 1, 0],
                [1, 0, 1],
                [0, 2, 0],
                [0, 1, 1],
                [0, 0, 2]
            ]
        );
        for d in 0..6 {
            for (i, e) in monomials(d).iter().enumerate() {
                assert_eq!(monomial_index(d, e[0], e[1]), i);
            }
        }
    }

    #[test]
    fn b3_class_expansion() {
        // (x - y)(x + y) z^2 = x^2 z^2 - y^2 z^2
        let f = lin(1, -1, 0).mul(&lin(1, 1, 0)).mul(&lin(0, 0, 1).pow(2));
        assert_eq!(f.to_string(), "x^2z^2 - y^2z^2");
    }

    #[test]
    fn ceva3_first_class() {
        let arr = corpus::ceva(3);
        let f = expand_class(&arr, &[0, 1, 2], &[1; 9]).unwrap();
        assert_eq!(f.to_string(), "x^3 - y^3");
    }

    #[test]
    fn hessian_fiber() {
        let arr = corpus::hessian();
        let f = expand_class(&arr, &[3, 4, 5], &[1; 12]).unwrap();
        assert_eq!(f.to_string(), "x^3 - 3*xyz + y^3 + z^3");
    }

    #[test]
    fn cyclotomic_coefficients_print_in_parentheses() {
        let arr = corpus::hessian();
        let f = expand_class(&arr, &[9, 10, 11], &[1; 12]).unwrap();
        assert_eq!(f.to_string(), "x^3 + (3 + 3*w)*xyz + y^3 + z^3");
    }

    #[test]
    fn telescoping_fibers() {
        let c1 = lin(1, -1, 0).mul(&lin(1, 1, 0)).mul(&lin(0, 0, 1).pow(2));
        let c2 = lin(0, 1, -1).mul(&lin(0, 1, 1)).mul(&lin(1, 0, 0).pow(2));
        let c3 = lin(-1, 0, 1).mul(&lin(1, 0, 1)).mul(&lin(0, 1, 0).pow(2));
        let r = collinear(&[c1, c2, c3]).unwrap();
        assert!(r.collinear);
        let one = CycloElem::one();
        assert_eq!(r.scalars[2], Some((-&one, -&one)));
    }

    #[test]
    fn degree_mismatch() {
        let e = collinear(&[lin(1, 0, 0), lin(0, 1, 0), lin(1, 0, 0).pow(2)]).unwrap_err();
        assert_eq!(e, PencilError::DegreeMismatch(1, 2));
    }
}
