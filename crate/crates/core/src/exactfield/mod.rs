//! Exact arithmetic over Q and the cyclotomic fields Q(ζₙ).
//!
//! A [`CycloElem`] stores its coordinates in the power basis `1, ζ, …, ζ^{φ(n)-1}`
//! modulo the `n`-th cyclotomic polynomial. Every operation returns a reduced
//! element, so two elements of the same order are equal exactly when their
//! coefficient vectors are. Elements of different orders are compared and
//! combined after promotion to the least common multiple of the orders.

mod cyclotomic;
mod parse;

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

pub use cyclotomic::{cyclotomic_polynomial, euler_phi};
pub use parse::{parse_scalar, ScalarParseError};

use crate::linalg;

/// Arbitrary precision rational number, always in lowest terms.
pub type Rational = num_rational::BigRational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FieldError {
    #[error("division by zero")]
    DivisionByZero,
}

/// An exact element of Q(ζₙ).
#[derive(Clone, Debug)]
pub struct CycloElem {
    order: u32,
    coeffs: Vec<Rational>,
}

/// Reduces a polynomial (lowest degree first) modulo Φₙ.
fn reduce(order: u32, mut poly: Vec<Rational>) -> Vec<Rational> {
    let phi = cyclotomic_polynomial(order);
    let deg = phi.len() - 1;
    if poly.len() > deg {
        for i in (deg..poly.len()).rev() {
            if poly[i].is_zero() {
                continue;
            }
            let c = std::mem::replace(&mut poly[i], Rational::zero());
            // x^i = x^{i-deg} * x^deg and x^deg = -(lower terms of Φ)
            for (j, pj) in phi[..deg].iter().enumerate() {
                if !pj.is_zero() {
                    poly[i - deg + j] -= &c * Rational::from_integer(pj.clone());
                }
            }
        }
        poly.truncate(deg);
    }
    poly.resize(deg, Rational::zero());
    poly
}

impl CycloElem {
    /// Builds an element of Q(ζₙ) from an arbitrary-length polynomial in ζ.
    pub fn from_poly(order: u32, poly: Vec<Rational>) -> Self {
        assert!(order > 0, "cyclotomic order must be positive");
        CycloElem {
            order,
            coeffs: reduce(order, poly),
        }
    }

    pub fn zero() -> Self {
        Self::from_rational(Rational::zero())
    }

    pub fn one() -> Self {
        Self::from_rational(Rational::one())
    }

    pub fn from_rational(q: Rational) -> Self {
        CycloElem {
            order: 1,
            coeffs: vec![q],
        }
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rational(Rational::from_integer(n.into()))
    }

    pub fn from_ratio(num: i64, den: i64) -> Self {
        Self::from_rational(Rational::new(num.into(), den.into()))
    }

    /// The primitive root ζₙ = e^{2πi/n}, as an element of order `n`.
    pub fn zeta(order: u32) -> Self {
        Self::zeta_pow(order, 1)
    }

    /// ζₙ^k as an element of order `n`.
    pub fn zeta_pow(order: u32, k: i64) -> Self {
        let e = k.rem_euclid(order as i64) as usize;
        let mut poly = vec![Rational::zero(); e + 1];
        poly[e] = Rational::one();
        Self::from_poly(order, poly)
    }

    /// ζₙ^k, stored at order 1 when `n ≤ 2` so that ±1 stay plain rationals.
    pub fn root_of_unity(order: u32, k: i64) -> Self {
        match order {
            1 => Self::one(),
            2 if k.rem_euclid(2) == 0 => Self::one(),
            2 => Self::from_int(-1),
            _ => Self::zeta_pow(order, k),
        }
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    /// Power-basis coordinates, length φ(order).
    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        *self == Self::one()
    }

    /// The rational value, if this element lies in Q.
    pub fn to_rational(&self) -> Option<Rational> {
        let q = self.try_demote(1)?;
        Some(q.coeffs[0].clone())
    }

    /// Re-expresses this element in Q(ζ_target). `target` must be a multiple
    /// of the current order.
    pub fn promote(&self, target: u32) -> Self {
        assert!(
            target % self.order == 0,
            "cannot promote order {} to {}",
            self.order,
            target
        );
        if target == self.order {
            return self.clone();
        }
        let step = (target / self.order) as usize;
        let mut poly = vec![Rational::zero(); (self.coeffs.len().max(1) - 1) * step + 1];
        for (j, c) in self.coeffs.iter().enumerate() {
            poly[j * step] = c.clone();
        }
        Self::from_poly(target, poly)
    }

    /// Returns the preimage of this element in Q(ζ_target) when it lies in
    /// the image of that subfield; `target` must divide the current order.
    pub fn try_demote(&self, target: u32) -> Option<Self> {
        assert!(
            self.order % target == 0,
            "demotion target must divide the order"
        );
        if target == self.order {
            return Some(self.clone());
        }
        let dim = euler_phi(target);
        // Column j is ζ_target^j written in Q(ζ_order).
        let columns: Vec<CycloElem> = (0..dim)
            .map(|j| Self::zeta_pow(target, j as i64).promote(self.order))
            .collect();
        let rows: Vec<Vec<Rational>> = (0..self.coeffs.len())
            .map(|r| columns.iter().map(|c| c.coeffs[r].clone()).collect())
            .collect();
        let x = linalg::solve(&rows, &self.coeffs, dim)?;
        Some(CycloElem {
            order: target,
            coeffs: x,
        })
    }

    /// Smallest order whose field contains this element, searched among the
    /// divisors of the current order.
    pub fn minimal_order(&self) -> u32 {
        (1..=self.order)
            .filter(|d| self.order % d == 0)
            .find(|&d| self.try_demote(d).is_some())
            .unwrap_or(self.order)
    }

    fn lifted(&self, other: &Self) -> (Self, Self) {
        let l = cyclotomic::lcm(self.order, other.order);
        (self.promote(l), other.promote(l))
    }

    /// Multiplicative inverse, solving `a · v = 1` in the multiplication
    /// matrix of `a` on the power basis.
    pub fn inv(&self) -> Result<Self, FieldError> {
        if self.is_zero() {
            return Err(FieldError::DivisionByZero);
        }
        if self.order == 1 {
            return Ok(Self::from_rational(self.coeffs[0].recip()));
        }
        let dim = self.coeffs.len();
        let columns: Vec<CycloElem> = (0..dim)
            .map(|j| self * &Self::zeta_pow(self.order, j as i64))
            .collect();
        let rows: Vec<Vec<Rational>> = (0..dim)
            .map(|r| columns.iter().map(|c| c.coeffs[r].clone()).collect())
            .collect();
        let mut e0 = vec![Rational::zero(); dim];
        e0[0] = Rational::one();
        let v = linalg::solve(&rows, &e0, dim).expect("nonzero field element is invertible");
        Ok(CycloElem {
            order: self.order,
            coeffs: v,
        })
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self, FieldError> {
        Ok(self * &other.inv()?)
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one().promote(self.order);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Complex conjugate, induced by ζ ↦ ζ⁻¹.
    pub fn conj(&self) -> Self {
        let n = self.order;
        let mut acc = Self::zero().promote(n);
        for (j, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            acc = &acc + &(&Self::zeta_pow(n, -(j as i64)) * &Self::from_rational(c.clone()));
        }
        acc
    }

    /// True when the complex embedding ζₙ ↦ e^{2πi/n} is real.
    pub fn is_real(&self) -> bool {
        *self == self.conj()
    }

    /// Floating approximation under ζₙ ↦ e^{2πi/n}.
    ///
    /// Evaluation is carried out in IEEE double precision, so requested
    /// precisions above 53 bits are served at 53 bits.
    pub fn embed_complex(&self, _precision: u32) -> Complex64 {
        let n = self.order as f64;
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(j, c)| {
                let theta = 2.0 * std::f64::consts::PI * (j as f64) / n;
                let cf = c.to_f64().unwrap_or(f64::NAN);
                Complex64::new(cf * theta.cos(), cf * theta.sin())
            })
            .sum()
    }

    /// Multiplies by a rational scalar.
    pub fn scale(&self, q: &Rational) -> Self {
        CycloElem {
            order: self.order,
            coeffs: self.coeffs.iter().map(|c| c * q).collect(),
        }
    }

    /// Formats the element as a scalar literal in the variable `var`.
    pub fn to_literal(&self, var: &str) -> String {
        let mut out = String::new();
        for (j, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let abs = c.abs();
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let mono = match j {
                0 => String::new(),
                1 => var.to_string(),
                _ => format!("{var}^{j}"),
            };
            if mono.is_empty() {
                out.push_str(&abs.to_string());
            } else if abs.is_one() {
                out.push_str(&mono);
            } else {
                out.push_str(&format!("{abs}*{mono}"));
            }
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }
}

impl fmt::Display for CycloElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_literal("z"))
    }
}

impl PartialEq for CycloElem {
    fn eq(&self, other: &Self) -> bool {
        if self.order == other.order {
            return self.coeffs == other.coeffs;
        }
        let (a, b) = self.lifted(other);
        a.coeffs == b.coeffs
    }
}

impl Eq for CycloElem {}

/// Lexicographic order on power-basis coordinates after promotion to a common
/// order. This is a total order on any set of elements sharing one order;
/// callers that sort should promote to a common order first.
impl Ord for CycloElem {
    fn cmp(&self, other: &Self) -> Ordering {
        if self.order == other.order {
            return self.coeffs.cmp(&other.coeffs);
        }
        let (a, b) = self.lifted(other);
        a.coeffs.cmp(&b.coeffs)
    }
}

impl PartialOrd for CycloElem {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl<'a> Add<&'a CycloElem> for &'a CycloElem {
    type Output = CycloElem;
    fn add(self, rhs: &CycloElem) -> CycloElem {
        let (a, b) = self.lifted(rhs);
        CycloElem {
            order: a.order,
            coeffs: a.coeffs.iter().zip(&b.coeffs).map(|(x, y)| x + y).collect(),
        }
    }
}

impl<'a> Sub<&'a CycloElem> for &'a CycloElem {
    type Output = CycloElem;
    fn sub(self, rhs: &CycloElem) -> CycloElem {
        let (a, b) = self.lifted(rhs);
        CycloElem {
            order: a.order,
            coeffs: a.coeffs.iter().zip(&b.coeffs).map(|(x, y)| x - y).collect(),
        }
    }
}

impl<'a> Mul<&'a CycloElem> for &'a CycloElem {
    type Output = CycloElem;
    fn mul(self, rhs: &CycloElem) -> CycloElem {
        let (a, b) = self.lifted(rhs);
        if a.order == 1 {
            return CycloElem::from_rational(&a.coeffs[0] * &b.coeffs[0]);
        }
        let mut prod = vec![Rational::zero(); a.coeffs.len() + b.coeffs.len() - 1];
        for (i, x) in a.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.coeffs.iter().enumerate() {
                if !y.is_zero() {
                    prod[i + j] += x * y;
                }
            }
        }
        CycloElem::from_poly(a.order, prod)
    }
}

impl<'a> Div<&'a CycloElem> for &'a CycloElem {
    type Output = CycloElem;
    /// Panics on division by zero; use [`CycloElem::checked_div`] otherwise.
    fn div(self, rhs: &CycloElem) -> CycloElem {
        self.checked_div(rhs).expect("division by zero")
    }
}

impl Neg for &CycloElem {
    type Output = CycloElem;
    fn neg(self) -> CycloElem {
        CycloElem {
            order: self.order,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<CycloElem> for CycloElem {
            type Output = CycloElem;
            fn $m(self, rhs: CycloElem) -> CycloElem {
                (&self).$m(&rhs)
            }
        }
        impl<'a> $tr<&'a CycloElem> for CycloElem {
            type Output = CycloElem;
            fn $m(self, rhs: &CycloElem) -> CycloElem {
                (&self).$m(rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
forward_owned!(Div, div);

impl Neg for CycloElem {
    type Output = CycloElem;
    fn neg(self) -> CycloElem {
        -&self
    }
}

impl From<i64> for CycloElem {
    fn from(n: i64) -> Self {
        Self::from_int(n)
    }
}

impl From<Rational> for CycloElem {
    fn from(q: Rational) -> Self {
        Self::from_rational(q)
    }
}

impl From<BigInt> for CycloElem {
    fn from(n: BigInt) -> Self {
        Self::from_rational(Rational::from_integer(n))
    }
}

impl std::iter::Sum for CycloElem {
    fn sum<I: Iterator<Item = CycloElem>>(iter: I) -> Self {
        iter.fold(CycloElem::zero(), |acc, x| &acc + &x)
    }
}
