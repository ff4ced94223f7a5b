//! Exact linear algebra over Q and Z.
//!
//! Everything here works on dense row-major `Vec<Vec<_>>` matrices. Sizes in
//! this crate are small (tens of rows), so no attempt is made at sparsity.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::exactfield::Rational;

/// Reduced row echelon form. Returns the reduced matrix and the pivot columns.
pub fn rref(m: &[Vec<Rational>], ncols: usize) -> (Vec<Vec<Rational>>, Vec<usize>) {
    let mut a: Vec<Vec<Rational>> = m.to_vec();
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..ncols {
        if row == a.len() {
            break;
        }
        let Some(p) = (row..a.len()).find(|&r| !a[r][col].is_zero()) else {
            continue;
        };
        a.swap(row, p);
        let inv = a[row][col].recip();
        for v in a[row].iter_mut() {
            *v *= &inv;
        }
        let pivot_row = a[row].clone();
        for (r, other) in a.iter_mut().enumerate() {
            if r == row || other[col].is_zero() {
                continue;
            }
            let f = other[col].clone();
            for (x, p) in other.iter_mut().zip(&pivot_row) {
                *x -= &f * p;
            }
        }
        pivots.push(col);
        row += 1;
    }
    (a, pivots)
}

pub fn rank(m: &[Vec<Rational>], ncols: usize) -> usize {
    rref(m, ncols).1.len()
}

/// Some solution of `m x = b`, or `None` when the system is inconsistent.
/// Free variables are set to zero.
pub fn solve(m: &[Vec<Rational>], b: &[Rational], ncols: usize) -> Option<Vec<Rational>> {
    assert_eq!(m.len(), b.len());
    let aug: Vec<Vec<Rational>> = m
        .iter()
        .zip(b)
        .map(|(row, bi)| {
            let mut r = row.clone();
            r.push(bi.clone());
            r
        })
        .collect();
    let (red, pivots) = rref(&aug, ncols + 1);
    if pivots.last() == Some(&ncols) {
        return None;
    }
    let mut x = vec![Rational::zero(); ncols];
    for (r, &c) in pivots.iter().enumerate() {
        x[c] = red[r][ncols].clone();
    }
    Some(x)
}

/// Kernel basis over Q: one vector per free column, with a 1 in that column.
pub fn kernel(m: &[Vec<Rational>], ncols: usize) -> Vec<Vec<Rational>> {
    let (red, pivots) = rref(m, ncols);
    let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![Rational::zero(); ncols];
            v[f] = Rational::one();
            for (r, &c) in pivots.iter().enumerate() {
                v[c] = -red[r][f].clone();
            }
            v
        })
        .collect()
}

/// Scales a nonzero rational vector to a primitive integer vector whose first
/// nonzero entry is positive.
pub fn primitive_integer(v: &[Rational]) -> Vec<BigInt> {
    let den = v.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let ints: Vec<BigInt> = v.iter().map(|x| (x * &den).to_integer()).collect();
    let g = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if g.is_zero() {
        return ints;
    }
    let sign = match ints.iter().find(|x| !x.is_zero()) {
        Some(x) if x.is_negative() => -BigInt::one(),
        _ => BigInt::one(),
    };
    ints.into_iter().map(|x| x / &g * &sign).collect()
}

/// Fraction-free (Bareiss) forward elimination of an integer matrix with row
/// pivoting. Returns the echelon form and its pivot columns; every entry stays
/// integral and each pivot equals a minor of the input.
pub fn bareiss_echelon(m: &[Vec<BigInt>], ncols: usize) -> (Vec<Vec<BigInt>>, Vec<usize>) {
    let mut a = m.to_vec();
    let mut pivots = Vec::new();
    let mut prev = BigInt::one();
    let mut row = 0;
    for col in 0..ncols {
        if row == a.len() {
            break;
        }
        let Some(p) = (row..a.len()).find(|&r| !a[r][col].is_zero()) else {
            continue;
        };
        a.swap(row, p);
        for r in row + 1..a.len() {
            for c in col + 1..ncols {
                let v = &a[row][col] * &a[r][c] - &a[r][col] * &a[row][c];
                a[r][c] = v / &prev;
            }
            a[r][col] = BigInt::zero();
        }
        // A skipped column is zero below `row`, so it acts as a deleted column
        // and the division by `prev` stays exact.
        prev = a[row][col].clone();
        pivots.push(col);
        row += 1;
    }
    (a, pivots)
}

/// Exact determinant of a square integer matrix via Bareiss elimination.
pub fn determinant(m: &[Vec<BigInt>]) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut a = m.to_vec();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n {
        if a[k][k].is_zero() {
            let Some(p) = (k + 1..n).find(|&r| !a[r][k].is_zero()) else {
                return BigInt::zero();
            };
            a.swap(k, p);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &a[k][k] * &a[i][j] - &a[i][k] * &a[k][j];
                a[i][j] = v / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    sign * &a[n - 1][n - 1]
}

/// Leading principal minors `det(M[..k, ..k])` for `k = 1..=n`.
pub fn leading_principal_minors(m: &[Vec<BigInt>]) -> Vec<BigInt> {
    (1..=m.len())
        .map(|k| {
            let sub: Vec<Vec<BigInt>> = m[..k].iter().map(|r| r[..k].to_vec()).collect();
            determinant(&sub)
        })
        .collect()
}

/// Kernel basis of a rational matrix as primitive integer vectors, first
/// nonzero entry positive.
///
/// Rows are cleared of denominators and reduced by fraction-free elimination;
/// back substitution runs over Q and each basis vector is then made primitive.
pub fn rational_kernel(m: &[Vec<Rational>], ncols: usize) -> Vec<Vec<BigInt>> {
    let ints: Vec<Vec<BigInt>> = m
        .iter()
        .map(|row| {
            let den = row.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
            row.iter().map(|x| (x * &den).to_integer()).collect()
        })
        .collect();
    let (ech, pivots) = bareiss_echelon(&ints, ncols);
    let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut x = vec![Rational::zero(); ncols];
            x[f] = Rational::one();
            for (r, &pc) in pivots.iter().enumerate().rev() {
                let mut acc = Rational::zero();
                for c in pc + 1..ncols {
                    if !ech[r][c].is_zero() && !x[c].is_zero() {
                        acc += Rational::from_integer(ech[r][c].clone()) * &x[c];
                    }
                }
                x[pc] = -acc / Rational::from_integer(ech[r][pc].clone());
            }
            primitive_integer(&x)
        })
        .collect()
}

/// Integer matrix to rational matrix.
pub fn to_rational(m: &[Vec<i64>]) -> Vec<Vec<Rational>> {
    m.iter()
        .map(|r| {
            r.iter()
                .map(|&x| Rational::from_integer(x.into()))
                .collect()
        })
        .collect()
}
