//! Exact rational linear algebra: kernels, inverses and linear solves over
//! arbitrary-precision rationals.
//!
//! All routines use plain Gaussian elimination with exact arithmetic, which is
//! more than fast enough for the rank ≤ 9 matrices occurring in root-system
//! work, and guarantees exact zero detection (no tolerances anywhere).

use alloc::vec;
use alloc::vec::Vec;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Arbitrary-precision rational number used throughout the crate.
pub type Rat = BigRational;

/// Converts an `i64` to a [`Rat`].
pub fn rat(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Converts an integer matrix to a rational matrix.
pub fn rat_matrix(m: &[Vec<i64>]) -> Vec<Vec<Rat>> {
    m.iter().map(|row| row.iter().map(|&x| rat(x)).collect()).collect()
}

/// Reduced row echelon form, in place. Returns the pivot columns.
pub fn rref(m: &mut [Vec<Rat>]) -> Vec<usize> {
    let rows = m.len();
    if rows == 0 {
        return Vec::new();
    }
    let cols = m[0].len();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        // Find a row with a nonzero entry in column c.
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][c].clone();
        for x in m[r].iter_mut() {
            *x = &*x / &inv;
        }
        for i in 0..rows {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                for j in 0..cols {
                    let sub = &m[r][j] * &f;
                    m[i][j] = &m[i][j] - sub;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

/// Basis of the right kernel `{x : M·x = 0}` of a rational matrix.
pub fn kernel_basis(m: &[Vec<Rat>]) -> Vec<Vec<Rat>> {
    if m.is_empty() {
        return Vec::new();
    }
    let cols = m[0].len();
    let mut a: Vec<Vec<Rat>> = m.to_vec();
    let pivots = rref(&mut a);
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    let mut basis = Vec::new();
    for &f in &free {
        let mut v = vec![Rat::zero(); cols];
        v[f] = Rat::one();
        for (row, &p) in pivots.iter().enumerate() {
            v[p] = -a[row][f].clone();
        }
        basis.push(v);
    }
    basis
}

/// Unique positive integer vector spanning a one-dimensional kernel, scaled so
/// that the gcd of its entries is 1. Returns `None` if the kernel dimension is
/// not 1 or the kernel vector has mixed signs.
pub fn integer_kernel_vector(m: &[Vec<i64>]) -> Option<Vec<i64>> {
    let basis = kernel_basis(&rat_matrix(m));
    if basis.len() != 1 {
        return None;
    }
    let v = &basis[0];
    // Clear denominators.
    let mut lcm = BigInt::one();
    for x in v {
        lcm = num_integer::lcm(lcm, x.denom().clone());
    }
    let ints: Vec<BigInt> = v.iter().map(|x| x.numer() * (&lcm / x.denom())).collect();
    let mut g = BigInt::zero();
    for x in &ints {
        g = num_integer::gcd(g, x.abs());
    }
    if g.is_zero() {
        return None;
    }
    let mut out: Vec<BigInt> = ints.iter().map(|x| x / &g).collect();
    if out.iter().any(|x| x.is_negative()) {
        for x in out.iter_mut() {
            *x = -x.clone();
        }
    }
    if out.iter().any(|x| !x.is_positive()) {
        return None;
    }
    out.into_iter().map(|x| i64::try_from(x).ok()).collect()
}

/// Inverse of a square rational matrix. Returns `None` if singular.
pub fn inverse(m: &[Vec<Rat>]) -> Option<Vec<Vec<Rat>>> {
    let n = m.len();
    let mut aug: Vec<Vec<Rat>> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| if i == j { Rat::one() } else { Rat::zero() }));
            r
        })
        .collect();
    let pivots = rref(&mut aug);
    if pivots.len() != n || pivots.iter().enumerate().any(|(i, &p)| i != p) {
        return None;
    }
    Some(aug.into_iter().map(|row| row[n..].to_vec()).collect())
}

/// Solves `M·x = b` for square nonsingular `M`.
pub fn solve(m: &[Vec<Rat>], b: &[Rat]) -> Option<Vec<Rat>> {
    let inv = inverse(m)?;
    Some(
        inv.iter()
            .map(|row| row.iter().zip(b).map(|(a, x)| a * x).fold(Rat::zero(), |s, t| s + t))
            .collect(),
    )
}
