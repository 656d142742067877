//! Exact arithmetic in cyclotomic fields `Q(ζ_n)`.
//!
//! A number is a polynomial in `ζ_n` with rational coefficients, reduced modulo
//! the `n`-th cyclotomic polynomial `Φ_n`. Since `Φ_n` is irreducible over `Q`,
//! the representation is canonical: equality and zero tests are exact
//! coefficient comparisons, and inverses exist for every nonzero element (via
//! the extended Euclidean algorithm in `Q[x]`). Numbers with different
//! conductors are promoted to the least common multiple before combining.

use crate::linalg::Rat;
use alloc::vec;
use alloc::vec::Vec;
use core::ops::{Add, Mul, Neg, Sub};
use num_traits::{One, Zero};

/// Trims trailing zero coefficients.
fn trim(p: &mut Vec<Rat>) {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
}

/// Remainder of `a` modulo `b` in `Q[x]` (`b` monic up to a unit, nonzero).
fn poly_rem(mut a: Vec<Rat>, b: &[Rat]) -> Vec<Rat> {
    let db = b.len() - 1;
    let lead = b[db].clone();
    while a.len() > db {
        let da = a.len() - 1;
        let f = a[da].clone() / lead.clone();
        for i in 0..=db {
            let t = &b[i] * &f;
            a[da - db + i] = &a[da - db + i] - t;
        }
        trim(&mut a);
        if a.is_empty() {
            break;
        }
    }
    a
}

/// Quotient of an exact division `a / b` in `Q[x]`.
fn poly_div_exact(mut a: Vec<Rat>, b: &[Rat]) -> Vec<Rat> {
    let db = b.len() - 1;
    let lead = b[db].clone();
    let mut q = vec![Rat::zero(); a.len().saturating_sub(db)];
    while a.len() > db {
        let da = a.len() - 1;
        let f = a[da].clone() / lead.clone();
        q[da - db] = f.clone();
        for i in 0..=db {
            let t = &b[i] * &f;
            a[da - db + i] = &a[da - db + i] - t;
        }
        trim(&mut a);
    }
    debug_assert!(a.is_empty(), "division was not exact");
    q
}

fn poly_mul(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![Rat::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

/// The `n`-th cyclotomic polynomial, computed as `(x^n − 1) / Π_{d|n, d<n} Φ_d`.
fn cyclotomic(n: u64) -> Vec<Rat> {
    let mut num = vec![Rat::zero(); n as usize + 1];
    num[0] = -Rat::one();
    num[n as usize] = Rat::one();
    for d in 1..n {
        if n % d == 0 {
            num = poly_div_exact(num, &cyclotomic(d));
        }
    }
    num
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// An element of the cyclotomic field `Q(ζ_conductor)`.
#[derive(Debug, Clone)]
pub struct CycloNumber {
    conductor: u64,
    /// Coefficients of `1, ζ, ζ², …`, length < deg Φ_conductor + 1, trimmed.
    coeffs: Vec<Rat>,
}

impl CycloNumber {
    /// Zero.
    pub fn zero() -> Self {
        CycloNumber { conductor: 1, coeffs: Vec::new() }
    }

    /// One.
    pub fn one() -> Self {
        CycloNumber::from_rat(Rat::one())
    }

    /// A rational number as a cyclotomic number.
    pub fn from_rat(r: Rat) -> Self {
        if r.is_zero() {
            Self::zero()
        } else {
            CycloNumber { conductor: 1, coeffs: vec![r] }
        }
    }

    /// The root of unity `ζ_n^k`.
    pub fn zeta(n: u64, k: i64) -> Self {
        assert!(n >= 1);
        let k = (k.rem_euclid(n as i64)) as u64;
        // Reduce ζ_n^k to a primitive root of unity of smaller order.
        let g = gcd(k, n);
        let (n, k) = (n / g, k / g);
        let mut coeffs = vec![Rat::zero(); k as usize + 1];
        coeffs[k as usize] = Rat::one();
        let phi = cyclotomic(n);
        let coeffs = poly_rem(coeffs, &phi);
        let mut out = CycloNumber { conductor: n, coeffs };
        out.normalize();
        out
    }

    /// Exact zero test.
    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// The conductor `n` of the field `Q(ζ_n)` this element is stored in.
    pub fn conductor(&self) -> u64 {
        self.conductor
    }

    fn normalize(&mut self) {
        trim(&mut self.coeffs);
        if self.coeffs.len() <= 1 {
            // The element is rational; store it with conductor 1.
            self.conductor = 1;
        }
    }

    /// Rewrites the element in `Q(ζ_m)` where `conductor | m`.
    fn promote(&self, m: u64) -> Self {
        if self.conductor == m {
            return self.clone();
        }
        debug_assert_eq!(m % self.conductor, 0);
        let step = (m / self.conductor) as usize;
        let mut coeffs = vec![Rat::zero(); (self.coeffs.len().max(1) - 1) * step + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i * step] = c.clone();
        }
        let coeffs = poly_rem(coeffs, &cyclotomic(m));
        let mut out = CycloNumber { conductor: m, coeffs };
        out.normalize();
        out
    }

    fn lcm_conductor(&self, other: &Self) -> u64 {
        self.conductor / gcd(self.conductor, other.conductor) * other.conductor
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let phi = cyclotomic(self.conductor);
        // Extended Euclid in Q[x]: find s with s·a ≡ gcd (a unit) mod Φ.
        let (mut r0, mut r1) = (phi.clone(), self.coeffs.clone());
        let (mut s0, mut s1) = (Vec::new(), vec![Rat::one()]);
        while !r1.is_empty() {
            // r0 = q·r1 + r2; track s only.
            let db = r1.len() - 1;
            let lead = r1[db].clone();
            let mut r2 = r0.clone();
            let mut q = vec![Rat::zero(); r2.len().saturating_sub(db).max(1)];
            while r2.len() > db {
                let da = r2.len() - 1;
                let f = r2[da].clone() / lead.clone();
                q[da - db] = f.clone();
                for i in 0..=db {
                    let t = &r1[i] * &f;
                    r2[da - db + i] = &r2[da - db + i] - t;
                }
                trim(&mut r2);
            }
            let qs1 = poly_mul(&q, &s1);
            let mut s2: Vec<Rat> = vec![Rat::zero(); s0.len().max(qs1.len())];
            for (i, c) in s0.iter().enumerate() {
                s2[i] += c;
            }
            for (i, c) in qs1.iter().enumerate() {
                s2[i] -= c;
            }
            trim(&mut s2);
            r0 = r1;
            r1 = r2;
            s0 = s1;
            s1 = s2;
        }
        // r0 is a nonzero constant (Φ is irreducible); s0·a ≡ r0 mod Φ.
        debug_assert_eq!(r0.len(), 1);
        let unit = r0[0].clone();
        let coeffs: Vec<Rat> = s0.into_iter().map(|c| c / unit.clone()).collect();
        let coeffs = poly_rem(coeffs, &phi);
        let mut out = CycloNumber { conductor: self.conductor, coeffs };
        out.normalize();
        Some(out)
    }

    /// If the element is rational, returns it.
    pub fn as_rat(&self) -> Option<Rat> {
        match self.coeffs.len() {
            0 => Some(Rat::zero()),
            1 => Some(self.coeffs[0].clone()),
            _ => None,
        }
    }
}

impl PartialEq for CycloNumber {
    fn eq(&self, other: &Self) -> bool {
        // Compare in a common field; reduction mod Φ makes the coefficient
        // vector canonical there.
        let m = self.lcm_conductor(other);
        self.promote(m).coeffs == other.promote(m).coeffs
    }
}

impl Eq for CycloNumber {}

impl Add for &CycloNumber {
    type Output = CycloNumber;
    fn add(self, rhs: &CycloNumber) -> CycloNumber {
        let m = self.lcm_conductor(rhs);
        let a = self.promote(m);
        let b = rhs.promote(m);
        let mut coeffs = vec![Rat::zero(); a.coeffs.len().max(b.coeffs.len())];
        for (i, c) in a.coeffs.iter().enumerate() {
            coeffs[i] += c;
        }
        for (i, c) in b.coeffs.iter().enumerate() {
            coeffs[i] += c;
        }
        let mut out = CycloNumber { conductor: m, coeffs };
        out.normalize();
        out
    }
}

impl Sub for &CycloNumber {
    type Output = CycloNumber;
    fn sub(self, rhs: &CycloNumber) -> CycloNumber {
        self + &(-rhs)
    }
}

impl Neg for &CycloNumber {
    type Output = CycloNumber;
    fn neg(self) -> CycloNumber {
        CycloNumber {
            conductor: self.conductor,
            coeffs: self.coeffs.iter().map(|c| -c.clone()).collect(),
        }
    }
}

impl Mul for &CycloNumber {
    type Output = CycloNumber;
    fn mul(self, rhs: &CycloNumber) -> CycloNumber {
        if self.is_zero() || rhs.is_zero() {
            return CycloNumber::zero();
        }
        let m = self.lcm_conductor(rhs);
        let a = self.promote(m);
        let b = rhs.promote(m);
        let coeffs = poly_rem(poly_mul(&a.coeffs, &b.coeffs), &cyclotomic(m));
        let mut out = CycloNumber { conductor: m, coeffs };
        out.normalize();
        out
    }
}

impl Mul<&Rat> for &CycloNumber {
    type Output = CycloNumber;
    fn mul(self, rhs: &Rat) -> CycloNumber {
        let mut out = CycloNumber {
            conductor: self.conductor,
            coeffs: self.coeffs.iter().map(|c| c * rhs).collect(),
        };
        out.normalize();
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::rat;

    #[test]
    fn primitive_cube_roots_sum_to_minus_one() {
        let z = CycloNumber::zeta(3, 1);
        let z2 = CycloNumber::zeta(3, 2);
        let s = &z + &z2;
        assert_eq!(s, CycloNumber::from_rat(rat(-1)));
    }

    #[test]
    fn zeta_powers_cycle() {
        let z = CycloNumber::zeta(5, 1);
        let mut p = CycloNumber::one();
        for _ in 0..5 {
            p = &p * &z;
        }
        assert_eq!(p, CycloNumber::one());
    }

    #[test]
    fn inverse_roundtrip_mixed_conductors() {
        // (1 + ζ6)·(1 + ζ6)⁻¹ = 1, and ζ4·ζ6 lives in Q(ζ12).
        let a = &CycloNumber::one() + &CycloNumber::zeta(6, 1);
        let ainv = a.inv().unwrap();
        assert_eq!(&a * &ainv, CycloNumber::one());
        let p = &CycloNumber::zeta(4, 1) * &CycloNumber::zeta(6, 1);
        assert_eq!(p.conductor(), 12);
        assert_eq!(&(&p * &p) * &(&p * &p), &p * &(&p * &(&p * &p))); // sanity
        // ζ12^12 = 1.
        let mut q = CycloNumber::one();
        for _ in 0..12 {
            q = &q * &p;
        }
        assert_eq!(q, CycloNumber::one());
    }

    #[test]
    fn imprimitive_zeta_reduces_conductor() {
        assert_eq!(CycloNumber::zeta(6, 2), CycloNumber::zeta(3, 1));
        assert_eq!(CycloNumber::zeta(8, 4), CycloNumber::from_rat(rat(-1)));
    }
}
