//! Finite and affine root-system data.
//!
//! Finite root systems are generated from their Cartan matrices by reflection
//! closure; affine diagrams carry marks (the coefficients `b_α` with
//! `Σ b_α·α = 1/ordσ` as affine functions) and comarks (`c_α` with
//! `Σ c_α·α∨ = 0`), both computed as integer null vectors of the generalized
//! Cartan matrix rather than hard-coded.
//!
//! The Cartan-matrix convention used everywhere in this crate is
//! `A[i][j] = ⟨α_j, α_i∨⟩`, so each *row* `i` records how other simple roots
//! pair against the coroot `α_i∨`.

mod affine;
mod center;
mod cyclo;
mod matcher;

pub use affine::{AffineDiagram, KernelGenerator, LeviComponent};
pub use center::{
    evaluate_center_character, mod1, weight_in_base_coords, CenterCharacter, ComponentChar,
};
pub use cyclo::CycloNumber;
pub use matcher::{gcm_automorphisms, gcm_isomorphisms, identify_gcm};

use crate::linalg::{rat, Rat};
use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

/// Error raised by root-system constructors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RootSystemError {
    /// The requested rank is not valid for the series.
    InvalidRank {
        /// Series letter.
        series: Series,
        /// Offending rank.
        rank: usize,
    },
    /// The requested twisted affine diagram is not supported.
    UnsupportedTwist {
        /// Base type.
        base: CartanType,
        /// Requested twist order.
        twist: usize,
    },
    /// A generalized Cartan matrix did not generate a finite root system.
    NotFinite,
}

impl fmt::Display for RootSystemError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RootSystemError::InvalidRank { series, rank } => {
                write!(f, "rank {rank} is not valid for series {series:?}")
            }
            RootSystemError::UnsupportedTwist { base, twist } => write!(
                f,
                "unsupported twisted diagram ({base}, twist {twist}); \
                 classical twisted types are served by the quiver module"
            ),
            RootSystemError::NotFinite => {
                write!(f, "Cartan matrix does not generate a finite root system")
            }
        }
    }
}

/// The seven series of simple Cartan types.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
#[allow(missing_docs)]
pub enum Series {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

/// A simple finite Cartan type (series + rank).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CartanType {
    /// Series letter.
    pub series: Series,
    /// Rank (number of simple roots).
    pub rank: usize,
}

impl fmt::Display for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}{}", self.series, self.rank)
    }
}

impl CartanType {
    /// Creates a Cartan type, validating the rank for the series.
    ///
    /// `D3` is permitted internally as an alias of `A3`.
    pub fn new(series: Series, rank: usize) -> Result<Self, RootSystemError> {
        let ok = match series {
            Series::A => rank >= 1,
            Series::B | Series::C => rank >= 2,
            Series::D => rank >= 3,
            Series::E => (6..=8).contains(&rank),
            Series::F => rank == 4,
            Series::G => rank == 2,
        };
        if ok {
            Ok(CartanType { series, rank })
        } else {
            Err(RootSystemError::InvalidRank { series, rank })
        }
    }

    /// Parses a short name such as `"A3"`, `"E8"`.
    pub fn parse(s: &str) -> Result<Self, String> {
        let (letter, digits) = s.split_at(1);
        let series = match letter {
            "A" => Series::A,
            "B" => Series::B,
            "C" => Series::C,
            "D" => Series::D,
            "E" => Series::E,
            "F" => Series::F,
            "G" => Series::G,
            _ => return Err(format!("unknown series letter in {s:?}")),
        };
        let rank: usize = digits.parse().map_err(|_| format!("bad rank in {s:?}"))?;
        CartanType::new(series, rank).map_err(|e| format!("{e}"))
    }

    /// The Cartan matrix in Bourbaki numbering, convention `A[i][j] = ⟨α_j, α_i∨⟩`.
    pub fn cartan_matrix(&self) -> Vec<Vec<i64>> {
        let n = self.rank;
        let mut a = vec![vec![0i64; n]; n];
        for (i, row) in a.iter_mut().enumerate() {
            row[i] = 2;
        }
        let chain = |a: &mut Vec<Vec<i64>>, i: usize, j: usize| {
            a[i][j] = -1;
            a[j][i] = -1;
        };
        match self.series {
            Series::A => {
                for i in 0..n - 1 {
                    chain(&mut a, i, i + 1);
                }
            }
            Series::B => {
                for i in 0..n - 1 {
                    chain(&mut a, i, i + 1);
                }
                // α_n is short: ⟨α_{n−1}, α_n∨⟩ = −2.
                a[n - 1][n - 2] = -2;
            }
            Series::C => {
                for i in 0..n - 1 {
                    chain(&mut a, i, i + 1);
                }
                // α_n is long: ⟨α_n, α_{n−1}∨⟩ = −2.
                a[n - 2][n - 1] = -2;
            }
            Series::D => {
                if n == 3 {
                    // D3 = A3 with the branch convention degenerate; use the chain.
                    chain(&mut a, 0, 1);
                    chain(&mut a, 1, 2);
                } else {
                    for i in 0..n - 3 {
                        chain(&mut a, i, i + 1);
                    }
                    chain(&mut a, n - 3, n - 2);
                    chain(&mut a, n - 3, n - 1);
                }
            }
            Series::E => {
                // Bourbaki: chain 1−3−4−5−6(−7)(−8) with 2 attached to 4.
                chain(&mut a, 0, 2);
                for i in 2..n - 1 {
                    chain(&mut a, i, i + 1);
                }
                chain(&mut a, 1, 3);
            }
            Series::F => {
                chain(&mut a, 0, 1);
                chain(&mut a, 2, 3);
                // α2 long, α3 short: ⟨α3, α2∨⟩ = −1, ⟨α2, α3∨⟩ = −2.
                a[1][2] = -1;
                a[2][1] = -2;
            }
            Series::G => {
                // Bourbaki: α1 short, α2 long: ⟨α2, α1∨⟩ = −3, ⟨α1, α2∨⟩ = −1.
                a[0][1] = -3;
                a[1][0] = -1;
            }
        }
        a
    }

    /// Total number of roots (twice the positive-root count).
    pub fn num_roots(&self) -> usize {
        let n = self.rank;
        match self.series {
            Series::A => n * (n + 1),
            Series::B | Series::C => 2 * n * n,
            Series::D => 2 * n * (n - 1),
            Series::E => match n {
                6 => 72,
                7 => 126,
                _ => 240,
            },
            Series::F => 48,
            Series::G => 12,
        }
    }

    /// Dimension of the simple Lie algebra of this type.
    pub fn dim(&self) -> usize {
        self.num_roots() + self.rank
    }

    /// Order of the center of the simply connected group of this type
    /// (the determinant of the Cartan matrix).
    pub fn center_order(&self) -> i64 {
        match self.series {
            Series::A => self.rank as i64 + 1,
            Series::B | Series::C => 2,
            Series::D => 4,
            Series::E => 9 - self.rank as i64,
            Series::F | Series::G => 1,
        }
    }
}

/// Generates the full root set of a generalized Cartan matrix by closing the
/// simple roots under simple reflections. Fails if more than `cap` roots appear
/// (the matrix is then not of finite type).
pub fn roots_by_reflection_closure(
    gcm: &[Vec<i64>],
    cap: usize,
) -> Result<Vec<Vec<i64>>, RootSystemError> {
    let n = gcm.len();
    let mut set: BTreeSet<Vec<i64>> = BTreeSet::new();
    for i in 0..n {
        let mut e = vec![0i64; n];
        e[i] = 1;
        set.insert(e.clone());
        e[i] = -1;
        set.insert(e);
    }
    loop {
        let mut new: Vec<Vec<i64>> = Vec::new();
        for r in &set {
            for i in 0..n {
                // s_i(r) = r − ⟨r, α_i∨⟩·α_i, with ⟨r, α_i∨⟩ = Σ_j A[i][j]·r_j.
                let p: i64 = (0..n).map(|j| gcm[i][j] * r[j]).sum();
                let mut s = r.clone();
                s[i] -= p;
                if !set.contains(&s) {
                    new.push(s);
                }
            }
        }
        if new.is_empty() {
            break;
        }
        set.extend(new);
        if set.len() > cap {
            return Err(RootSystemError::NotFinite);
        }
    }
    Ok(set.into_iter().collect())
}

/// Sorts roots graded-lexicographically: by height (coordinate sum), then by
/// coordinates.
fn sort_roots(mut roots: Vec<Vec<i64>>) -> Vec<Vec<i64>> {
    roots.sort_by_key(|r| (r.iter().sum::<i64>(), r.clone()));
    roots
}

/// A finite root system with its Cartan matrix and generated positive roots.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteRootSystem {
    /// The underlying Cartan type.
    pub cartan_type: CartanType,
    /// Cartan matrix in Bourbaki numbering (`A[i][j] = ⟨α_j, α_i∨⟩`).
    pub cartan_matrix: Vec<Vec<i64>>,
    /// Positive roots in simple-root coordinates, graded-lexicographically ordered.
    pub positive_roots: Vec<Vec<i64>>,
    /// The highest root.
    pub highest_root: Vec<i64>,
    /// Symmetrizer: positive integers with `d_i·A[i][j] = d_j·A[j][i]`,
    /// normalized so the minimum is 1. `(α_i, α_i) = 2·d_i`.
    pub symmetrizer: Vec<i64>,
}

/// Builds the finite root system of a Cartan type by reflection closure.
pub fn build_finite(ct: CartanType) -> Result<FiniteRootSystem, RootSystemError> {
    let gcm = ct.cartan_matrix();
    let all = roots_by_reflection_closure(&gcm, 2 * ct.num_roots())?;
    let positive: Vec<Vec<i64>> =
        all.into_iter().filter(|r| r.iter().all(|&x| x >= 0)).collect();
    let positive = sort_roots(positive);
    let highest = positive.last().cloned().unwrap_or_default();
    let symmetrizer = symmetrizer(&gcm);
    Ok(FiniteRootSystem {
        cartan_type: ct,
        cartan_matrix: gcm,
        positive_roots: positive,
        highest_root: highest,
        symmetrizer,
    })
}

/// Computes a positive integer symmetrizer of a GCM (`d_i·A[i][j] = d_j·A[j][i]`),
/// with minimum entry 1. Works per connected component.
pub fn symmetrizer(gcm: &[Vec<i64>]) -> Vec<i64> {
    let n = gcm.len();
    let mut d: Vec<Option<Rat>> = vec![None; n];
    for start in 0..n {
        if d[start].is_some() {
            continue;
        }
        d[start] = Some(rat(1));
        let mut stack = vec![start];
        while let Some(i) = stack.pop() {
            for j in 0..n {
                if gcm[i][j] != 0 && i != j && d[j].is_none() {
                    // d_j = d_i·A[i][j]/A[j][i]
                    let di = d[i].clone().unwrap();
                    d[j] = Some(di * rat(gcm[i][j]) / rat(gcm[j][i]));
                    stack.push(j);
                }
            }
        }
    }
    // Clear denominators and divide by gcd, per component jointly (global is fine
    // since each component is independently scaled to min 1 below).
    let vals: Vec<Rat> = d.into_iter().map(|x| x.unwrap()).collect();
    let mut lcm = num_bigint::BigInt::from(1);
    for v in &vals {
        lcm = num_integer::lcm(lcm, v.denom().clone());
    }
    let ints: Vec<num_bigint::BigInt> =
        vals.iter().map(|v| v.numer() * (&lcm / v.denom())).collect();
    let mut g = num_bigint::BigInt::from(0);
    for x in &ints {
        g = num_integer::gcd(g, x.clone());
    }
    ints.iter().map(|x| i64::try_from(x / &g).unwrap()).collect()
}

impl FiniteRootSystem {
    /// Rank of the system.
    pub fn rank(&self) -> usize {
        self.cartan_matrix.len()
    }

    /// Total root count.
    pub fn num_roots(&self) -> usize {
        2 * self.positive_roots.len()
    }

    /// `⟨r, α_i∨⟩` for a root (or weight) `r` in simple-root coordinates.
    pub fn pair_with_simple_coroot(&self, r: &[i64], i: usize) -> i64 {
        (0..self.rank()).map(|j| self.cartan_matrix[i][j] * r[j]).sum()
    }

    /// Squared length `(r, r)` of a root in simple-root coordinates
    /// (normalized so short simple roots have `d = 1`, i.e. `(α,α) = 2d`).
    pub fn norm2(&self, r: &[i64]) -> i64 {
        let n = self.rank();
        let mut s = 0i64;
        for i in 0..n {
            for j in 0..n {
                s += r[i] * self.symmetrizer[i] * self.cartan_matrix[i][j] * r[j];
            }
        }
        s
    }

    /// Coroot of a root, in simple-coroot coordinates (rational in general).
    pub fn coroot(&self, r: &[i64]) -> Vec<Rat> {
        let dr = rat(self.norm2(r)) / rat(2);
        (0..self.rank())
            .map(|i| rat(r[i] * self.symmetrizer[i]) / dr.clone())
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn root_counts_match_closed_forms() {
        // Reflection-closure oracle: |roots| must match the classical counts.
        for (ct, expect) in [
            (CartanType::new(Series::A, 2).unwrap(), 6),
            (CartanType::new(Series::G, 2).unwrap(), 12),
            (CartanType::new(Series::F, 4).unwrap(), 48),
            (CartanType::new(Series::B, 4).unwrap(), 32),
            (CartanType::new(Series::C, 3).unwrap(), 18),
            (CartanType::new(Series::D, 8).unwrap(), 112),
            (CartanType::new(Series::E, 6).unwrap(), 72),
            (CartanType::new(Series::E, 7).unwrap(), 126),
            (CartanType::new(Series::E, 8).unwrap(), 240),
        ] {
            let rs = build_finite(ct).unwrap();
            assert_eq!(rs.num_roots(), expect, "{ct}");
            assert_eq!(rs.num_roots(), ct.num_roots(), "{ct}");
        }
    }

    #[test]
    fn highest_root_dominates() {
        for ct in [
            CartanType::new(Series::E, 7).unwrap(),
            CartanType::new(Series::F, 4).unwrap(),
            CartanType::new(Series::B, 5).unwrap(),
        ] {
            let rs = build_finite(ct).unwrap();
            for r in &rs.positive_roots {
                for (a, b) in r.iter().zip(&rs.highest_root) {
                    assert!(a <= b);
                }
            }
        }
    }

    #[test]
    fn invalid_ranks_rejected() {
        assert!(CartanType::new(Series::E, 5).is_err());
        assert!(CartanType::new(Series::B, 1).is_err());
        assert!(CartanType::new(Series::G, 3).is_err());
    }

    #[test]
    fn g2_symmetrizer_marks_short_first() {
        let rs = build_finite(CartanType::new(Series::G, 2).unwrap()).unwrap();
        // Bourbaki G2: α1 short, α2 long.
        assert_eq!(rs.symmetrizer, vec![1, 3]);
        assert_eq!(rs.norm2(&[1, 0]), 2);
        assert_eq!(rs.norm2(&[0, 1]), 6);
        // Highest root is long: 3α1 + 2α2.
        assert_eq!(rs.highest_root, vec![3, 2]);
    }
}
