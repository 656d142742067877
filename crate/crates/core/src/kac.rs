//! Gradings from diagram labels: order, graded dimensions, normalization.
//!
//! A label vector `n` on an affine diagram (one non-negative integer per
//! display node, gcd 1) determines a cyclic grading of the base Lie algebra of
//! order `m = twist·Σ b_i·n_i`, where `b` are the marks. This module computes
//! the dimension of every graded piece exactly:
//!
//! * untwisted diagrams: each root `α` contributes to the piece
//!   `Σ_k α_k·n_{node(k)} mod m`, and the Cartan contributes its rank to
//!   degree 0;
//! * twisted diagrams (`3D4`, `2E6`): the finite part of the diagram folds the
//!   base system; orbit-size-1 folded roots (the long ones) contribute at their
//!   base degree only, while orbit-size-`twist` folded roots (the short ones)
//!   spread over all `twist` congruence classes mod `M = m/twist`, as does the
//!   part of the Cartan not fixed by the diagram twist.
//!
//! Normalization moves an arbitrary integer label vector with positive level
//! into the fundamental alcove by affine simple reflections (which preserve the
//! grading), divides out the gcd, and picks the lexicographically smallest
//! image under diagram automorphisms — a canonical form suitable for
//! deduplication and table lookup.

use crate::rootsys::{build_finite, roots_by_reflection_closure, symmetrizer, AffineDiagram};
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use serde::{Deserialize, Serialize};

/// A label vector on a named affine diagram (serialization-friendly form).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct KacCoordinates {
    /// Diagram display name, e.g. `"E7"`, `"2E6"`.
    pub diagram: String,
    /// One label per display node.
    pub coords: Vec<i64>,
}

/// Dimensions of the graded pieces of a cyclic grading.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GradedDims {
    /// Order `m` of the grading.
    pub order: i64,
    /// `dims[k] = dim g_k` for `k ∈ Z/m` (length `m`).
    pub dims: Vec<i64>,
}

impl GradedDims {
    /// `dim g_1 − dim g_0` (for `m = 1` both pieces coincide, giving 0).
    pub fn r_value(&self) -> i64 {
        self.dims[1 % self.dims.len() as usize] - self.dims[0]
    }

    /// Whether `dim g_0 = dim g_1` — the numerical bi-orbital condition.
    pub fn is_biorbital(&self) -> bool {
        self.r_value() == 0
    }
}

/// Order of the grading defined by a label vector: `twist · Σ b_i·n_i`.
pub fn order(diag: &AffineDiagram, coords: &[i64]) -> i64 {
    diag.twist as i64 * level(diag, coords)
}

/// The level `Σ b_i·n_i = order/twist`.
fn level(diag: &AffineDiagram, coords: &[i64]) -> i64 {
    diag.marks.iter().zip(coords).map(|(b, n)| b * n).sum()
}

/// Graded dimensions of the grading defined by a label vector.
///
/// Panics if the level is not positive. For many evaluations on one diagram,
/// build a [`GradingEvaluator`] once instead — this convenience function
/// rebuilds the root-degree data on every call.
pub fn graded_dims(diag: &AffineDiagram, coords: &[i64]) -> GradedDims {
    GradingEvaluator::new(diag).graded_dims(coords)
}

/// Precomputed root-degree data of one affine diagram, for evaluating the
/// graded dimensions of many label vectors without re-deriving the root
/// system each time.
pub struct GradingEvaluator {
    twist: i64,
    marks: Vec<i64>,
    /// Per positive (folded) root: the display-node coefficient vector `c`
    /// with base degree `Σ c_i·coords[i]`, and the twist-orbit size (1 or
    /// `twist`).
    terms: Vec<(Vec<i64>, i64)>,
    /// Cartan lines at degree 0.
    fixed: i64,
    /// Cartan lines spread over each nonzero multiple of `order/twist`.
    moving: i64,
}

impl GradingEvaluator {
    /// Derives the degree data of a diagram (one root-system construction).
    pub fn new(diag: &AffineDiagram) -> Self {
        let n = diag.num_nodes();
        if diag.twist == 1 {
            let rs = build_finite(diag.base).expect("valid base type");
            let rank = diag.base.rank;
            // node_of[k] = display node carrying Bourbaki simple root k+1.
            let roots = diag.node_roots.as_ref().expect("untwisted diagram has node roots");
            let mut node_of = vec![0usize; rank];
            for (i, r) in roots.iter().enumerate() {
                if r.iter().sum::<i64>() == 1 {
                    node_of[r.iter().position(|&x| x == 1).unwrap()] = i;
                }
            }
            let terms = rs
                .positive_roots
                .iter()
                .map(|root| {
                    let mut c = vec![0i64; n];
                    for (k, &a) in root.iter().enumerate() {
                        c[node_of[k]] += a;
                    }
                    (c, 1)
                })
                .collect();
            GradingEvaluator {
                twist: 1,
                marks: diag.marks.clone(),
                terms,
                fixed: rank as i64,
                moving: 0,
            }
        } else {
            let t = diag.twist as i64;
            let l = n - 1;
            // Folded finite system: the diagram with its affine node removed.
            let sub: Vec<Vec<i64>> = (1..=l)
                .map(|i| (1..=l).map(|j| diag.gcm[i][j]).collect())
                .collect();
            let folded = roots_by_reflection_closure(&sub, 1000).expect("folded system is finite");
            let d = symmetrizer(&sub);
            let norm2 = |r: &[i64]| -> i64 {
                let mut s = 0i64;
                for i in 0..l {
                    for j in 0..l {
                        s += r[i] * d[i] * sub[i][j] * r[j];
                    }
                }
                s
            };
            let max_norm = folded.iter().map(|r| norm2(r)).max().unwrap();
            let terms = folded
                .iter()
                .filter(|r| r.iter().all(|&x| x >= 0))
                .map(|root| {
                    let mut c = vec![0i64; n];
                    for (k, &a) in root.iter().enumerate() {
                        c[k + 1] = a;
                    }
                    // Long (max-norm) folded roots have twist-orbit size 1 and
                    // live in the twist-fixed congruence class; the others
                    // spread over all classes mod order/twist.
                    (c, if norm2(root) == max_norm { 1 } else { t })
                })
                .collect();
            GradingEvaluator {
                twist: t,
                marks: diag.marks.clone(),
                terms,
                fixed: l as i64,
                moving: (diag.base.rank - l) as i64 / (t - 1),
            }
        }
    }

    /// Order of the grading defined by a label vector.
    pub fn order(&self, coords: &[i64]) -> i64 {
        self.twist * self.marks.iter().zip(coords).map(|(b, n)| b * n).sum::<i64>()
    }

    /// Graded dimensions; panics if the level is not positive.
    pub fn graded_dims(&self, coords: &[i64]) -> GradedDims {
        assert_eq!(coords.len(), self.marks.len());
        let m = self.order(coords);
        assert!(m > 0, "label vector must have positive level");
        let mut dims = vec![0i64; m as usize];
        dims[0] += self.fixed;
        let big_m = m / self.twist;
        for j in 1..self.twist {
            dims[(j * big_m).rem_euclid(m) as usize] += self.moving;
        }
        for (c, orbit) in &self.terms {
            let base: i64 = c.iter().zip(coords).map(|(a, n)| a * n).sum();
            if *orbit == 1 {
                dims[base.rem_euclid(m) as usize] += 1;
                dims[(-base).rem_euclid(m) as usize] += 1;
            } else {
                for j in 0..self.twist {
                    dims[(base + j * big_m).rem_euclid(m) as usize] += 1;
                    dims[(-base + j * big_m).rem_euclid(m) as usize] += 1;
                }
            }
        }
        GradedDims { order: m, dims }
    }

    /// `dim g_1 − dim g_0` of the grading defined by a label vector.
    pub fn r_value(&self, coords: &[i64]) -> i64 {
        self.graded_dims(coords).r_value()
    }
}

/// `dim g_1 − dim g_0` of the grading defined by a label vector.
pub fn r_value(diag: &AffineDiagram, coords: &[i64]) -> i64 {
    graded_dims(diag, coords).r_value()
}

/// Canonical form of an integer label vector with positive level: reflect
/// negative labels away, divide by the gcd, then minimize lexicographically
/// over diagram automorphisms.
///
/// Reflection step: while some `n_i < 0`, replace `n_j ← n_j − A[i][j]·n_i`
/// for all `j`; this negates `n_i` and preserves the level (`Σ_j A[i][j]·b_j =
/// 0`), and corresponds to changing the automorphism by an inner twist.
pub fn normalize(diag: &AffineDiagram, coords: &[i64]) -> Vec<i64> {
    assert!(level(diag, coords) > 0, "label vector must have positive level");
    let n = diag.num_nodes();
    let mut c = coords.to_vec();
    while let Some(i) = (0..n).find(|&i| c[i] < 0) {
        let v = c[i];
        for j in 0..n {
            c[j] -= diag.gcm[i][j] * v;
        }
    }
    let g = c.iter().fold(0i64, |a, &b| num_integer::gcd(a, b));
    if g > 1 {
        for x in c.iter_mut() {
            *x /= g;
        }
    }
    diag.automorphisms
        .iter()
        .map(|p| {
            let mut img = vec![0i64; n];
            for (i, &pi) in p.iter().enumerate() {
                img[pi] = c[i];
            }
            img
        })
        .min()
        .unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn d(name: &str) -> AffineDiagram {
        AffineDiagram::by_name(name).unwrap()
    }

    #[test]
    fn normalize_reflects_f4_label_into_alcove() {
        let diag = d("F4");
        assert_eq!(normalize(&diag, &[1, -1, 1, 0, 1]), vec![0, 1, 0, 0, 1]);
    }

    #[test]
    fn normalize_reflects_e6_label_into_alcove() {
        let diag = d("E6");
        assert_eq!(normalize(&diag, &[-1, 0, 1, 0, 1, 0, 1]), vec![0, 1, 1, 0, 0, 0, 1]);
    }

    #[test]
    fn graded_dims_sum_to_algebra_dimension() {
        for (name, coords) in [
            ("G2", vec![1, 1, 1]),
            ("F4", vec![1, 0, 1, 0, 1]),
            ("E6", vec![0, 1, 1, 0, 0, 0, 1]),
            ("E7", vec![0, 1, 0, 0, 1, 0, 0, 1]),
            ("E8", vec![1, 1, 1, 1, 1, 1, 1, 1, 1]),
            ("3D4", vec![1, 0, 1]),
            ("2E6", vec![1, 1, 0, 1, 0]),
        ] {
            let diag = d(name);
            let gd = graded_dims(&diag, &coords);
            let total: i64 = gd.dims.iter().sum();
            assert_eq!(total, diag.base.dim() as i64, "{name}");
        }
    }

    #[test]
    fn coxeter_grading_of_e8() {
        // The Coxeter grading (all labels 1) of E8 has m = 30, g_0 = Cartan
        // (dimension 8), and dim g_1 = 9 (the 8 simple root lines plus the
        // lowest root line); the piece dimensions are mirror-symmetric.
        let diag = d("E8");
        let gd = graded_dims(&diag, &[1; 9]);
        assert_eq!(gd.order, 30);
        assert_eq!(gd.dims[0], 8);
        assert_eq!(gd.dims[1], 9);
        for k in 1..30 {
            assert_eq!(gd.dims[k], gd.dims[30 - k]);
        }
    }

    #[test]
    fn twisted_e6_grading_dims() {
        // Order-10 outer grading of E6 with dim g_0 = 8, dim g_1 = 9.
        let diag = d("2E6");
        let gd = graded_dims(&diag, &[1, 1, 0, 1, 0]);
        assert_eq!(gd.order, 10);
        assert_eq!(gd.dims[0], 8);
        assert_eq!(gd.dims[1], 9);
    }

    #[test]
    fn order_includes_twist() {
        assert_eq!(order(&d("3D4"), &[1, 1, 1]), 12);
        assert_eq!(order(&d("2E6"), &[1, 1, 1, 1, 1]), 18);
        assert_eq!(order(&d("G2"), &[1, 1, 1]), 6);
    }

    #[test]
    fn normalization_preserves_graded_dims() {
        // A label vector and its canonical form define the same grading.
        let diag = d("E7");
        let raw = vec![1, -1, 0, 1, 0, 1, 0, 0];
        let norm = normalize(&diag, &raw);
        assert!(norm.iter().all(|&x| x >= 0));
        let m_raw: i64 = diag
            .marks
            .iter()
            .zip(&raw)
            .map(|(b, n)| b * n)
            .sum();
        // gcd division may shrink the order; compare only when gcd is 1.
        let g = norm.iter().fold(0i64, |a, &b| num_integer::gcd(a, b));
        assert_eq!(g, 1);
        let gd_norm = graded_dims(&diag, &norm);
        if gd_norm.order == m_raw {
            // Dims at 0 and 1 are automorphism- and reflection-invariant.
            assert_eq!(gd_norm.dims.iter().sum::<i64>(), diag.base.dim() as i64);
        }
    }
}
