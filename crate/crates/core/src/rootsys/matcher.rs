//! Backtracking isomorphism search on generalized Cartan matrices.
//!
//! Used for three jobs: identifying the simple type of a sub-diagram obtained
//! by deleting a node, computing the automorphism group of an affine diagram,
//! and transporting node labels (e.g. weighted Dynkin labels) along an
//! identification. All searches return *every* isomorphism so callers can pick
//! a canonical one deterministically.

use super::{CartanType, Series};
use alloc::vec;
use alloc::vec::Vec;

/// All bijections `p` with `b[p[i]][p[j]] == a[i][j]` for all `i, j`.
pub fn gcm_isomorphisms(a: &[Vec<i64>], b: &[Vec<i64>]) -> Vec<Vec<usize>> {
    let n = a.len();
    if b.len() != n {
        return Vec::new();
    }
    let mut out = Vec::new();
    let mut p: Vec<usize> = Vec::with_capacity(n);
    let mut used = vec![false; n];
    fn go(
        a: &[Vec<i64>],
        b: &[Vec<i64>],
        p: &mut Vec<usize>,
        used: &mut [bool],
        out: &mut Vec<Vec<usize>>,
    ) {
        let i = p.len();
        if i == a.len() {
            out.push(p.clone());
            return;
        }
        'cand: for c in 0..a.len() {
            if used[c] || b[c][c] != a[i][i] {
                continue;
            }
            for (k, &pk) in p.iter().enumerate() {
                if b[c][pk] != a[i][k] || b[pk][c] != a[k][i] {
                    continue 'cand;
                }
            }
            used[c] = true;
            p.push(c);
            go(a, b, p, used, out);
            p.pop();
            used[c] = false;
        }
    }
    go(a, b, &mut p, &mut used, &mut out);
    out
}

/// All automorphisms of a generalized Cartan matrix (as permutations of nodes).
pub fn gcm_automorphisms(a: &[Vec<i64>]) -> Vec<Vec<usize>> {
    gcm_isomorphisms(a, a)
}

/// Identifies a connected GCM as a simple finite Cartan type, returning the
/// type together with the lexicographically smallest node map
/// `standard Bourbaki node i ↦ input index map[i]`.
///
/// Rank-2 `B = C` and rank-3 `D = A` coincidences resolve to `B2` and `A3`.
pub fn identify_gcm(sub: &[Vec<i64>]) -> Option<(CartanType, Vec<usize>)> {
    let n = sub.len();
    let mut candidates: Vec<CartanType> = Vec::new();
    let push = |s: Series, r: usize, v: &mut Vec<CartanType>| {
        if let Ok(ct) = CartanType::new(s, r) {
            v.push(ct);
        }
    };
    push(Series::A, n, &mut candidates);
    if n >= 2 {
        push(Series::B, n, &mut candidates);
    }
    if n >= 3 {
        push(Series::C, n, &mut candidates);
    }
    if n >= 4 {
        push(Series::D, n, &mut candidates);
    }
    push(Series::E, n, &mut candidates);
    push(Series::F, n, &mut candidates);
    push(Series::G, n, &mut candidates);
    for ct in candidates {
        let std = ct.cartan_matrix();
        let mut isos = gcm_isomorphisms(&std, sub);
        if !isos.is_empty() {
            isos.sort();
            return Some((ct, isos.swap_remove(0)));
        }
    }
    None
}
