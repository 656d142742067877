//! Affine diagrams: untwisted diagrams built programmatically from the finite
//! root system (affine node = minus the highest root), plus the two twisted
//! exceptional diagrams needed for the triality and order-2 outer gradings.
//!
//! Nodes are kept in *display order* — the order in which grading labels are
//! conventionally printed for each diagram — so that label vectors round-trip
//! byte-exactly through the CLI. For exceptional diagrams the display order is:
//!
//! * `G2`, `3D4`, `F4`, `2E6`: left-to-right along the chain, affine node first;
//! * `E6`: node 1 = affine (top of the branch), node 2 = branch node, nodes
//!   3–7 = the bottom chain;
//! * `E7`: node 1 = branch node (attached to node 5), nodes 2–8 = the chain
//!   with the affine node at position 2;
//! * `E8`: node 1 = branch node (attached to node 4), nodes 2–9 = the chain
//!   with the affine node at position 9.

use super::matcher::{gcm_automorphisms, identify_gcm};
use super::{build_finite, CartanType, RootSystemError, Series};
use crate::linalg::integer_kernel_vector;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

/// One connected component of a diagram with a node deleted, identified as a
/// simple finite type.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LeviComponent {
    /// Simple type of the component.
    pub cartan_type: CartanType,
    /// `nodes[i]` is the display index of the diagram node playing Bourbaki
    /// node `i+1` of `cartan_type`.
    pub nodes: Vec<usize>,
}

/// Generator of the finite central subgroup by which the product of simply
/// connected factors is divided when a diagram node is deleted.
///
/// The generator pairs with a weight `λ = Σ a_i·α_i` of the sub-root-system
/// through the comarks: `χ_λ(gen) = exp(2πi·Σ_i a_i·c_i / c_β)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KernelGenerator {
    /// Order of the generator (the comark of the deleted node).
    pub order: i64,
    /// Comark of each display node of the ambient diagram.
    pub comarks: Vec<i64>,
}

/// An affine (possibly twisted) diagram in display node order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AffineDiagram {
    /// Display name, e.g. `"E7"`, `"2E6"`, `"3D4"`, `"B3"`.
    pub name: String,
    /// Underlying finite type.
    pub base: CartanType,
    /// Order of the diagram twist (1, 2 or 3).
    pub twist: usize,
    /// Generalized Cartan matrix in display order, `A[i][j] = ⟨α_j, α_i∨⟩`.
    pub gcm: Vec<Vec<i64>>,
    /// Marks `b`: positive integer right null vector of the GCM, gcd 1. A label
    /// vector `n` defines a grading of order `twist·Σ b_i·n_i`.
    pub marks: Vec<i64>,
    /// Comarks `c`: positive integer right null vector of the transposed GCM.
    pub comarks: Vec<i64>,
    /// Diagram automorphisms as permutations of display nodes.
    pub automorphisms: Vec<Vec<usize>>,
    /// Display index of the affine node.
    pub affine_node: usize,
    /// For untwisted diagrams: the root of each display node in simple-root
    /// coordinates of the base (the affine node carries minus the highest
    /// root). `None` for twisted diagrams.
    pub node_roots: Option<Vec<Vec<i64>>>,
}

/// Display permutation for an untwisted exceptional base: entry `i` is the
/// construction index (0 = affine node, `k` = Bourbaki node `k`) shown at
/// display position `i`.
fn display_permutation(base: CartanType) -> Vec<usize> {
    let n = base.rank;
    match (base.series, n) {
        (Series::G, 2) => vec![0, 2, 1],
        (Series::E, 6) => vec![0, 2, 1, 3, 4, 5, 6],
        (Series::E, 7) => vec![2, 0, 1, 3, 4, 5, 6, 7],
        (Series::E, 8) => vec![2, 1, 3, 4, 5, 6, 7, 8, 0],
        _ => (0..=n).collect(),
    }
}

impl AffineDiagram {
    /// Builds the untwisted affine diagram of a finite type.
    pub fn untwisted(base: CartanType) -> Result<Self, RootSystemError> {
        let rs = build_finite(base)?;
        let n = base.rank;
        let theta = &rs.highest_root;
        let theta_norm2 = rs.norm2(theta);
        // Construction order: index 0 = affine node (root −θ), index k = Bourbaki k.
        let mut cons = vec![vec![0i64; n + 1]; n + 1];
        cons[0][0] = 2;
        for i in 0..n {
            for j in 0..n {
                cons[i + 1][j + 1] = rs.cartan_matrix[i][j];
            }
        }
        for k in 0..n {
            // (θ, α_k) = Σ_i θ_i·d_i·A[i][k]
            let inner: i64 =
                (0..n).map(|i| theta[i] * rs.symmetrizer[i] * rs.cartan_matrix[i][k]).sum();
            // ⟨α_k, α_0∨⟩ = −2(θ, α_k)/(θ, θ); exact integer division.
            debug_assert_eq!((2 * inner) % theta_norm2, 0);
            cons[0][k + 1] = -2 * inner / theta_norm2;
            // ⟨α_0, α_k∨⟩ = −⟨θ, α_k∨⟩
            cons[k + 1][0] = -rs.pair_with_simple_coroot(theta, k);
        }
        let perm = display_permutation(base);
        let gcm: Vec<Vec<i64>> = (0..=n)
            .map(|i| (0..=n).map(|j| cons[perm[i]][perm[j]]).collect())
            .collect();
        let node_roots: Vec<Vec<i64>> = perm
            .iter()
            .map(|&c| {
                if c == 0 {
                    theta.iter().map(|&x| -x).collect()
                } else {
                    let mut e = vec![0i64; n];
                    e[c - 1] = 1;
                    e
                }
            })
            .collect();
        let affine_node = perm.iter().position(|&c| c == 0).unwrap();
        Self::finish(base.to_string(), base, 1, gcm, affine_node, Some(node_roots))
    }

    /// Builds a twisted affine diagram. Supported: `(D4, 3)` and `(E6, 2)`
    /// (the twisted classical types are handled by the quiver model instead).
    pub fn twisted(base: CartanType, twist: usize) -> Result<Self, RootSystemError> {
        match (base.series, base.rank, twist) {
            (_, _, 1) => Self::untwisted(base),
            (Series::D, 4, 3) => {
                let gcm = vec![vec![2, -1, 0], vec![-1, 2, -3], vec![0, -1, 2]];
                Self::finish("3D4".into(), base, 3, gcm, 0, None)
            }
            (Series::E, 6, 2) => {
                let gcm = vec![
                    vec![2, -1, 0, 0, 0],
                    vec![-1, 2, -1, 0, 0],
                    vec![0, -1, 2, -2, 0],
                    vec![0, 0, -1, 2, -1],
                    vec![0, 0, 0, -1, 2],
                ];
                Self::finish("2E6".into(), base, 2, gcm, 0, None)
            }
            _ => Err(RootSystemError::UnsupportedTwist { base, twist }),
        }
    }

    fn finish(
        name: String,
        base: CartanType,
        twist: usize,
        gcm: Vec<Vec<i64>>,
        affine_node: usize,
        node_roots: Option<Vec<Vec<i64>>>,
    ) -> Result<Self, RootSystemError> {
        let marks = integer_kernel_vector(&gcm).ok_or(RootSystemError::NotFinite)?;
        let n = gcm.len();
        let transposed: Vec<Vec<i64>> =
            (0..n).map(|i| (0..n).map(|j| gcm[j][i]).collect()).collect();
        let comarks = integer_kernel_vector(&transposed).ok_or(RootSystemError::NotFinite)?;
        let mut automorphisms = gcm_automorphisms(&gcm);
        automorphisms.sort();
        Ok(AffineDiagram {
            name,
            base,
            twist,
            gcm,
            marks,
            comarks,
            automorphisms,
            affine_node,
            node_roots,
        })
    }

    /// Parses a display name: `"G2"`, `"3D4"`, `"F4"`, `"2E6"`, `"E6"`, `"E7"`,
    /// `"E8"`, or any untwisted classical name such as `"B3"`.
    pub fn by_name(name: &str) -> Result<Self, String> {
        let (twist, rest) = match name.as_bytes().first() {
            Some(b'2') => (2, &name[1..]),
            Some(b'3') => (3, &name[1..]),
            _ => (1, name),
        };
        let base = CartanType::parse(rest)?;
        Self::twisted(base, twist).map_err(|e| format!("{e}"))
    }

    /// The seven exceptional diagrams in conventional table order.
    pub fn exceptional_all() -> Vec<Self> {
        ["G2", "3D4", "F4", "2E6", "E6", "E7", "E8"]
            .iter()
            .map(|n| Self::by_name(n).unwrap())
            .collect()
    }

    /// Number of diagram nodes (finite rank + 1 for untwisted; folded rank + 1
    /// for twisted).
    pub fn num_nodes(&self) -> usize {
        self.gcm.len()
    }

    /// Twisted Coxeter number `Σ b_i` — the largest order of a grading whose
    /// labels have a single support node of mark 1, and the relevant sweep
    /// bound for rank-0 gradings.
    pub fn coxeter_number(&self) -> i64 {
        self.marks.iter().sum()
    }

    /// Connected components of the diagram with node `beta` deleted, each
    /// identified as a simple type with its node correspondence.
    /// Components are ordered by their smallest display index.
    pub fn pseudo_levi(&self, beta: usize) -> Vec<LeviComponent> {
        let n = self.num_nodes();
        let mut seen = vec![false; n];
        seen[beta] = true;
        let mut comps: Vec<Vec<usize>> = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut comp = vec![start];
            seen[start] = true;
            let mut stack = vec![start];
            while let Some(i) = stack.pop() {
                for j in 0..n {
                    if !seen[j] && self.gcm[i][j] != 0 {
                        seen[j] = true;
                        comp.push(j);
                        stack.push(j);
                    }
                }
            }
            comp.sort_unstable();
            comps.push(comp);
        }
        comps.sort();
        comps
            .into_iter()
            .map(|comp| {
                let sub: Vec<Vec<i64>> = comp
                    .iter()
                    .map(|&i| comp.iter().map(|&j| self.gcm[i][j]).collect())
                    .collect();
                let (ct, map) = identify_gcm(&sub)
                    .expect("one-node-deleted subdiagram must be a sum of finite simple types");
                LeviComponent { cartan_type: ct, nodes: map.iter().map(|&p| comp[p]).collect() }
            })
            .collect()
    }

    /// The central kernel generator attached to deleting node `beta`: its order
    /// is the comark `c_beta`, and it pairs with weights through the comarks.
    pub fn kernel_of_cover(&self, beta: usize) -> KernelGenerator {
        KernelGenerator { order: self.comarks[beta], comarks: self.comarks.clone() }
    }
}
