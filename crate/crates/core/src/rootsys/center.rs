//! Center-character pairings attached to one-node-deleted subdiagrams.
//!
//! Deleting a node `β` from an affine diagram leaves a product of simply
//! connected factors covering the actual subgroup; the kernel of the cover is
//! cyclic of order `c_β` (the comark of the deleted node) and is generated by
//! an element whose pairing with any weight of the sub-root-system is read off
//! from the ambient comarks. A character of the product restricts trivially to
//! the kernel exactly when the comark-weighted sum of its fundamental-weight
//! exponents vanishes mod `c_β` — the test implemented here.
//!
//! The sum splits over components because the fundamental weights of one
//! component pair to zero with the coroots of any other (the deleted-node
//! components are mutually orthogonal inside the ambient system).

use super::affine::{AffineDiagram, KernelGenerator, LeviComponent};
use crate::linalg::{inverse, rat, rat_matrix, Rat};
use alloc::vec;
use alloc::vec::Vec;
use num_traits::Zero;

/// A character of one simply connected factor, written as fundamental-weight
/// exponents `Σ e_k·ω_k` in the Bourbaki numbering of the factor.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComponentChar {
    /// Exponent of each fundamental weight (length = rank of the factor).
    pub exponents: Vec<i64>,
}

/// A character of a product of simply connected factors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CenterCharacter {
    /// One entry per component, in the same order as the pseudo-Levi components.
    pub components: Vec<ComponentChar>,
}

/// Reduces a rational to the half-open interval `[0, 1)`.
pub fn mod1(r: Rat) -> Rat {
    let f = r.floor();
    r - f
}

/// Value of a product character on the kernel generator, as a rational in
/// `[0, 1)` (the character value is `exp(2πi·value)`). The character kills the
/// kernel iff this is zero.
pub fn evaluate_center_character(
    gen: &KernelGenerator,
    levi: &[LeviComponent],
    chi: &CenterCharacter,
) -> Rat {
    debug_assert_eq!(levi.len(), chi.components.len());
    let mut s = Rat::zero();
    for (comp, ch) in levi.iter().zip(&chi.components) {
        debug_assert_eq!(comp.nodes.len(), ch.exponents.len());
        for (k, &e) in ch.exponents.iter().enumerate() {
            s += rat(e * gen.comarks[comp.nodes[k]]) / rat(gen.order);
        }
    }
    mod1(s)
}

/// Expands a product character's weight `λ = Σ e_k·ω_k^{comp}` into ambient
/// simple-root coordinates of the diagram's base (Bourbaki order). Requires an
/// untwisted diagram (needs `node_roots`).
pub fn weight_in_base_coords(
    diag: &AffineDiagram,
    levi: &[LeviComponent],
    chi: &CenterCharacter,
) -> Vec<Rat> {
    let roots = diag
        .node_roots
        .as_ref()
        .expect("weight expansion requires an untwisted diagram");
    let rank = diag.base.rank;
    let mut out = vec![Rat::zero(); rank];
    for (comp, ch) in levi.iter().zip(&chi.components) {
        let sub: Vec<Vec<i64>> = comp
            .nodes
            .iter()
            .map(|&i| comp.nodes.iter().map(|&j| diag.gcm[i][j]).collect())
            .collect();
        let inv = inverse(&rat_matrix(&sub)).expect("component Cartan matrix is invertible");
        for (k, &e) in ch.exponents.iter().enumerate() {
            if e == 0 {
                continue;
            }
            // ω_k = Σ_j (A⁻¹)[j][k]·α_j within the component.
            for (j, &node) in comp.nodes.iter().enumerate() {
                for (c, o) in roots[node].iter().zip(out.iter_mut()) {
                    *o += rat(e) * &inv[j][k] * rat(*c);
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    #[test]
    fn e8_node5_deletion_sl5_sl5_character_count() {
        // Deleting the comark-5 node of E8 leaves A4 + A4 divided by μ5; the
        // characters (j·ω1, j′·ω1) killing the kernel with j primitive number 4.
        let diag = AffineDiagram::by_name("E8").unwrap();
        let beta = 4;
        let levi = diag.pseudo_levi(beta);
        assert_eq!(levi.len(), 2);
        assert!(levi.iter().all(|c| c.cartan_type.to_string() == "A4"));
        let gen = diag.kernel_of_cover(beta);
        let mut count = 0;
        for j in 1..5i64 {
            for jp in 0..5i64 {
                let chi = CenterCharacter {
                    components: alloc::vec![
                        ComponentChar { exponents: alloc::vec![j, 0, 0, 0] },
                        ComponentChar { exponents: alloc::vec![jp, 0, 0, 0] },
                    ],
                };
                if evaluate_center_character(&gen, &levi, &chi).is_zero() {
                    count += 1;
                }
            }
        }
        assert_eq!(count, 4);
    }

    #[test]
    fn weight_coefficient_recovers_fundamental_weight() {
        // In E6, ω1 has α1-coefficient 4/3 (first diagonal entry of A⁻¹ row).
        let diag = AffineDiagram::by_name("E6").unwrap();
        let levi = diag.pseudo_levi(diag.affine_node);
        let chi = CenterCharacter {
            components: alloc::vec![ComponentChar {
                exponents: alloc::vec![1, 0, 0, 0, 0, 0]
            }],
        };
        let coords = weight_in_base_coords(&diag, &levi, &chi);
        assert_eq!(coords[0], Rat::new(4.into(), 3.into()));
    }
}
