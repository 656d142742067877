//! Cyclic-quiver models of the classical graded Lie algebras.
//!
//! A classical simple Lie algebra with a cyclic grading is encoded by a family
//! label, an index set `I` (either `Z/m₀` or `(Z+½)/m₀`), and a dimension
//! vector `d: I → N`. The graded pieces are spaces of linear maps between the
//! `V_i`, possibly with symmetric (`S²`) or alternating (`∧²`) self-maps at the
//! two "ends" of the index set, and the group `G₀` is a product of `GL`, `SO`
//! and `Sp` blocks read off from the family table.
//!
//! Nilpotent `G₀`-orbits in `g₁` are labelled by multi-segments on `I`;
//! admissibility (realizability inside the form) and distinguishedness are
//! decided by self-duality, multiplicity and parity conditions on the segments.
//!
//! Half-integer index sets are represented by doubling every index internally,
//! so all arithmetic is on integers: the index `i` is stored as `2i`, and
//! `i + ½` as `2i + 1`. Presentation-layer halving is the CLI's job.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use serde::{Deserialize, Serialize};

/// The eleven classical grading families.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum FamilyLabel {
    /// Inner gradings of `SL_N` (cyclic quiver, no form).
    A,
    /// Outer (unitary) gradings, type I: odd `m₀`, integer indices.
    TwoAI,
    /// Outer gradings, type II: odd `m₀`, half-integer indices.
    TwoAII,
    /// Outer gradings, type III with integer indices: `SO`–`Sp` ends.
    TwoAIIIi,
    /// Outer gradings, type III with half-integer indices: `∧²`/`S²` ends.
    TwoAIIIii,
    /// Orthogonal gradings, type I: even `m₀`, integer indices.
    BDI,
    /// Orthogonal gradings, type II: even `m₀`, half-integer indices.
    BDII,
    /// Orthogonal gradings, type III: odd `m₀`, integer indices.
    BDIII,
    /// Symplectic gradings, type I: even `m₀`, half-integer indices.
    CI,
    /// Symplectic gradings, type II: even `m₀`, integer indices.
    CII,
    /// Symplectic gradings, type III: odd `m₀`, integer indices.
    CIII,
}

impl FamilyLabel {
    /// Canonical text form used by the CLI.
    pub fn as_str(&self) -> &'static str {
        match self {
            FamilyLabel::A => "A",
            FamilyLabel::TwoAI => "2AI",
            FamilyLabel::TwoAII => "2AII",
            FamilyLabel::TwoAIIIi => "2AIII-i",
            FamilyLabel::TwoAIIIii => "2AIII-ii",
            FamilyLabel::BDI => "BDI",
            FamilyLabel::BDII => "BDII",
            FamilyLabel::BDIII => "BDIII",
            FamilyLabel::CI => "CI",
            FamilyLabel::CII => "CII",
            FamilyLabel::CIII => "CIII",
        }
    }

    /// Parses the canonical text form.
    pub fn parse(s: &str) -> Option<Self> {
        Some(match s {
            "A" => FamilyLabel::A,
            "2AI" => FamilyLabel::TwoAI,
            "2AII" => FamilyLabel::TwoAII,
            "2AIII-i" => FamilyLabel::TwoAIIIi,
            "2AIII-ii" => FamilyLabel::TwoAIIIii,
            "BDI" => FamilyLabel::BDI,
            "BDII" => FamilyLabel::BDII,
            "BDIII" => FamilyLabel::BDIII,
            "CI" => FamilyLabel::CI,
            "CII" => FamilyLabel::CII,
            "CIII" => FamilyLabel::CIII,
            _ => return None,
        })
    }
}

/// Ambient form class, governing segment parity conditions.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FormClass {
    /// No form (type `A`).
    None,
    /// Orthogonal form.
    BD,
    /// Symplectic form.
    C,
    /// Unitary (second-kind) form.
    TwoA,
}

/// A classical grading family: label plus index-set modulus `m₀`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Family {
    /// Which of the eleven families.
    pub label: FamilyLabel,
    /// Modulus of the index set (`I = Z/m₀` or `(Z+½)/m₀`).
    pub m0: i64,
}

impl Family {
    /// Creates a family, validating the parity and size of `m₀` for the label.
    pub fn new(label: FamilyLabel, m0: i64) -> Result<Self, String> {
        let ok = match label {
            FamilyLabel::A => m0 >= 2,
            // Type I/II unitary families need m₀ = 2l+1 with l ≥ 1.
            FamilyLabel::TwoAI | FamilyLabel::TwoAII => m0 >= 3 && m0 % 2 == 1,
            FamilyLabel::BDI
            | FamilyLabel::BDII
            | FamilyLabel::CI
            | FamilyLabel::CII
            | FamilyLabel::TwoAIIIi
            | FamilyLabel::TwoAIIIii => m0 >= 2 && m0 % 2 == 0,
            // Type III orthogonal/symplectic families need m₀ = 2l+1, l ≥ 1.
            FamilyLabel::BDIII | FamilyLabel::CIII => m0 >= 3 && m0 % 2 == 1,
        };
        if ok {
            Ok(Family { label, m0 })
        } else {
            Err(format!("m0 = {m0} is not valid for family {}", label.as_str()))
        }
    }

    /// Whether the index set is `(Z+½)/m₀` rather than `Z/m₀`.
    pub fn half_integer(&self) -> bool {
        matches!(
            self.label,
            FamilyLabel::CI | FamilyLabel::TwoAII | FamilyLabel::BDII | FamilyLabel::TwoAIIIii
        )
    }

    /// Doubled-index offset: 1 for half-integer index sets, 0 otherwise.
    pub fn offset(&self) -> i64 {
        if self.half_integer() {
            1
        } else {
            0
        }
    }

    /// The structural parameter `l` of the family table
    /// (`m₀ = 2l` for even families, `m₀ = 2l+1` for odd ones).
    pub fn l(&self) -> i64 {
        self.m0 / 2
    }

    /// Order `m` of the grading automorphism `θ`.
    pub fn theta_order(&self) -> i64 {
        match self.label {
            FamilyLabel::A
            | FamilyLabel::BDI
            | FamilyLabel::BDII
            | FamilyLabel::BDIII
            | FamilyLabel::CI
            | FamilyLabel::CII
            | FamilyLabel::CIII => self.m0,
            // Unitary families: θ has twice the order of the index modulus.
            FamilyLabel::TwoAI
            | FamilyLabel::TwoAII
            | FamilyLabel::TwoAIIIi
            | FamilyLabel::TwoAIIIii => 2 * self.m0,
        }
    }

    /// Ambient form class.
    pub fn form_class(&self) -> FormClass {
        match self.label {
            FamilyLabel::A => FormClass::None,
            FamilyLabel::BDI | FamilyLabel::BDII | FamilyLabel::BDIII => FormClass::BD,
            FamilyLabel::CI | FamilyLabel::CII | FamilyLabel::CIII => FormClass::C,
            _ => FormClass::TwoA,
        }
    }

    /// 1, 2 or 3 for the type-I/II/III trichotomy; 0 for type `A`.
    pub fn io_type(&self) -> u8 {
        match self.label {
            FamilyLabel::A => 0,
            FamilyLabel::TwoAI | FamilyLabel::BDI | FamilyLabel::CI => 1,
            FamilyLabel::TwoAII | FamilyLabel::BDII | FamilyLabel::CII => 2,
            _ => 3,
        }
    }

    /// Position (0-based) of a doubled index in the value array.
    pub fn pos_of_doubled(&self, x: i64) -> usize {
        let y = x.rem_euclid(2 * self.m0);
        debug_assert_eq!(y % 2, self.offset() % 2);
        ((y - self.offset()).rem_euclid(2 * self.m0) / 2) as usize
    }

    /// Doubled index of a position.
    pub fn doubled_of_pos(&self, p: usize) -> i64 {
        2 * p as i64 + self.offset()
    }

    /// Position of `−i` for the position of `i`.
    pub fn neg_pos(&self, p: usize) -> usize {
        self.pos_of_doubled(-self.doubled_of_pos(p))
    }
}

/// A dimension vector: one value per index-set position (position `p` holds
/// the dimension at index `p` or `p + ½`).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DimVector {
    /// Dimensions in position order.
    pub values: Vec<i64>,
}

impl DimVector {
    /// Creates a dimension vector, checking length and non-negativity.
    pub fn new(f: &Family, values: Vec<i64>) -> Result<Self, String> {
        if values.len() != f.m0 as usize {
            return Err(format!(
                "dimension vector length {} does not match index set size {}",
                values.len(),
                f.m0
            ));
        }
        if values.iter().any(|&x| x < 0) {
            return Err("dimension vector entries must be non-negative".into());
        }
        Ok(DimVector { values })
    }

    /// Whether `d_i = d_{−i}` — required for all families with a form.
    pub fn is_symmetric(&self, f: &Family) -> bool {
        (0..self.values.len()).all(|p| self.values[p] == self.values[f.neg_pos(p)])
    }

    /// Total dimension `Σ d_i`.
    pub fn total(&self) -> i64 {
        self.values.iter().sum()
    }

    /// Value at a doubled index.
    pub fn at_doubled(&self, f: &Family, x: i64) -> i64 {
        self.values[f.pos_of_doubled(x)]
    }
}

/// A multi-segment on the index set: a multiset of segments `[a, b]`
/// (doubled indices, `b ≥ a`, `b − a` even) with positive multiplicities,
/// canonicalized modulo `[a, b] ≡ [a + m₀, b + m₀]`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct MultiSegment {
    /// Sorted entries `(a, b, multiplicity)` in doubled indices with
    /// `offset ≤ a < 2m₀ + offset`.
    pub entries: Vec<(i64, i64, i64)>,
}

/// Canonicalizes a single segment: shifts `a` into `[off, off + 2m₀)`.
fn canon_seg(f: &Family, a: i64, b: i64) -> (i64, i64) {
    debug_assert!(b >= a && (b - a) % 2 == 0);
    let span = 2 * f.m0;
    let a0 = (a - f.offset()).rem_euclid(span) + f.offset();
    (a0, a0 + (b - a))
}

impl MultiSegment {
    /// Builds a canonical multi-segment from raw `(a, b, multiplicity)` entries
    /// in doubled indices.
    pub fn new(f: &Family, raw: impl IntoIterator<Item = (i64, i64, i64)>) -> Self {
        let mut map: Vec<(i64, i64, i64)> = Vec::new();
        for (a, b, c) in raw {
            assert!(c > 0, "multiplicities must be positive");
            assert!(
                (a - f.offset()) % 2 == 0,
                "segment endpoints must match the index-set parity"
            );
            let (a, b) = canon_seg(f, a, b);
            match map.iter_mut().find(|(x, y, _)| *x == a && *y == b) {
                Some(e) => e.2 += c,
                None => map.push((a, b, c)),
            }
        }
        map.sort_unstable();
        MultiSegment { entries: map }
    }

    /// The empty multi-segment.
    pub fn empty() -> Self {
        MultiSegment { entries: Vec::new() }
    }

    /// Formal sum of two multi-segments.
    pub fn add(&self, f: &Family, other: &Self) -> Self {
        MultiSegment::new(f, self.entries.iter().chain(&other.entries).cloned())
    }

    /// Total number of lattice points (with multiplicity) — equals `Σ d_i`.
    pub fn total_points(&self) -> i64 {
        self.entries.iter().map(|(a, b, c)| c * ((b - a) / 2 + 1)).sum()
    }
}

/// Dimensions `(dim G₀, dim g₁)` of the graded group and first graded piece.
pub fn group_dims(f: &Family, d: &DimVector) -> (i64, i64) {
    let l = f.l();
    let gl = |x: i64| x * x;
    let so = |x: i64| x * (x - 1) / 2;
    let sp = |x: i64| x * (x + 1) / 2;
    // Shorthands: value at integer index i, and at half-integer index i + ½.
    let di = |i: i64| d.at_doubled(f, 2 * i);
    let dh = |i: i64| d.at_doubled(f, 2 * i + 1);
    match f.label {
        FamilyLabel::A => {
            let g0: i64 = (0..f.m0).map(|i| gl(di(i))).sum::<i64>() - 1;
            let g1: i64 = (0..f.m0).map(|i| di(i) * di(i + 1)).sum();
            (g0, g1)
        }
        FamilyLabel::TwoAI => {
            // G₀ = ∏_{i=1}^{l} GL(V_i) × SO(V₀); g₁ = ⊕_{i=0}^{l−1} Hom(V_i, V_{i+1}) ⊕ S²V_l*.
            let g0 = (1..=l).map(|i| gl(di(i))).sum::<i64>() + so(di(0));
            let g1 = (0..l).map(|i| di(i) * di(i + 1)).sum::<i64>() + sp(di(l));
            (g0, g1)
        }
        FamilyLabel::CI => {
            // G₀ = ∏_{i=0}^{l−1} GL(V_{i+½}); g₁ = ⊕_{i=1}^{l−1} Hom ⊕ S²V_½ ⊕ S²V_{l−½}*.
            let g0 = (0..l).map(|i| gl(dh(i))).sum::<i64>();
            let g1 =
                (1..l).map(|i| dh(i - 1) * dh(i)).sum::<i64>() + sp(dh(0)) + sp(dh(l - 1));
            (g0, g1)
        }
        FamilyLabel::BDI => {
            // G₀ → ∏_{i=1}^{l−1} GL(V_i) × SO(V₀) × SO(V_l); g₁ = ⊕_{i=0}^{l−1} Hom.
            let g0 = (1..l).map(|i| gl(di(i))).sum::<i64>() + so(di(0)) + so(di(l));
            let g1 = (0..l).map(|i| di(i) * di(i + 1)).sum::<i64>();
            (g0, g1)
        }
        FamilyLabel::TwoAII => {
            // G₀ = ∏_{i=0}^{l−1} GL(V_{i+½}) × Sp(V_{l+½}); g₁ = ⊕_{i=1}^{l} Hom ⊕ ∧²V_½.
            let g0 = (0..l).map(|i| gl(dh(i))).sum::<i64>() + sp(dh(l));
            let g1 = (1..=l).map(|i| dh(i - 1) * dh(i)).sum::<i64>() + so(dh(0));
            (g0, g1)
        }
        FamilyLabel::CII => {
            // G₀ = ∏_{i=1}^{l−1} GL(V_i) × Sp(V₀) × Sp(V_l); g₁ = ⊕_{i=0}^{l−1} Hom.
            let g0 = (1..l).map(|i| gl(di(i))).sum::<i64>() + sp(di(0)) + sp(di(l));
            let g1 = (0..l).map(|i| di(i) * di(i + 1)).sum::<i64>();
            (g0, g1)
        }
        FamilyLabel::BDII => {
            // G₀ → ∏_{i=0}^{l−1} GL(V_{i+½}); g₁ = ⊕_{i=1}^{l−1} Hom ⊕ ∧²V_½ ⊕ ∧²V_{l−½}*.
            let g0 = (0..l).map(|i| gl(dh(i))).sum::<i64>();
            let g1 =
                (1..l).map(|i| dh(i - 1) * dh(i)).sum::<i64>() + so(dh(0)) + so(dh(l - 1));
            (g0, g1)
        }
        FamilyLabel::TwoAIIIi => {
            // G₀ = ∏_{i=1}^{l−1} GL(V_i) × SO(V₀) × Sp(V_l); g₁ = ⊕_{i=0}^{l−1} Hom.
            let g0 = (1..l).map(|i| gl(di(i))).sum::<i64>() + so(di(0)) + sp(di(l));
            let g1 = (0..l).map(|i| di(i) * di(i + 1)).sum::<i64>();
            (g0, g1)
        }
        FamilyLabel::TwoAIIIii => {
            // G₀ = ∏_{i=0}^{l−1} GL(V_{i+½}); g₁ = ⊕_{i=1}^{l−1} Hom ⊕ ∧²V_½ ⊕ S²V_{l−½}*.
            let g0 = (0..l).map(|i| gl(dh(i))).sum::<i64>();
            let g1 =
                (1..l).map(|i| dh(i - 1) * dh(i)).sum::<i64>() + so(dh(0)) + sp(dh(l - 1));
            (g0, g1)
        }
        FamilyLabel::CIII => {
            // G₀ = ∏_{i=1}^{l} GL(V_i) × Sp(V₀); g₁ = ⊕_{i=1}^{l} Hom ⊕ S²V_l*.
            let g0 = (1..=l).map(|i| gl(di(i))).sum::<i64>() + sp(di(0));
            let g1 = (1..=l).map(|i| di(i - 1) * di(i)).sum::<i64>() + sp(di(l));
            (g0, g1)
        }
        FamilyLabel::BDIII => {
            // G₀ → ∏_{i=1}^{l} GL(V_i) × SO(V₀); g₁ = ⊕_{i=1}^{l} Hom ⊕ ∧²V_l*.
            let g0 = (1..=l).map(|i| gl(di(i))).sum::<i64>() + so(di(0));
            let g1 = (1..=l).map(|i| di(i - 1) * di(i)).sum::<i64>() + so(di(l));
            (g0, g1)
        }
    }
}

/// `dim g₁ − dim g₀` (`dim g₀ = dim G₀`).
pub fn r_value(f: &Family, d: &DimVector) -> i64 {
    let (g0, g1) = group_dims(f, d);
    g1 - g0
}

/// Dimension vector of a multi-segment: lattice-point counts per residue class.
pub fn dim_vector_of(f: &Family, s: &MultiSegment) -> DimVector {
    let mut values = vec![0i64; f.m0 as usize];
    for &(a, b, c) in &s.entries {
        let mut x = a;
        while x <= b {
            values[f.pos_of_doubled(x)] += c;
            x += 2;
        }
    }
    DimVector { values }
}

/// Dual multi-segment: `[a, b] ↦ [−b, −a]` entrywise.
pub fn dual(f: &Family, s: &MultiSegment) -> MultiSegment {
    MultiSegment::new(f, s.entries.iter().map(|&(a, b, c)| (-b, -a, c)))
}

/// Whether a canonical segment is its own dual.
fn is_self_dual(f: &Family, a: i64, b: i64) -> bool {
    canon_seg(f, -b, -a) == (a, b)
}

/// Whether a self-dual segment requires even multiplicity for realizability
/// inside the form. Lengths and sums below are in original (undoubled) units.
fn needs_even_multiplicity(f: &Family, a: i64, b: i64) -> bool {
    let len = (b - a) / 2; // b − a in original units
    match f.form_class() {
        FormClass::None => false,
        FormClass::BD => len % 2 != 0,
        FormClass::C => len % 2 == 0,
        FormClass::TwoA => {
            // m | (a+b) in original units ⟺ 4m₀ | (a_d + b_d) in doubled units.
            let m_divides = (a + b).rem_euclid(4 * f.m0) == 0;
            (len % 2 != 0 && m_divides) || (len % 2 == 0 && !m_divides)
        }
    }
}

/// Whether a multi-segment is realized by an element of `g₁`: self-dual as a
/// multiset, with even multiplicity on the self-dual segments that demand it
/// (non-self-dual segments pair off with their duals automatically when
/// `s = s*`). Type `A` has no form, so every multi-segment is admissible.
pub fn is_admissible(f: &Family, s: &MultiSegment) -> bool {
    if f.form_class() == FormClass::None {
        return true;
    }
    if dual(f, s) != *s {
        return false;
    }
    s.entries
        .iter()
        .all(|&(a, b, c)| !is_self_dual(f, a, b) || !needs_even_multiplicity(f, a, b) || c % 2 == 0)
}

/// Jordan block sizes of the underlying nilpotent endomorphism, sorted
/// descending.
pub fn jordan_blocks(s: &MultiSegment) -> Vec<i64> {
    let mut out = Vec::new();
    for &(a, b, c) in &s.entries {
        for _ in 0..c {
            out.push((b - a) / 2 + 1);
        }
    }
    out.sort_unstable_by(|x, y| y.cmp(x));
    out
}

/// Parity sign a segment must satisfy to be distinguished: `+1` for BD,
/// `−1` for C, `(−1)^{2(a+b)/m}` for ²A.
fn distinguished_parity_ok(f: &Family, a: i64, b: i64) -> bool {
    // Distinguished segments are exactly the self-dual ones whose multiplicity
    // is not forced even.
    !needs_even_multiplicity(f, a, b)
}

/// All multi-segments with the given dimension vector that label distinguished
/// nilpotent orbits: segmentwise self-dual, multiplicity-free, and with the
/// family's parity sign.
pub fn distinguished_segments(f: &Family, d: &DimVector) -> Vec<MultiSegment> {
    assert!(f.form_class() != FormClass::None, "type A orbits are partitions, not handled here");
    let n = d.total();
    // Candidate segments: canonical, self-dual, correct parity, ≤ n points.
    let mut cands: Vec<(i64, i64)> = Vec::new();
    for p in 0..f.m0 {
        let a = 2 * p + f.offset();
        let mut b = a;
        while (b - a) / 2 < n {
            if is_self_dual(f, a, b) && distinguished_parity_ok(f, a, b) {
                cands.push((a, b));
            }
            b += 2;
        }
    }
    cands.sort_unstable();
    let mut out = Vec::new();
    let mut chosen: Vec<(i64, i64)> = Vec::new();
    fn search(
        f: &Family,
        cands: &[(i64, i64)],
        start: usize,
        remaining: &mut Vec<i64>,
        chosen: &mut Vec<(i64, i64)>,
        out: &mut Vec<MultiSegment>,
    ) {
        if remaining.iter().all(|&x| x == 0) {
            out.push(MultiSegment::new(f, chosen.iter().map(|&(a, b)| (a, b, 1))));
            return;
        }
        for i in start..cands.len() {
            let (a, b) = cands[i];
            // Feasibility: subtract the segment's point counts.
            let mut ok = true;
            let mut x = a;
            while x <= b {
                let p = f.pos_of_doubled(x);
                if remaining[p] == 0 {
                    ok = false;
                    break;
                }
                remaining[p] -= 1;
                x += 2;
            }
            if ok {
                chosen.push((a, b));
                search(f, cands, i + 1, remaining, chosen, out);
                chosen.pop();
            }
            // Restore.
            let mut y = a;
            while y < x || (ok && y <= b) {
                remaining[f.pos_of_doubled(y)] += 1;
                y += 2;
            }
        }
    }
    let mut remaining = d.values.clone();
    search(f, &cands, 0, &mut remaining, &mut chosen, &mut out);
    out.sort();
    out.dedup();
    out
}

/// A pair of finite subsets of `N` parametrizing distinguished orbits in the
/// type I families.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ABPair {
    /// The `A` subset, sorted.
    pub a: Vec<i64>,
    /// The `B` subset, sorted.
    pub b: Vec<i64>,
}

impl ABPair {
    /// Builds a pair from unsorted element lists (deduplicated).
    pub fn new(mut a: Vec<i64>, mut b: Vec<i64>) -> Self {
        a.sort_unstable();
        a.dedup();
        b.sort_unstable();
        b.dedup();
        ABPair { a, b }
    }
}

fn assert_type_one(f: &Family) {
    assert_eq!(f.io_type(), 1, "operation defined for type I families only");
}

/// The multi-segment `s_{(A,B)}` attached to a pair of finite subsets in the
/// type I families:
///
/// * BDI: `Σ_{a∈A} [−a, a] + Σ_{b∈B} [l−b, l+b]`;
/// * CI: `Σ_{a∈A} [−a−½, a+½] + Σ_{b∈B} [l−b−½, l+b+½]`;
/// * ²AI: `Σ_{a∈A} [−a, a] + Σ_{b∈B} [l−b, l+1+b]`.
pub fn seg_of_ab(f: &Family, p: &ABPair) -> MultiSegment {
    assert_type_one(f);
    let l = f.l();
    let mut raw = Vec::new();
    for &a in &p.a {
        match f.label {
            FamilyLabel::BDI | FamilyLabel::TwoAI => raw.push((-2 * a, 2 * a, 1)),
            FamilyLabel::CI => raw.push((-2 * a - 1, 2 * a + 1, 1)),
            _ => unreachable!(),
        }
    }
    for &b in &p.b {
        match f.label {
            FamilyLabel::BDI => raw.push((2 * (l - b), 2 * (l + b), 1)),
            FamilyLabel::CI => raw.push((2 * (l - b) - 1, 2 * (l + b) + 1, 1)),
            FamilyLabel::TwoAI => raw.push((2 * (l - b), 2 * (l + 1 + b), 1)),
            _ => unreachable!(),
        }
    }
    MultiSegment::new(f, raw)
}

/// `F(d)` for a symmetric dimension vector:
/// `½(d₀ + d_l − Σ_{k=0}^{l−1}(d_k − d_{k+1})²)` (BDI, ²AI) or the
/// half-integer variant `½(d_½ + d_{l−½} − Σ_{k=1}^{l−1}(d_{k−½} − d_{k+½})²)`
/// (CI). Equals `dim g₁ − dim g₀` on the family.
pub fn f_value(f: &Family, d: &DimVector) -> Result<i64, String> {
    assert_type_one(f);
    if !d.is_symmetric(f) {
        return Err("F is defined for symmetric dimension vectors only".into());
    }
    let l = f.l();
    let two_f = match f.label {
        FamilyLabel::BDI | FamilyLabel::TwoAI => {
            let di = |i: i64| d.at_doubled(f, 2 * i);
            di(0) + di(l) - (0..l).map(|k| (di(k) - di(k + 1)).pow(2)).sum::<i64>()
        }
        FamilyLabel::CI => {
            let dh = |i: i64| d.at_doubled(f, 2 * i + 1);
            dh(0) + dh(l - 1) - (1..l).map(|k| (dh(k - 1) - dh(k)).pow(2)).sum::<i64>()
        }
        _ => unreachable!(),
    };
    debug_assert_eq!(two_f % 2, 0);
    Ok(two_f / 2)
}

/// The image `β(A, B) = (S_k)_{k∈I}` of the reparametrizing bijection, as one
/// sorted subset of `N` per index-set position.
///
/// For BDI and CI the level of `a` at its position is `⌊a/l⌋` and the level of
/// `b` at position `b+l (+½)` is `⌊b/l⌋`. For ²AI the levels interleave the
/// two branches by parity instead: `a` lands at level `2⌊a/m₀⌋` when its
/// position is ≤ `l` and one higher otherwise, while `b` (at position
/// `b+l+1 mod m₀`) lands at level `2⌊b/m₀⌋` when its position is ≥ `l+1` and
/// one higher otherwise. These are the unique level maps for which the
/// generator at level `n` of a position contributes exactly `2n+1` to
/// `d₀ + d_l` (`2n+2` at the self-paired position `l`), which is what drives
/// the positivity and vanishing criteria for `F`.
pub fn beta(f: &Family, p: &ABPair) -> Vec<Vec<i64>> {
    assert_type_one(f);
    let l = f.l();
    let m0 = f.m0;
    let mut sets: Vec<BTreeSet<i64>> = vec![BTreeSet::new(); f.m0 as usize];
    for &a in &p.a {
        let (pos, n) = match f.label {
            FamilyLabel::BDI => (f.pos_of_doubled(2 * a), a.div_euclid(l)),
            FamilyLabel::CI => (f.pos_of_doubled(2 * a + 1), a.div_euclid(l)),
            FamilyLabel::TwoAI => {
                let pos = f.pos_of_doubled(2 * a);
                let bit = i64::from(pos as i64 >= l + 1);
                (pos, 2 * a.div_euclid(m0) + bit)
            }
            _ => unreachable!(),
        };
        assert!(sets[pos].insert(n), "β image collision");
    }
    for &b in &p.b {
        let (pos, n) = match f.label {
            FamilyLabel::BDI => (f.pos_of_doubled(2 * (b + l)), b.div_euclid(l)),
            FamilyLabel::CI => (f.pos_of_doubled(2 * (b + l) + 1), b.div_euclid(l)),
            FamilyLabel::TwoAI => {
                let pos = f.pos_of_doubled(2 * (b + l + 1));
                let bit = i64::from(pos as i64 <= l);
                (pos, 2 * b.div_euclid(m0) + bit)
            }
            _ => unreachable!(),
        };
        assert!(sets[pos].insert(n), "β image collision");
    }
    sets.into_iter().map(|s| s.into_iter().collect()).collect()
}

/// Inverse of [`beta`]: rebuilds `(A, B)` from a tuple of subsets.
///
/// Fails when some `(position, level)` pair lies outside the image of `β`
/// (the image misses certain levels at the self-paired position of ²AI/CI).
pub fn beta_inv(f: &Family, sets: &[Vec<i64>]) -> Result<ABPair, String> {
    assert_type_one(f);
    let l = f.l();
    let mut a_out = Vec::new();
    let mut b_out = Vec::new();
    for (pos, set) in sets.iter().enumerate() {
        for &n in set {
            // Exactly one of the two branches hits (pos, n): scan the level-n
            // window for BDI/CI, or use the parity-split closed form for ²AI.
            let a_hit = match f.label {
                FamilyLabel::BDI => {
                    (n * l..(n + 1) * l).find(|&a| f.pos_of_doubled(2 * a) == pos)
                }
                FamilyLabel::CI => {
                    (n * l..(n + 1) * l).find(|&a| f.pos_of_doubled(2 * a + 1) == pos)
                }
                FamilyLabel::TwoAI => {
                    let bit = i64::from(pos as i64 >= l + 1);
                    ((n - bit) % 2 == 0 && n >= bit)
                        .then(|| (n - bit) / 2 * f.m0 + pos as i64)
                }
                _ => unreachable!(),
            };
            let b_hit = match f.label {
                FamilyLabel::BDI => {
                    (n * l..(n + 1) * l).find(|&b| f.pos_of_doubled(2 * (b + l)) == pos)
                }
                FamilyLabel::CI => {
                    (n * l..(n + 1) * l).find(|&b| f.pos_of_doubled(2 * (b + l) + 1) == pos)
                }
                FamilyLabel::TwoAI => {
                    let bit = i64::from(pos as i64 <= l);
                    ((n - bit) % 2 == 0 && n >= bit).then(|| {
                        (n - bit) / 2 * f.m0 + (pos as i64 + l).rem_euclid(f.m0)
                    })
                }
                _ => unreachable!(),
            };
            match (a_hit, b_hit) {
                (Some(a), None) => a_out.push(a),
                (None, Some(b)) => b_out.push(b),
                (Some(_), Some(_)) => {
                    return Err(format!("β is injective but ({pos}, {n}) matched twice"))
                }
                (None, None) => {
                    return Err(format!("({pos}, {n}) is not in the image of β"))
                }
            }
        }
    }
    Ok(ABPair::new(a_out, b_out))
}

/// The canonical splitting of a symmetric dimension vector in a type I family:
/// the unique `(A₀, B₀)` with `F(d_{A₀,B₀}) = 0` obtained from the sets
/// `S′_k = [d_k − d_{k+1}]` (when positive), together with `r = F(d)`.
pub fn canonical_split(f: &Family, d: &DimVector) -> Result<(ABPair, i64), String> {
    assert_type_one(f);
    if !d.is_symmetric(f) {
        return Err("canonical splitting requires a symmetric dimension vector".into());
    }
    let m0 = f.m0 as usize;
    let sets: Vec<Vec<i64>> = (0..m0)
        .map(|p| {
            let here = d.values[p];
            let next = d.values[(p + 1) % m0];
            if here > next {
                (0..here - next).collect()
            } else {
                Vec::new()
            }
        })
        .collect();
    let pair = beta_inv(f, &sets)?;
    Ok((pair, f_value(f, d)?))
}

/// Existence verdict for `G₀`-distinguished elements in `g₁`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum DistinguishedVerdict {
    /// No distinguished element exists.
    None,
    /// Every distinguished element is nilpotent; the possible orbit labels.
    NilpotentOnly(Vec<MultiSegment>),
    /// A distinguished element exists with semisimple part of rank `r`.
    Yes {
        /// Nilpotent-part label of the canonical decomposition (type I), if any.
        pair: Option<ABPair>,
        /// `dim g₁ − dim g₀`, the rank of the semisimple part.
        r: i64,
    },
}

/// Decides existence of distinguished elements:
///
/// * type II — never;
/// * type III — nilpotent only, listed by [`distinguished_segments`];
/// * type I — yes iff `d = d_{A₀,B₀} + r·1` with `r = F(d) ≥ 0`;
/// * type A — yes iff `d` is constant (then `r = 1`) or takes two consecutive
///   values with the larger level supported on a single cyclic interval
///   (`r = 0`).
pub fn distinguished_exists(f: &Family, d: &DimVector) -> DistinguishedVerdict {
    match f.io_type() {
        2 => DistinguishedVerdict::None,
        3 => {
            let list = distinguished_segments(f, d);
            if list.is_empty() {
                DistinguishedVerdict::None
            } else {
                DistinguishedVerdict::NilpotentOnly(list)
            }
        }
        1 => {
            let Ok((pair, r)) = canonical_split(f, d) else {
                return DistinguishedVerdict::None;
            };
            if r < 0 {
                return DistinguishedVerdict::None;
            }
            let base = dim_vector_of(f, &seg_of_ab(f, &pair));
            let residual_ok =
                d.values.iter().zip(&base.values).all(|(x, y)| x - y == r);
            if residual_ok {
                DistinguishedVerdict::Yes { pair: Some(pair), r }
            } else {
                DistinguishedVerdict::None
            }
        }
        _ => {
            // Type A.
            let v = &d.values;
            let max = *v.iter().max().unwrap_or(&0);
            let min = *v.iter().min().unwrap_or(&0);
            if max == 0 {
                DistinguishedVerdict::None
            } else if max == min {
                DistinguishedVerdict::Yes { pair: None, r: 1 }
            } else if max == min + 1 && cyclic_interval(v, max) {
                DistinguishedVerdict::Yes { pair: None, r: 0 }
            } else {
                DistinguishedVerdict::None
            }
        }
    }
}

/// Whether the positions attaining `level` form a single cyclic interval.
fn cyclic_interval(v: &[i64], level: i64) -> bool {
    let n = v.len();
    // Count maximal runs cyclically: exactly one transition into the level.
    let transitions = (0..n).filter(|&i| v[i] != level && v[(i + 1) % n] == level).count();
    transitions == 1 || v.iter().all(|&x| x == level)
}
