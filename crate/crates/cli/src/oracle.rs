//! Brute-force graded-Jordan oracle.
//!
//! Builds a concrete matrix model of the degree-1 piece `g₁` of a classical
//! cyclic grading, samples (or exhaustively enumerates) elements with small
//! integer coordinates, and extracts the graded Jordan type of each nilpotent
//! sample by exact rank computations. The set of multi-segments observed this
//! way is compared against the combinatorial admissibility predicate of the
//! core crate.
//!
//! # The matrix model
//!
//! `V = ⊕_p V_p` is graded by the family's index set (positions `0..m₀`,
//! position `p` sitting at doubled index `2p + offset`). For families with a
//! form, `V` carries a nondegenerate pairing `B` coupling `V_p` with `V_{−p}`,
//! and `x ∈ g₁` is a degree-1 map that is anti-self-adjoint for `B` (up to a
//! fixed scalar twist for the unitary families, which rescales blocks and
//! never changes any rank). Concretely, writing `X_p : V_p → V_{p+1}` for the
//! blocks of `x`:
//!
//! * edges pair up under `p ↦ −(p+1)`: one block of each pair is free, the
//!   other is a fixed invertible transform of its transpose;
//! * an edge fixed by the pairing carries a symmetric or antisymmetric square
//!   block (the `S²`/`∧²` summands of `dim g₁`);
//! * a self-paired position carries a symmetric (identity) or antisymmetric
//!   (standard symplectic) form matrix, which enters the adjacent determined
//!   blocks.
//!
//! The free-parameter count of the model equals `dim g₁` and the analogous
//! degree-0 count equals `dim G₀`; both identities are asserted in tests
//! against the closed forms of the core crate.

use graded_lie_core::quiver::{
    self, DimVector, Family, FamilyLabel, FormClass, MultiSegment,
};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::collections::BTreeSet;

/// A dense integer matrix (row-major), possibly empty in either dimension.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mat {
    /// Number of rows.
    pub rows: usize,
    /// Number of columns.
    pub cols: usize,
    /// Row-major entries.
    pub a: Vec<i128>,
}

impl Mat {
    /// Zero matrix.
    pub fn zero(rows: usize, cols: usize) -> Self {
        Mat { rows, cols, a: vec![0; rows * cols] }
    }

    /// Identity matrix.
    pub fn identity(n: usize) -> Self {
        let mut m = Mat::zero(n, n);
        for i in 0..n {
            m.a[i * n + i] = 1;
        }
        m
    }

    /// Split symmetric form: the exchange (antidiagonal) matrix. Unlike the
    /// identity form it has maximal isotropic subspaces over the rationals,
    /// which wrap-around graded Jordan types require.
    pub fn split_symmetric(n: usize) -> Self {
        let mut m = Mat::zero(n, n);
        for i in 0..n {
            m.a[i * n + (n - 1 - i)] = 1;
        }
        m
    }

    /// Standard symplectic form `J` on an even-dimensional space:
    /// `J(e_{2i}, e_{2i+1}) = 1 = −J(e_{2i+1}, e_{2i})`.
    pub fn symplectic(n: usize) -> Self {
        assert!(n % 2 == 0, "symplectic form needs even dimension");
        let mut m = Mat::zero(n, n);
        for i in 0..n / 2 {
            m.a[(2 * i) * n + 2 * i + 1] = 1;
            m.a[(2 * i + 1) * n + 2 * i] = -1;
        }
        m
    }

    /// Entry accessor.
    pub fn at(&self, r: usize, c: usize) -> i128 {
        self.a[r * self.cols + c]
    }

    fn at_mut(&mut self, r: usize, c: usize) -> &mut i128 {
        &mut self.a[r * self.cols + c]
    }

    /// Matrix product `self · rhs`.
    pub fn mul(&self, rhs: &Mat) -> Mat {
        assert_eq!(self.cols, rhs.rows);
        let mut out = Mat::zero(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let v = self.at(i, k);
                if v == 0 {
                    continue;
                }
                for j in 0..rhs.cols {
                    *out.at_mut(i, j) += v * rhs.at(k, j);
                }
            }
        }
        out
    }

    /// Transpose.
    pub fn transpose(&self) -> Mat {
        let mut out = Mat::zero(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                *out.at_mut(j, i) = self.at(i, j);
            }
        }
        out
    }

    /// Whether every entry is zero.
    pub fn is_zero(&self) -> bool {
        self.a.iter().all(|&x| x == 0)
    }

    /// Exact rank by fraction-free (Bareiss) elimination.
    pub fn rank(&self) -> usize {
        let mut m = self.a.clone();
        let (rows, cols) = (self.rows, self.cols);
        let mut rank = 0usize;
        let mut prev: i128 = 1;
        let mut row = 0usize;
        for col in 0..cols {
            if row == rows {
                break;
            }
            // Find a pivot in this column.
            let mut piv = row;
            while piv < rows && m[piv * cols + col] == 0 {
                piv += 1;
            }
            if piv == rows {
                continue;
            }
            if piv != row {
                for c in 0..cols {
                    m.swap(row * cols + c, piv * cols + c);
                }
            }
            let p = m[row * cols + col];
            for r in row + 1..rows {
                let f = m[r * cols + col];
                for c in 0..cols {
                    let v = p * m[r * cols + c] - f * m[row * cols + c];
                    m[r * cols + c] = v / prev;
                }
            }
            prev = p;
            row += 1;
            rank += 1;
        }
        rank
    }
}

/// One quiver edge `V_p → V_{p+1}` of the block model.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum EdgeSpec {
    /// Fully free block.
    Free,
    /// Transform of the transpose of the block at `owner`.
    Determined {
        /// Edge index whose block determines this one.
        owner: usize,
    },
    /// Square block constrained to be symmetric.
    FixedSym,
    /// Square block constrained to be antisymmetric.
    FixedAlt,
}

/// The block model of `g₁` for one family and dimension vector.
#[derive(Debug, Clone)]
pub struct BlockModel {
    /// The classical family.
    pub family: Family,
    /// Dimension per position.
    pub dims: Vec<usize>,
    /// One edge spec per position `p` (the edge `V_p → V_{p+1}`).
    pub edges: Vec<EdgeSpec>,
    /// Form matrix per position (`None` when the position pairs with a
    /// different one; the pairing is then the identity).
    pub forms: Vec<Option<Mat>>,
    /// Number of free parameters (= `dim g₁`).
    pub params: usize,
}

/// Whether a self-paired position carries a symmetric form (`true`) or an
/// antisymmetric one (`false`), per the fixed-subgroup factors `SO`/`Sp`.
fn self_paired_sym(f: &Family, p: usize) -> bool {
    match f.label {
        FamilyLabel::A => unreachable!("type A has no form"),
        FamilyLabel::TwoAI | FamilyLabel::BDIII => true, // SO(V₀)
        FamilyLabel::CIII => false,                      // Sp(V₀)
        FamilyLabel::TwoAII => false,                    // Sp(V_{l+½}) at p = l
        FamilyLabel::BDI => true,                        // SO(V₀), SO(V_l)
        FamilyLabel::CII => false,                       // Sp(V₀), Sp(V_l)
        FamilyLabel::TwoAIIIi => p == 0,                 // SO(V₀), Sp(V_l)
        FamilyLabel::CI | FamilyLabel::BDII | FamilyLabel::TwoAIIIii => {
            unreachable!("half-integer even families have no self-paired position")
        }
    }
}

/// Whether a fixed edge carries a symmetric block (`S²`, `true`) or an
/// antisymmetric one (`∧²`, `false`), per the `dim g₁` summands.
fn fixed_edge_sym(f: &Family, p: usize) -> bool {
    let m0 = f.m0 as usize;
    let l = f.l() as usize;
    match f.label {
        FamilyLabel::TwoAI => true,          // S²V_l* at p = l
        FamilyLabel::TwoAII => false,        // ∧²V_½ at p = m₀−1
        FamilyLabel::CIII => true,           // S²V_l*
        FamilyLabel::BDIII => false,         // ∧²V_l*
        FamilyLabel::CI => true,             // S² at both fixed edges
        FamilyLabel::BDII => false,          // ∧² at both fixed edges
        FamilyLabel::TwoAIIIii => {
            // S²V_{l−½}* at p = l−1, ∧²V_½ at p = m₀−1.
            if p == l - 1 {
                true
            } else {
                assert_eq!(p, m0 - 1);
                false
            }
        }
        _ => unreachable!("family has no fixed edge"),
    }
}

impl BlockModel {
    /// Builds the model. Returns `None` when no grading with this dimension
    /// vector exists in the family (asymmetric `d`, or odd dimension at a
    /// symplectic self-paired position).
    pub fn new(f: &Family, d: &DimVector) -> Option<Self> {
        let m0 = f.m0 as usize;
        assert_eq!(d.values.len(), m0);
        let dims: Vec<usize> = d.values.iter().map(|&x| x as usize).collect();
        let formed = f.form_class() != FormClass::None;
        if formed && !d.is_symmetric(f) {
            return None;
        }
        let mut forms: Vec<Option<Mat>> = vec![None; m0];
        if formed {
            for p in 0..m0 {
                if f.neg_pos(p) == p {
                    if self_paired_sym(f, p) {
                        forms[p] = Some(Mat::split_symmetric(dims[p]));
                    } else {
                        if dims[p] % 2 != 0 {
                            return None;
                        }
                        forms[p] = Some(Mat::symplectic(dims[p]));
                    }
                }
            }
        }
        let mut edges: Vec<EdgeSpec> = Vec::with_capacity(m0);
        let mut params = 0usize;
        for p in 0..m0 {
            let shape = (dims[(p + 1) % m0], dims[p]);
            if !formed {
                edges.push(EdgeSpec::Free);
                params += shape.0 * shape.1;
                continue;
            }
            let partner = f.neg_pos((p + 1) % m0);
            if partner == p {
                // Fixed edge: square block, symmetric or antisymmetric.
                assert_eq!(shape.0, shape.1);
                let n = shape.0;
                if fixed_edge_sym(f, p) {
                    edges.push(EdgeSpec::FixedSym);
                    params += n * (n + 1) / 2;
                } else {
                    edges.push(EdgeSpec::FixedAlt);
                    params += n * n.saturating_sub(1) / 2;
                }
            } else if partner > p {
                edges.push(EdgeSpec::Free);
                params += shape.0 * shape.1;
            } else {
                edges.push(EdgeSpec::Determined { owner: partner });
            }
        }
        Some(BlockModel { family: *f, dims, edges, forms, params })
    }

    /// Degree-0 analogue of the free-parameter count: `dim G₀` derived from
    /// the same model (free `gl` blocks on one position of each pair, plus
    /// `so`/`sp` at self-paired positions).
    pub fn degree_zero_params(&self) -> usize {
        let f = &self.family;
        if f.form_class() == FormClass::None {
            // `PGL`-type quotient: the global scalar acts trivially.
            return self.dims.iter().map(|&n| n * n).sum::<usize>().saturating_sub(1);
        }
        let mut total = 0usize;
        for p in 0..self.dims.len() {
            let q = f.neg_pos(p);
            let n = self.dims[p];
            if q == p {
                total += if self_paired_sym(f, p) {
                    n * n.saturating_sub(1) / 2 // so(n)
                } else {
                    n * (n + 1) / 2 // sp(n)
                };
            } else if q > p {
                total += n * n; // gl(n)
            }
        }
        total
    }

    /// Form (or pairing) matrix at a position: the stored form at self-paired
    /// positions, identity otherwise.
    fn gmat(&self, p: usize) -> Mat {
        match &self.forms[p] {
            Some(m) => m.clone(),
            None => Mat::identity(self.dims[p]),
        }
    }

    /// Instantiates the blocks from a parameter assignment.
    pub fn blocks(&self, vals: &[i128]) -> Vec<Mat> {
        assert_eq!(vals.len(), self.params);
        let m0 = self.dims.len();
        let mut it = vals.iter().copied();
        let mut blocks: Vec<Mat> = Vec::with_capacity(m0);
        for p in 0..m0 {
            let (rows, cols) = (self.dims[(p + 1) % m0], self.dims[p]);
            let block = match &self.edges[p] {
                EdgeSpec::Free => {
                    let mut b = Mat::zero(rows, cols);
                    for r in 0..rows {
                        for c in 0..cols {
                            *b.at_mut(r, c) = it.next().unwrap();
                        }
                    }
                    b
                }
                EdgeSpec::FixedSym => {
                    let mut b = Mat::zero(rows, cols);
                    for r in 0..rows {
                        for c in r..cols {
                            let v = it.next().unwrap();
                            *b.at_mut(r, c) = v;
                            *b.at_mut(c, r) = v;
                        }
                    }
                    b
                }
                EdgeSpec::FixedAlt => {
                    let mut b = Mat::zero(rows, cols);
                    for r in 0..rows {
                        for c in r + 1..cols {
                            let v = it.next().unwrap();
                            *b.at_mut(r, c) = v;
                            *b.at_mut(c, r) = -v;
                        }
                    }
                    b
                }
                EdgeSpec::Determined { .. } => Mat::zero(rows, cols), // second pass
            };
            blocks.push(block);
        }
        assert!(it.next().is_none());
        // Second pass: determined blocks `X_{−(p+1)} = G_p⁻¹ X_pᵀ G_{p+1}`
        // (invertible scalar factors dropped — they change no rank).
        let f = &self.family;
        for p in 0..m0 {
            if let EdgeSpec::Determined { owner } = self.edges[p] {
                let left = self.gmat(f.neg_pos(owner)); // acts on V_{−owner}
                let right = self.gmat((owner + 1) % m0);
                // X_owner : V_owner → V_{owner+1}; transpose: V_{owner+1}* → V_owner*;
                // with the pairings this is a map V_{−(owner+1)} → V_{−owner}.
                blocks[p] = left.mul(&blocks[owner].transpose()).mul(&right);
                assert_eq!(blocks[p].rows, self.dims[(p + 1) % m0]);
                assert_eq!(blocks[p].cols, self.dims[p]);
            }
        }
        blocks
    }

    /// Graded Jordan type of a sample; `None` when the element is not
    /// nilpotent.
    ///
    /// The rank difference `c(a,ℓ) = rank(x^{ℓ−1}|_{V_a}) − rank(x^ℓ|_{V_a})`
    /// counts the segments of length `≥ ℓ` ending at position `a + ℓ − 1`;
    /// writing `m(p,L)` for the multiplicity of the segment of exact length
    /// `L` starting at `p`, this gives the triangular system
    /// `c(a,ℓ) = Σ_{s≥0} m(a−s, ℓ+s)`, solved here by descending `ℓ`.
    /// (For segments shorter than the quiver cycle only the `s = 0` term
    /// survives and `c(a,ℓ)` reduces to the count of segments starting at `a`
    /// with length `≥ ℓ`.)
    pub fn jordan_type(&self, blocks: &[Mat]) -> Option<MultiSegment> {
        let f = &self.family;
        let m0 = self.dims.len();
        let total: usize = self.dims.iter().sum();
        if total == 0 {
            return Some(MultiSegment::empty());
        }
        // Ranks of x^ℓ restricted to each position, ℓ = 0..=total.
        let mut ranks: Vec<Vec<usize>> = vec![Vec::with_capacity(total + 1); m0];
        let mut powers: Vec<Mat> = (0..m0).map(|p| Mat::identity(self.dims[p])).collect();
        for p in 0..m0 {
            ranks[p].push(self.dims[p]);
        }
        for ell in 1..=total {
            for p in 0..m0 {
                let next_edge = (p + ell - 1) % m0;
                powers[p] = blocks[next_edge].mul(&powers[p]);
                ranks[p].push(powers[p].rank());
            }
            if (0..m0).all(|p| ranks[p][ell] == 0) {
                break;
            }
        }
        // Nilpotency: x^total must vanish on every position.
        if (0..m0).any(|p| *ranks[p].last().unwrap() != 0) {
            return None;
        }
        let rk = |p: usize, ell: usize| -> i64 {
            if ell < ranks[p].len() {
                ranks[p][ell] as i64
            } else {
                0
            }
        };
        // m[p][ℓ] = multiplicity of the segment of exact length ℓ starting at p.
        let mut mults = vec![vec![0i64; total + 1]; m0];
        for ell in (1..=total).rev() {
            for a in 0..m0 {
                let c = rk(a, ell - 1) - rk(a, ell);
                let mut longer = 0i64;
                for s in 1..=(total - ell) {
                    let p = (a + m0 - s % m0) % m0;
                    longer += mults[p][ell + s];
                }
                let mult = c - longer;
                assert!(mult >= 0, "inconsistent graded ranks");
                mults[a][ell] = mult;
            }
        }
        let mut raw: Vec<(i64, i64, i64)> = Vec::new();
        for p in 0..m0 {
            for ell in 1..=total {
                if mults[p][ell] > 0 {
                    let a = f.doubled_of_pos(p);
                    raw.push((a, a + 2 * (ell as i64 - 1), mults[p][ell]));
                }
            }
        }
        Some(MultiSegment::new(f, raw))
    }
}

/// All multi-segments with a given dimension vector.
pub fn multisegments_with_dims(f: &Family, d: &DimVector) -> Vec<MultiSegment> {
    let total = d.total();
    if total == 0 {
        return vec![MultiSegment::empty()];
    }
    // Candidate segments: canonical start, any length fitting the total.
    let mut cands: Vec<(i64, i64)> = Vec::new();
    for p in 0..f.m0 {
        let a = f.doubled_of_pos(p as usize);
        for len in 1..=total {
            cands.push((a, a + 2 * (len - 1)));
        }
    }
    fn fits(f: &Family, remaining: &mut [i64], a: i64, b: i64) -> bool {
        let mut x = a;
        while x <= b {
            let p = f.pos_of_doubled(x);
            if remaining[p] == 0 {
                // Roll back what we took.
                let mut y = a;
                while y < x {
                    remaining[f.pos_of_doubled(y)] += 1;
                    y += 2;
                }
                return false;
            }
            remaining[p] -= 1;
            x += 2;
        }
        true
    }
    fn unfit(f: &Family, remaining: &mut [i64], a: i64, b: i64) {
        let mut x = a;
        while x <= b {
            remaining[f.pos_of_doubled(x)] += 1;
            x += 2;
        }
    }
    fn search(
        f: &Family,
        cands: &[(i64, i64)],
        idx: usize,
        remaining: &mut Vec<i64>,
        chosen: &mut Vec<(i64, i64)>,
        out: &mut Vec<MultiSegment>,
    ) {
        if remaining.iter().all(|&x| x == 0) {
            out.push(MultiSegment::new(f, chosen.iter().map(|&(a, b)| (a, b, 1))));
            return;
        }
        if idx == cands.len() {
            return;
        }
        // Take the candidate any number of times (including zero).
        let (a, b) = cands[idx];
        let mut taken = 0usize;
        loop {
            search(f, cands, idx + 1, remaining, chosen, out);
            if fits(f, remaining, a, b) {
                chosen.push((a, b));
                taken += 1;
            } else {
                break;
            }
        }
        for _ in 0..taken {
            chosen.pop();
            unfit(f, remaining, a, b);
        }
    }
    let mut out = Vec::new();
    let mut remaining = d.values.clone();
    let mut chosen = Vec::new();
    search(f, &cands, 0, &mut remaining, &mut chosen, &mut out);
    out.sort();
    out.dedup();
    out
}

/// The admissible multi-segments with a given dimension vector, per the core
/// combinatorial predicate.
pub fn admissible_set(f: &Family, d: &DimVector) -> BTreeSet<MultiSegment> {
    multisegments_with_dims(f, d)
        .into_iter()
        .filter(|s| quiver::is_admissible(f, s))
        .collect()
}

/// Outcome of an oracle run.
#[derive(Debug, Clone)]
pub struct OracleRun {
    /// Distinct graded Jordan types observed among nilpotent samples.
    pub observed: BTreeSet<MultiSegment>,
    /// Number of free parameters of the model.
    pub params: usize,
    /// Whether the `{0,1}` parameter cube was enumerated exhaustively.
    pub exhaustive: bool,
    /// Number of random samples drawn (in addition to any exhaustive pass).
    pub random_samples: u64,
}

/// Maximum parameter count for the exhaustive `{0,1}` pass.
pub const EXHAUSTIVE_LIMIT: usize = 12;

/// Runs the graded-Jordan oracle: an exhaustive pass over `{0,1}` parameters
/// when there are at most [`EXHAUSTIVE_LIMIT`] of them, plus `samples` random
/// draws with entries in `{−2,…,2}`. Deterministic for a fixed seed. Returns
/// `None` when the dimension vector admits no grading in the family.
pub fn run_oracle(f: &Family, d: &DimVector, samples: u64, seed: u64) -> Option<OracleRun> {
    run_oracle_with_limit(f, d, samples, seed, EXHAUSTIVE_LIMIT)
}

/// [`run_oracle`] with an explicit bound on the exhaustive-pass parameter
/// count (callers with a large time budget can raise it).
pub fn run_oracle_with_limit(
    f: &Family,
    d: &DimVector,
    samples: u64,
    seed: u64,
    limit: usize,
) -> Option<OracleRun> {
    let model = BlockModel::new(f, d)?;
    let mut observed = BTreeSet::new();
    let exhaustive = model.params <= limit;
    if exhaustive {
        // Form-free families decompose over {0,1} entries (direct sums of
        // segment modules in the standard basis); with a form the determined
        // partner blocks carry form-induced signs, so the free entries need
        // the alphabet {−1,0,1} to reach every graded Jordan type.
        let alphabet: &[i128] =
            if f.form_class() == FormClass::None { &[0, 1] } else { &[-1, 0, 1] };
        let base = alphabet.len() as u64;
        let count = base.checked_pow(model.params as u32).expect("exhaustive pass too large");
        let mut vals = vec![0i128; model.params];
        for mut code in 0u64..count {
            for v in vals.iter_mut() {
                *v = alphabet[(code % base) as usize];
                code /= base;
            }
            let blocks = model.blocks(&vals);
            if let Some(s) = model.jordan_type(&blocks) {
                observed.insert(s);
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..samples {
        let vals: Vec<i128> = (0..model.params).map(|_| rng.gen_range(-2i128..=2)).collect();
        let blocks = model.blocks(&vals);
        if let Some(s) = model.jordan_type(&blocks) {
            observed.insert(s);
        }
    }
    Some(OracleRun { observed, params: model.params, exhaustive, random_samples: samples })
}
