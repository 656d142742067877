//! Exact combinatorics of cyclically graded simple Lie algebras.
//!
//! A cyclic grading `g = ⊕_{k ∈ Z/m} g_k` of a simple Lie algebra arises from an
//! automorphism `θ` of order `m`; the `k`-th piece is the `ζ_m^k`-eigenspace.
//! This crate computes, with exact integer and cyclotomic arithmetic only:
//!
//! * finite and affine root-system data — root generation by reflection closure,
//!   marks and comarks, sub-diagrams obtained by deleting one node, and the
//!   center-character pairings attached to such deletions ([`rootsys`]);
//! * Kac coordinates on affine diagrams — the order of the grading, the graded
//!   dimensions `dim g_k`, the defect `r = dim g_1 − dim g_0`, and normalization
//!   into the fundamental alcove ([`kac`]);
//! * cyclic-quiver models of the classical gradings — dimension vectors,
//!   multi-segments labelling graded nilpotent orbits, admissibility and
//!   distinguished-orbit combinatorics ([`quiver`]);
//! * static tables of cuspidal pairs on simple factors ([`cuspdata`]);
//! * the enumeration of gradings carrying bi-orbital supercuspidal data over
//!   all one-node-deleted subdiagrams ([`enumerate`]);
//! * top-level existence/support classification reports and an exact-arithmetic
//!   toolkit for Weyl-element eigenspaces over cyclotomic fields ([`classify`]).
//!
//! # Design
//!
//! * **No floating point.** All linear algebra is over arbitrary-precision
//!   rationals ([`num_rational::BigRational`]); eigenvalues live in exact
//!   cyclotomic fields ([`rootsys::CycloNumber`]).
//! * **`no_std` + `alloc`.** The crate has no operating-system dependencies;
//!   file IO and the command-line front end live in the companion CLI crate.
//! * **Determinism.** Every enumeration is ordered; equal inputs produce
//!   byte-identical serialized output.
#![no_std]
#![forbid(unsafe_code)]
#![warn(missing_docs)]

extern crate alloc;

pub mod classify;
pub mod cuspdata;
pub mod enumerate;
pub mod kac;
pub mod linalg;
pub mod quiver;
pub mod rootsys;

pub use classify::{
    classify_classical, classify_exceptional, ClassificationReport, ExceptionalClassifier,
    GradingClass, LabeledGrading, Support, WeylElement, WeylGroupName,
};
pub use cuspdata::{CuspidalDatum, CuspidalTable};
pub use kac::{GradedDims, KacCoordinates};
pub use quiver::{DimVector, Family, FamilyLabel, MultiSegment};
pub use rootsys::{AffineDiagram, CartanType, CycloNumber, FiniteRootSystem};
