//! Topological classification of quasitoric manifolds over a product of two
//! simplices `Δⁿ × Δᵐ` (second Betti number 2).
//!
//! The crate is layered:
//!
//! - [`lattice`]: exact integer matrices, Hermite/Smith normal forms, kernels.
//! - [`polyring`]: homogeneous bivariate polynomials and truncated products.
//! - [`quasitoric`]: characteristic data, validity, normal forms, cohomology.
//! - [`classify`]: homeomorphism-class labels, decisions, enumeration, counts.
//! - [`oracle`]: brute-force ring-isomorphism search and equivariance witnesses,
//!   used to cross-check the closed-form classifier.

pub mod classify;
pub mod lattice;
pub mod oracle;
pub mod polyring;
pub mod quasitoric;

pub use classify::{
    canonical_class, count_nonbott, enumerate_classes, homeomorphic, tilde_equiv, HomeoClass, Rule,
    TwosSide, Verdict,
};
pub use lattice::{IntMatrix, LatticeBasis};
pub use oracle::{builtin_witness, ring_iso_search, witness_check, IsoVerdict, MonomialWitness};
pub use polyring::{HomogPoly, TruncPoly};
pub use quasitoric::{CharPair, NormalForm, Presentation};
