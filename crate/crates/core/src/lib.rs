//! Finite monoid-graded near-rings.
//!
//! The crate builds and validates graded near-rings from Cayley tables,
//! enumerates their (graded) ideals, classifies each graded ideal as graded
//! prime, graded weakly prime and graded almost prime, and sweeps a registry of
//! universally quantified statements about those notions over a corpus of
//! small structures, reporting either "verified on corpus" or concrete,
//! replayable counterexamples.
//!
//! Module map:
//!
//! * [`algebra`]: monoids, near-rings, additive subgroups;
//! * [`grading`]: gradings and homogeneous components;
//! * [`ideal`]: ideal closure, sums, products, residuals, enumeration;
//! * [`classify`]: the three primality predicates;
//! * [`construct`]: products, quotients, homomorphisms;
//! * [`claims`]: the claim registry, sweep engine and factorisation search;
//! * [`io`]: structure files, builders, the default corpus, reports.

pub mod algebra;
pub mod claims;
pub mod classify;
pub mod construct;
pub mod grading;
pub mod ideal;
pub mod io;
pub mod subset;

pub use algebra::{AlgebraError, FiniteMonoid, FiniteNearRing};
pub use classify::{Classification, ClassifyConfig, Domain, Lattice, Predicate, Verdict};
pub use grading::{GradedNearRing, Grading, GradingError};
pub use ideal::{IdealSet, ProductMode};
pub use subset::{SubSet, MAX_ORDER};
