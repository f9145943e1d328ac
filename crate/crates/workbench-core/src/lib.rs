//! Exact computational workbench for the binary octahedral group.
//!
//! Everything here is symbolic: scalars live in the degree-8 cyclotomic field
//! containing `i`, `sqrt2`, `sqrt3` and the primitive cube root of unity, and
//! all linear algebra, group closure, character-table and group-algebra
//! computations are performed without floating point. The crate provides:
//!
//! * [`exact`] — rationals, cyclotomic numbers, exact matrices, modular scalars;
//! * [`group`] — matrix-group closure, Cayley tables, conjugacy classes, quotients;
//! * [`octa`] — the concrete order-48 group, its order-16 and order-6 subgroups,
//!   the normal-subgroup chain, and named elements;
//! * [`chartab`] — character tables from scratch (Dixon's modular method) plus
//!   tensor/symmetrisation functors, restriction, induction and Wedderburn types;
//! * [`reps`] — explicit irreducible matrix representations, quaternionic
//!   realisations, hypercube closures, reflection eigenframes;
//! * [`algebra`] — the group algebra: convolution, central idempotents,
//!   projectors, complex structures, the Dirac-relation comparison;
//! * [`expr`] — the small query language for tensor decompositions;
//! * [`report`] and [`suites`] — deterministic verification reports.
//!
//! Every value is immutable once constructed and every operation is pure,
//! so independent computations can safely run concurrently; nothing here
//! locks or shares mutable state.

pub mod algebra;
pub mod chartab;
pub mod exact;
pub mod expr;
pub mod group;
pub mod octa;
pub mod report;
pub mod reps;
pub mod suites;

pub use exact::{Cyclotomic, ExactMatrix, Rational};
pub use group::FiniteGroup;
