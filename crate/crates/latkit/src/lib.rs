//! Finite order-algebra workbench: pointed lattices, their congruence
//! theory, finite residuated lattices, and exhaustive small-model audits
//! of the structural characterizations connecting them.
//!
//! The crate is organized around dense-table algebras on `{0..n-1}`:
//!
//! - [`order`]: finite lattices and pointed lattices, element and
//!   structural classifications, filters and ideals, isomorphism.
//! - [`logic`]: a small term DSL, satisfaction of positive universal
//!   sentences and quasi-equations, and the residuated translation of
//!   pointed-lattice axioms.
//! - [`congruence`]: congruence generation and lattices, quotients,
//!   kernel congruences, and the semi-prime-pointed decision procedures.
//! - [`construct`]: unit adjunction, doubling, prime covers, ideal
//!   completion, join-closure envelopes, products, and fixtures.
//! - [`rl`]: finite residuated lattices, the drastic multiplication,
//!   multiplicative filters, one-sided congruences, and enumeration.
//! - [`cancellative`]: the bounded-vector construction embedding any
//!   finite lattice (with a unit on top) into a simple integral
//!   cancellative commutative residuated lattice.
//! - [`enumerate`]: catalogs of lattices and pointed lattices up to
//!   isomorphism, with an independent counting oracle.
//! - [`audits`]: named theorem audits runnable over whole catalogs.
//! - [`fileio`]: the line-based algebra file format and DOT export.

pub mod audits;
pub mod bitset;
pub mod cancellative;
pub mod congruence;
pub mod construct;
pub mod enumerate;
pub mod fileio;
pub mod logic;
pub mod order;
pub mod rl;

pub use bitset::{Elem, ElemSet};
pub use order::{FiniteLattice, PointedLattice};
