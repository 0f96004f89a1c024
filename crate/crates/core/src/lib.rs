//! Universality of integral quadratic lattices over dyadic local fields.
//!
//! Lattices are given by good BONGs. Universality is decided twice, once by
//! the closed-form case analysis on `R_i` and `alpha_i` and once by sweeping
//! the unary targets of order `0` and `1` through the representation
//! conditions, and both can be checked against exhaustive residue
//! enumeration.

pub mod bong;
pub mod cli;
pub mod error;
pub mod field;
pub mod lattice;
pub mod oracle;
pub mod symbols;
pub mod sweep;
pub mod universality;

pub use bong::{GoodBongLattice, HalfInt};
pub use error::{Error, Result};
pub use field::{DyadicField, FieldElement, FieldSpec};
pub use lattice::GramLattice;
pub use symbols::{Defect, DiagonalSpace};
pub use universality::{decide_universal_lemma, decide_universal_thm, explain, UniversalityVerdict};
