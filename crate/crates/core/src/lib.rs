//! Finite De Morgan Heyting algebras and L-fuzzy rough approximation operators.
//!
//! This crate builds finite lattices with a Heyting implication and an
//! antitone involution, defines L-fuzzy sets and relations over them, and
//! provides the upper/lower rough approximation operators together with
//! machinery to check, exhaustively at desk scale, how properties of a
//! relation correspond to inequalities between composed operators.
//!
//! The main pieces:
//!
//! - [`lattice`]: finite lattices, De Morgan Heyting algebras, and a small
//!   catalog of standard algebras.
//! - [`fuzzy`]: L-fuzzy sets and relations over a finite universe, with
//!   pointwise algebra and exhaustive enumeration.
//! - [`approx`]: the upper and lower approximation operators, the residuated
//!   lower variant, and composed operator words.
//! - [`relations`]: the twelve relation properties with witness reporting.
//! - [`correspondence`]: operator laws quantified over all fuzzy sets,
//!   property/law agreement sweeps, and counterexample search.
//! - [`reconstruction`]: deciding when an abstract operator is the upper
//!   approximation of a (unique) relation, and single-axiom characterizations.
//! - [`crisp`]: classical binary relations and rough approximations over
//!   bitsets, cross-checked against the two-element Boolean embedding.
//! - [`io`]: JSON schemas for lattices, relations, sets, operators and axioms.

pub mod approx;
pub mod correspondence;
pub mod crisp;
pub mod fuzzy;
pub mod io;
pub mod lattice;
pub mod reconstruction;
pub mod relations;

pub use approx::{apply_word, lower, lower_residuated, upper, Letter, OperatorWord, WordError};
pub use correspondence::{
    law_holds, search_counterexample, sweep, CorrespondenceError, LawRelation, LawReport,
    OperatorLaw, RelationPredicate, SweepReport,
};
pub use fuzzy::{Context, EnumCaps, FuzzyError, FuzzyRelation, FuzzySet, Point, Universe};
pub use lattice::{standard_algebra, DmhAlgebra, Elem, FiniteLattice, LatticeError};
pub use relations::{PropertyKind, PropertyReport, UnsupportedKindError, Witness};
