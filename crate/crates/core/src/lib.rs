//! Unlabeled interval orders and semiorders through ascent sequences.
//!
//! Every unlabeled interval order on `n` points is coded by exactly one
//! ascent sequence of length `n`, realized here as a minimal endpoint
//! interval representation built move by move. On top of the bijection the
//! crate provides:
//!
//! - recognition of semiorders by interval containment and by the forbidden
//!   subposets `2+2` and `1+3`;
//! - block decompositions of hereditary semiorders (those whose every prefix
//!   codes a semiorder) with a structural order-dimension classifier, plus a
//!   realizer-based dimension oracle for cross-checks;
//! - exact enumeration: rational generating functions over big integers for
//!   the hereditary and dimension-at-most-2 classes, their no-duplicated-
//!   holdings refinements, Catalan numbers, and dominant-pole asymptotics;
//! - an exhaustive census that classifies every sequence of a given length
//!   and a verification suite tying all the routes together.

pub mod ascent;
pub mod blocks;
pub mod counts;
pub mod gf;
pub mod interval;
pub mod poset;
pub mod verify;

pub use ascent::{ascent_count, AscentError, AscentSequence, AscentSequences};
pub use blocks::{
    boundary_labeling, compare_labeling, decompose, is_hereditary, Block, BlockDecomposition,
    BlockError, BlockKind, Boundary, BoundaryKind, Label, NotHereditary,
};
pub use counts::{brute_force_row, brute_force_table, CountError, CountRow};
pub use gf::{
    catalan, dim2_gf, dim2_nodh_gf, hereditary_gf, hereditary_nodh_gf, nodh_semiorder_count,
    Asymptotics, GfError, Polynomial, RationalGf,
};
pub use interval::{
    sequence_from_poset, sequence_from_poset_with_cap, Interval, IntervalError,
    IntervalRepresentation,
};
pub use poset::{patterns, Poset, PosetError};
