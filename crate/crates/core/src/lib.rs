//! Equitable dominator coloring of graphs.
//!
//! A coloring is an *equitable dominator coloring* when it is proper, its
//! class sizes differ by at most one, and every vertex dominates (is adjacent
//! to, or is) every member of at least one color class. This crate provides
//!
//! * the named graph families and their complements ([`family`]),
//! * a validator that reports all three conditions with evidence ([`coloring`]),
//! * an exact solver for χ, χ_e, χ_d and χ_ed with a brute-force reference
//!   ([`solver`]),
//! * closed-form values and explicit optimal colorings per family
//!   ([`constructions`]),
//! * χ_ed of complete bipartite graphs via equitable integer partitions
//!   ([`partitions`]),
//! * formula-versus-solver surveys ([`survey`]).

pub mod coloring;
pub mod constructions;
pub mod error;
pub mod family;
pub mod graph;
pub mod io;
pub mod partitions;
pub mod solver;
pub mod survey;

pub use coloring::{validate, Color, Coloring, ColoringReport};
pub use error::{ColoringError, FormatError, FormatErrorKind, GraphError};
pub use family::{Family, FamilyKind, GraphClassSpec};
pub use graph::{Graph, Vertex};
pub use solver::{solve, Budget, ConstraintSet, SolveError, SolveResult};
