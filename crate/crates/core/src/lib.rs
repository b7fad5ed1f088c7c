//! Word-representability of triangular grid graphs and their subdivisions.
//!
//! The crate models finite pieces of the triangular tiling, subdivides cells
//! into plane copies of `K4`, and decides whether the result is
//! word-representable. Three independent routes are provided:
//!
//! * the characterization on subdivided interior cells
//!   ([`SubdividedGraph::is_word_representable`]),
//! * an exhaustive search for semi-transitive orientations
//!   ([`find_semi_transitive_orientation`]),
//! * an induced-subgraph matcher for the seven-vertex obstruction
//!   ([`find_induced_pattern`] with [`generators::a_double_prime`]).
//!
//! Boundary subdivisions additionally get an explicit witness, the smart
//! orientation built by [`smart_orient`].
//!
//! Everything here is `no_std` + `alloc`; document formats and the command
//! line live in the companion `trigrid` crate.
#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod crossval;
pub mod generators;
pub mod graph;
pub mod grid;
pub mod matcher;
pub mod orientation;
pub mod smart;
pub mod subdivision;
pub mod word;

pub use crossval::{cross_validate, Consistency, CrossValidation};
pub use graph::{Graph, GraphError};
pub use grid::{
    BoundaryType, CellKind, CellRef, EdgeKind, GridCoord, GridEdge, GridError, Pointing,
    PropertySet, TriGridGraph,
};
pub use matcher::{find_induced_pattern, MatchOutcome};
pub use orientation::{
    find_semi_transitive_orientation, orient_by_coloring, OrientationError, OrientedGraph,
    SearchOutcome, SearchResult, SearchStats, ShortcutWitness, DEFAULT_BUDGET,
};
pub use smart::{
    arc_class, check_path_properties, default_choice, grid_arc_direction, licensed_templates, smart_orient,
    template_for, ArcClass, Assignments, CellTemplate, PathViolation, SmartError, TemplateChoice,
};
pub use subdivision::{SubdividedGraph, SubdivisionError, Vertex};
pub use word::{find_k_uniform_representant, Word, WordError, WordSearch};
