//! Strong edge coloring toolkit.
//!
//! A strong edge coloring gives distinct colors to any two edges that
//! share an endpoint or are joined by a third edge (equivalently, every
//! path of length three uses three distinct colors). This crate provides:
//!
//! - a compact immutable [`graph::Graph`] with graph6 / DIMACS / edge-list
//!   parsing and serialization ([`formats`]),
//! - structural checkers: degeneracy, forests of 3+-vertices,
//!   biconnectivity, chordless and minimally 2-connected graphs
//!   ([`structure`]),
//! - the star decomposition that drives greedy coloring ([`decompose`]),
//! - greedy strong edge coloring with a guaranteed palette of
//!   `(4k-2)*delta - 2k^2 + 1` colors on k-degenerate graphs and
//!   `4*delta - 3` when the 3+-vertices induce a forest, a list-coloring
//!   variant, and a verifier ([`coloring`]),
//! - an exact strong-chromatic-index solver for small graphs ([`exact`]),
//! - deterministic generators for the graph families used in tests and
//!   benchmarks ([`generators`]).

pub mod coloring;
pub mod decompose;
pub mod exact;
pub mod formats;
pub mod generators;
pub mod graph;
pub mod structure;

pub use coloring::{
    bound_table, greedy_list_strong_coloring, greedy_strong_coloring, palette_bound,
    parse_coloring, serialize_coloring, verify_strong_coloring, BoundTable, ColorLists, ColorMode,
    ColoringError, ColoringReport, EdgeColoring, Palette, PaletteMode,
};
pub use decompose::{
    build_star_sequence, find_nice_vertex, find_nice_vertex_forest, DecomposeError,
    StarDecomposition, StarMode, StarStep,
};
pub use exact::{
    exact_strong_chromatic_index, is_strongly_colorable, strong_clique_lower_bound, ExactError,
    SearchLimits,
};
pub use formats::{parse_graph, serialize_graph, FormatError, GraphFormat};
pub use generators::{generate, GenError, GenKind, GenSpec, SplitMix64};
pub use graph::{Edge, Graph, GraphError};
pub use structure::{structure_report, StructureReport};
