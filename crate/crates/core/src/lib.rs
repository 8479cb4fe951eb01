//! Anti-Ramsey numbers `AR(n, G)` of graphs with at most four edges.
//!
//! `AR(n, G)` is the least `r` such that every edge coloring of `K_n` with at
//! least `r` colors contains a copy of `G` whose edges all have different
//! colors. This crate provides the closed-form values ([`formulas`]), the
//! extremal colorings ([`coloring`]), rainbow detection ([`rainbow`]) and an
//! exact branch-and-bound search ([`search`]) that recomputes the values
//! independently for small `n`.

pub mod coloring;
pub mod error;
pub mod formulas;
pub mod graph;
pub mod rainbow;
pub mod search;
pub mod table;

pub use coloring::{Certificate, Construction, EdgeColoring};
pub use error::{Error, Result};
pub use formulas::{ar_formula, FormulaValue};
pub use graph::{catalog, lookup, EdgeIndex, Embedding, PatternGraph};
pub use rainbow::{count_rainbow, find_rainbow, RainbowWitness};
pub use search::{
    anti_ramsey, decide, max_colors_no_rainbow, verify_certificate, Decision, Search, SearchBudget, SearchResult, SearchStatus,
};
