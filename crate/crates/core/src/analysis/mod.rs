//! Locality, classification of local quadratic algebras, ideal diagrams and
//! the text file format.

mod classify;
mod dot;
pub mod format;
mod locality;

pub use classify::{
    analyze, classify_local_quadratic, local_patterns, AnalysisReport, Classification, Dimensions,
    LocalPatterns, Predicates, QuadraticStatus,
};
pub use dot::{chain_dot, chain_dot_with, covering_edges, dot_node_count, is_chain, named_ideals, NamedIdeal};
pub use format::{parse, serialize, AlgebraFile};
pub use locality::{is_local, locality_report, LeviCheck, LocalityReport};
