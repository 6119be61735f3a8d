//! Exact structural predicates on a single graph.
//!
//! Everything here is a pure function of an immutable [`Graph`](crate::Graph).

mod degree;
mod domination;
mod separation;
mod verdict;

pub use degree::{
    isolated_edges, isolated_vertices, valence_one_not_on_isolated_edge, valence_one_vertices,
};
pub use domination::{
    count_domination_diamonds, count_domination_pairs, dominates, domination_report,
    domination_report_capped, first_domination_pair, for_each_domination_pair,
    has_domination_pair, has_nonadjacent_domination_pair, DominationCounts, DominationReport,
};
pub use separation::{
    complementary_components, first_star_cut_vertex, is_star_cut_vertex, is_star_two_connected,
    proper_star_k_separation_count, proper_star_k_separations, star_cut_vertices,
    star_separation_report, transvection_reducible, StarSeparation, StarSeparationReport,
};
pub use verdict::{finiteness_verdict, FinitenessLabel, FinitenessVerdict};

use crate::GraphError;

/// Errors from detectors that take parameters beyond a graph.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum DetectorError {
    /// Invalid vertex argument.
    #[error(transparent)]
    Graph(#[from] GraphError),
    /// Separation size outside `1..=n`.
    #[error("separation size k={k} out of range 1..={n}")]
    SizeOutOfRange {
        /// Requested size.
        k: usize,
        /// Vertex count.
        n: usize,
    },
    /// A separation count exceeded `u128`.
    #[error("proper star {k}-separation count overflows u128")]
    CountOverflow {
        /// Size whose count overflowed.
        k: usize,
    },
}
