//! Zero forcing analysis for small graphs.
//!
//! The crate implements the color-change closure and exact zero forcing
//! computations, the layered removal of double pendants (B-vertices) with
//! the irrelevant-vertex characterization for trees, the star-removal
//! decision procedure for well-forced trees, and the graph families and
//! enumerators needed to cross-validate all of it against definition-level
//! brute force.
//!
//! Everything operates on immutable [`graph::Graph`] values; all searches
//! beyond polynomial time are capped and fail loudly when an instance is
//! too large.

pub mod families;
pub mod forcing;
pub mod graph;
pub mod tree;
pub mod wellforced;

pub use graph::{Graph, VertexSet};

#[cfg(test)]
pub(crate) mod test_fixtures {
    use crate::graph::Graph;

    /// The 24-vertex tree with three removal levels used across the test
    /// suites: levels {0, 11, 20}, {4, 15}, {7, 10}; reduction ends in
    /// the single K2 {17, 18}.
    pub fn figure_tree() -> Graph {
        Graph::from_edges(
            24,
            &[
                (0, 1),
                (0, 2),
                (0, 3),
                (3, 4),
                (4, 5),
                (4, 6),
                (6, 7),
                (7, 8),
                (0, 9),
                (9, 10),
                (10, 11),
                (11, 12),
                (11, 13),
                (10, 14),
                (14, 15),
                (15, 16),
                (15, 17),
                (17, 18),
                (15, 19),
                (19, 20),
                (20, 21),
                (20, 22),
                (20, 23),
            ],
        )
        .unwrap()
    }
}
