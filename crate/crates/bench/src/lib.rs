//! Shared inputs for the benchmarks.

use bavn_core::{Bipartition, Graph};

/// The 4-qubit linear cluster with its alternating distribution.
pub fn cluster4() -> (Graph, Bipartition) {
    let g = Graph::path(4).expect("valid size");
    let part = Bipartition::parse("A=1,3", 4).expect("valid partition");
    (g, part)
}

/// Every connected 6-vertex graph paired with every balanced distribution.
pub fn balanced_cuts6() -> Vec<(Graph, Bipartition)> {
    let graphs = bavn_core::graph::enumerate_connected(6).expect("valid size");
    graphs
        .iter()
        .flat_map(|g| Bipartition::balanced(6).into_iter().map(move |p| (*g, p)))
        .collect()
}
