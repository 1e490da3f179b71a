use std::collections::BTreeSet;

use rayon::prelude::*;

use super::Graph;
use crate::error::{Error, Result};

/// One canonical representative per isomorphism class of connected graphs on
/// `n` vertices, sorted by encoding.
pub fn enumerate_connected(n: usize) -> Result<Vec<Graph>> {
    if !(2..=7).contains(&n) {
        return Err(Error::Size(n));
    }
    Ok(connected_classes(n))
}

/// Every connected graph has a vertex whose removal leaves it connected (a
/// leaf of a spanning tree), so the classes on `n` vertices are obtained by
/// attaching a new vertex to every nonempty subset of each class on `n - 1`.
pub(crate) fn connected_classes(n: usize) -> Vec<Graph> {
    let mut level = vec![Graph::empty(1).expect("n = 1 is valid")];
    for m in 2..=n {
        let found: BTreeSet<Graph> = level
            .par_iter()
            .flat_map_iter(|base| {
                let base = *base;
                (1u8..(1 << (m - 1))).map(move |attach| {
                    let mut g = Graph::empty(m).expect("m <= 8");
                    for (u, v) in base.edges() {
                        g.add_edge(u, v).expect("valid edge");
                    }
                    for u in 0..m - 1 {
                        if attach >> u & 1 == 1 {
                            g.add_edge(u, m - 1).expect("valid edge");
                        }
                    }
                    g.canonical_form()
                })
            })
            .collect();
        level = found.into_iter().collect();
    }
    level
}
