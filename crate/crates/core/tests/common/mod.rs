//! Independent oracles shared by the integration tests.
#![allow(dead_code)]

use std::collections::BTreeSet;

use bavn_core::graph::enumerate_connected;
use bavn_core::{Bipartition, Graph};

pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out
}

/// Upper-triangle bits in column order, first pair most significant.
pub fn encode(n: usize, edge: impl Fn(usize, usize) -> bool) -> u64 {
    let mut code = 0u64;
    for j in 1..n {
        for i in 0..j {
            code = code << 1 | edge(i, j) as u64;
        }
    }
    code
}

pub fn min_encoding(g: &Graph, perms: &[Vec<usize>]) -> u64 {
    perms
        .iter()
        .map(|p| encode(g.n(), |i, j| g.has_edge(p[i], p[j])))
        .min()
        .unwrap()
}

fn flood_connected(n: usize, edges: &[(usize, usize)]) -> bool {
    let mut seen = vec![false; n];
    let mut stack = vec![0];
    seen[0] = true;
    while let Some(v) = stack.pop() {
        for &(a, b) in edges {
            for (x, y) in [(a, b), (b, a)] {
                if x == v && !seen[y] {
                    seen[y] = true;
                    stack.push(y);
                }
            }
        }
    }
    seen.into_iter().all(|s| s)
}

/// Minimal encodings of connected graphs, by brute force over all edge
/// subsets and all relabellings.
pub fn brute_force_classes(n: usize) -> BTreeSet<u64> {
    let pairs: Vec<(usize, usize)> = (1..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
    let perms = permutations(n);
    let mut out = BTreeSet::new();
    for mask in 0u32..1 << pairs.len() {
        let edges: Vec<(usize, usize)> = pairs
            .iter()
            .enumerate()
            .filter(|(k, _)| mask >> k & 1 == 1)
            .map(|(_, &e)| e)
            .collect();
        if !flood_connected(n, &edges) {
            continue;
        }
        let g = Graph::from_edges(n, &edges).unwrap();
        out.insert(min_encoding(&g, &perms));
    }
    out
}

pub fn all_connected(range: std::ops::RangeInclusive<usize>) -> Vec<Graph> {
    range
        .flat_map(|n| enumerate_connected(n).unwrap())
        .collect()
}

/// Lemma 2 by definition: the restrictions of the `2^n` stabilizing
/// operators to each side must exhaust every letter string of that side.
pub fn reduced_stabilizer_complete(g: &Graph, part: &Bipartition) -> bool {
    let group = bavn_core::stabilizer::generators(g).full_group();
    [part.part_a(), part.part_b()].into_iter().all(|side| {
        let strings: BTreeSet<String> = group
            .iter()
            .map(|e| e.operator.restrict(side).to_string())
            .collect();
        strings.len() == 1 << (2 * side.count_ones())
    })
}
