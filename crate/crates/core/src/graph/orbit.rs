use std::collections::{BTreeSet, HashMap};

use super::enumerate::connected_classes;
use super::{ColoredGraph, Graph};
use crate::error::{Error, Result};

/// A local-complementation class of connected graphs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LcOrbit {
    /// 1-based, ascending with the representative's encoding.
    pub class_id: usize,
    /// Smallest canonical member.
    pub representative: Graph,
    /// Canonical members, sorted.
    pub members: Vec<Graph>,
}

/// Canonical graphs reachable from `g` by local complementations.
pub fn lc_orbit_of(g: &Graph) -> BTreeSet<Graph> {
    let start = g.canonical_form();
    let mut seen = BTreeSet::from([start]);
    let mut queue = vec![start];
    while let Some(h) = queue.pop() {
        for v in 0..h.n() {
            let next = h
                .local_complement(v)
                .expect("vertex in range")
                .canonical_form();
            if seen.insert(next) {
                queue.push(next);
            }
        }
    }
    seen
}

/// Partition of the connected graphs on `n` vertices into classes under
/// local complementation and isomorphism.
pub fn lc_orbits(n: usize) -> Result<Vec<LcOrbit>> {
    if !(2..=7).contains(&n) {
        return Err(Error::Size(n));
    }
    let mut assigned: BTreeSet<Graph> = BTreeSet::new();
    let mut orbits = Vec::new();
    // classes come out sorted, so the first unassigned graph is the smallest
    // member of a new orbit
    for g in connected_classes(n) {
        if assigned.contains(&g) {
            continue;
        }
        let members = lc_orbit_of(&g);
        assigned.extend(members.iter().copied());
        orbits.push(LcOrbit {
            class_id: orbits.len() + 1,
            representative: g,
            members: members.into_iter().collect(),
        });
    }
    Ok(orbits)
}

/// Smallest canonical colouring reachable from `cg` by local complementations
/// (colours stay with their vertices), relabellings and, optionally, the
/// party swap. Two distributions are physically equivalent iff their classes
/// coincide.
pub fn colored_lc_class(cg: &ColoredGraph, allow_party_swap: bool) -> ColoredGraph {
    let mut memo = HashMap::new();
    colored_lc_class_memo(cg, allow_party_swap, &mut memo)
}

pub(crate) fn colored_lc_class_memo(
    cg: &ColoredGraph,
    allow_party_swap: bool,
    memo: &mut HashMap<ColoredGraph, ColoredGraph>,
) -> ColoredGraph {
    let direct = closure_min(cg, memo);
    if allow_party_swap {
        direct.min(closure_min(&cg.swapped(), memo))
    } else {
        direct
    }
}

fn closure_min(cg: &ColoredGraph, memo: &mut HashMap<ColoredGraph, ColoredGraph>) -> ColoredGraph {
    let start = cg.canonical(false);
    if let Some(k) = memo.get(&start) {
        return *k;
    }
    let mut seen = BTreeSet::from([start]);
    let mut queue = vec![start];
    while let Some(h) = queue.pop() {
        for v in 0..h.graph.n() {
            let next = h
                .local_complement(v)
                .expect("vertex in range")
                .canonical(false);
            if seen.insert(next) {
                queue.push(next);
            }
        }
    }
    let key = *seen.first().expect("nonempty");
    for member in seen {
        memo.insert(member, key);
    }
    key
}
