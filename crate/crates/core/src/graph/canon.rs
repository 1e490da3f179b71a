//! Canonical labelling by branch-and-bound over vertex orderings.
//!
//! A labelling places vertex `perm[k]` at position `k`. Position `k`
//! contributes a chunk made of its optional colour bit followed by its
//! adjacency to positions `0..k` (position 0 most significant). Concatenated
//! chunks are exactly the column-ordered upper-triangle encoding, so the
//! minimal chunk sequence is the minimal encoding over all `n!` labellings.
//! Any prefix that already exceeds the best sequence is cut.

use std::cmp::Ordering;

use super::{Graph, MAX_VERTICES};

struct Search<'a> {
    graph: &'a Graph,
    colors: Option<u8>,
    perm: [u8; MAX_VERTICES],
    chunks: [u16; MAX_VERTICES],
    best_perm: [u8; MAX_VERTICES],
    best: Option<[u16; MAX_VERTICES]>,
}

impl Search<'_> {
    fn chunk(&self, k: usize, v: usize) -> u16 {
        let row = self.graph.neighbors(v);
        let mut c = 0u16;
        for &p in &self.perm[..k] {
            c = c << 1 | (row >> p & 1) as u16;
        }
        if let Some(a) = self.colors {
            // A-vertices sort first
            let bit = (a >> v & 1 == 0) as u16;
            c |= bit << k;
        }
        c
    }

    fn prefix_cmp(&self, k: usize) -> Ordering {
        match &self.best {
            None => Ordering::Less,
            Some(best) => self.chunks[..k].cmp(&best[..k]),
        }
    }

    fn run(&mut self, k: usize, used: u8) {
        let n = self.graph.n();
        if k == n {
            if self.prefix_cmp(n) == Ordering::Less {
                self.best = Some(self.chunks);
                self.best_perm = self.perm;
            }
            return;
        }
        for v in 0..n {
            if used >> v & 1 == 1 {
                continue;
            }
            let c = self.chunk(k, v);
            // the prefix is never greater than the best one; recompute since
            // a deeper call may have replaced the best
            if let (Ordering::Equal, Some(best)) = (self.prefix_cmp(k), &self.best) {
                if c > best[k] {
                    continue;
                }
            }
            self.perm[k] = v as u8;
            self.chunks[k] = c;
            self.run(k + 1, used | 1 << v);
        }
    }
}

pub(super) fn minimal_labelling_keyed(
    graph: &Graph,
    colors: Option<u8>,
) -> ([u8; MAX_VERTICES], [u16; MAX_VERTICES]) {
    let mut s = Search {
        graph,
        colors,
        perm: [0; MAX_VERTICES],
        chunks: [0; MAX_VERTICES],
        best_perm: [0; MAX_VERTICES],
        best: None,
    };
    s.run(0, 0);
    (s.best_perm, s.best.unwrap_or([0; MAX_VERTICES]))
}

pub(super) fn minimal_labelling(graph: &Graph, colors: Option<u8>) -> [u8; MAX_VERTICES] {
    minimal_labelling_keyed(graph, colors).0
}
