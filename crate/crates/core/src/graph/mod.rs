//! Small simple graphs (at most [`MAX_VERTICES`] vertices) with adjacency
//! stored as bit rows, plus the two-party colourings used for qubit
//! distributions.
//!
//! Vertices are 0-based internally and 1-based in every text format.

mod canon;
mod enumerate;
mod format;
mod orbit;

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use enumerate::enumerate_connected;
pub use format::{parse_graph, GraphFormat};
pub(crate) use orbit::colored_lc_class_memo;
pub use orbit::{colored_lc_class, lc_orbit_of, lc_orbits, LcOrbit};

pub const MAX_VERTICES: usize = 8;

pub(crate) fn vertex_mask(n: usize) -> u8 {
    if n >= 8 {
        u8::MAX
    } else {
        (1u8 << n) - 1
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Graph {
    n: u8,
    adj: [u8; MAX_VERTICES],
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self> {
        if n == 0 || n > MAX_VERTICES {
            return Err(Error::Size(n));
        }
        Ok(Graph {
            n: n as u8,
            adj: [0; MAX_VERTICES],
        })
    }

    /// Builds a graph from 0-based edges.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Self::empty(n)?;
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn path(n: usize) -> Result<Self> {
        let edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
        Self::from_edges(n, &edges)
    }

    pub fn cycle(n: usize) -> Result<Self> {
        let mut edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
        edges.push((n - 1, 0));
        Self::from_edges(n, &edges)
    }

    /// Star with centre vertex 0.
    pub fn star(n: usize) -> Result<Self> {
        let edges: Vec<_> = (1..n).map(|v| (0, v)).collect();
        Self::from_edges(n, &edges)
    }

    pub fn complete(n: usize) -> Result<Self> {
        let mut g = Self::empty(n)?;
        for v in 0..n {
            g.adj[v] = vertex_mask(n) & !(1 << v);
        }
        Ok(g)
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v >= self.n() {
            return Err(Error::InvalidVertex {
                vertex: v,
                n: self.n(),
            });
        }
        Ok(())
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(Error::Parse(format!("self-loop at vertex {}", u + 1)));
        }
        self.adj[u] |= 1 << v;
        self.adj[v] |= 1 << u;
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.n as usize
    }

    pub fn vertex_mask(&self) -> u8 {
        vertex_mask(self.n())
    }

    /// Neighbourhood of `v` as a bit mask.
    pub fn neighbors(&self, v: usize) -> u8 {
        self.adj[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u] >> v & 1 == 1
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn edge_count(&self) -> usize {
        self.adj[..self.n()]
            .iter()
            .map(|r| r.count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    /// Edges `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let n = self.n();
        (0..n)
            .flat_map(|u| {
                ((u + 1)..n)
                    .filter(move |&v| self.has_edge(u, v))
                    .map(move |v| (u, v))
            })
            .collect()
    }

    pub fn is_connected(&self) -> bool {
        let all = self.vertex_mask();
        let mut seen = 1u8;
        let mut frontier = 1u8;
        while frontier != 0 {
            let mut next = 0u8;
            let mut f = frontier;
            while f != 0 {
                let v = f.trailing_zeros() as usize;
                next |= self.adj[v];
                f &= f - 1;
            }
            frontier = next & !seen;
            seen |= next;
        }
        seen == all
    }

    /// Relabels so that new vertex `i` is old vertex `perm[i]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Graph> {
        let n = self.n();
        let mut seen = 0u8;
        for &p in perm {
            if p >= n || seen >> p & 1 == 1 {
                return Err(Error::Contract(format!(
                    "{perm:?} is not a permutation of 0..{n}"
                )));
            }
            seen |= 1 << p;
        }
        if perm.len() != n {
            return Err(Error::Contract(format!(
                "{perm:?} is not a permutation of 0..{n}"
            )));
        }
        Ok(self.relabel_unchecked(perm))
    }

    pub(crate) fn relabel_unchecked<P: Copy + Into<usize>>(&self, perm: &[P]) -> Graph {
        let n = self.n();
        let mut out = Graph {
            n: self.n,
            adj: [0; MAX_VERTICES],
        };
        for i in 0..n {
            let old_i: usize = perm[i].into();
            for (j, &old_j) in perm[..n].iter().enumerate() {
                if self.has_edge(old_i, old_j.into()) {
                    out.adj[i] |= 1 << j;
                }
            }
        }
        out
    }

    /// Toggles every edge inside the neighbourhood of `v`.
    pub fn local_complement(&self, v: usize) -> Result<Graph> {
        self.check_vertex(v)?;
        let nbhd = self.adj[v];
        let mut out = *self;
        let mut m = nbhd;
        while m != 0 {
            let u = m.trailing_zeros() as usize;
            out.adj[u] ^= nbhd & !(1 << u);
            m &= m - 1;
        }
        Ok(out)
    }

    /// Upper-triangle adjacency bits in column order
    /// `(1,2), (1,3), (2,3), (1,4), …`, the first pair most significant.
    pub fn encoding(&self) -> u32 {
        let mut code = 0u32;
        for k in 1..self.n() {
            for i in 0..k {
                code = code << 1 | self.has_edge(i, k) as u32;
            }
        }
        code
    }

    /// Lexicographically minimal relabelling of this graph; isomorphic graphs
    /// map to identical outputs.
    pub fn canonical_form(&self) -> Graph {
        let perm = canon::minimal_labelling(self, None);
        self.relabel_unchecked(&perm[..self.n()])
    }
}

impl Ord for Graph {
    fn cmp(&self, other: &Self) -> Ordering {
        self.n
            .cmp(&other.n)
            .then_with(|| self.encoding().cmp(&other.encoding()))
    }
}

impl PartialOrd for Graph {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// An assignment of each qubit to Alice (`A`) or Bob (`B`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Bipartition {
    n: u8,
    part_a: u8,
}

impl Bipartition {
    /// `part_a` must be a proper nonempty subset of the `n` vertices.
    pub fn new(n: usize, part_a: u8) -> Result<Self> {
        if !(2..=MAX_VERTICES).contains(&n) {
            return Err(Error::Size(n));
        }
        let all = vertex_mask(n);
        if part_a & !all != 0 {
            return Err(Error::InvalidPartition(format!("vertex beyond {n} in A")));
        }
        if part_a == 0 || part_a == all {
            return Err(Error::InvalidPartition(
                "A must be a proper nonempty subset".into(),
            ));
        }
        Ok(Bipartition { n: n as u8, part_a })
    }

    /// From 0-based vertices of A.
    pub fn from_vertices(n: usize, part_a: &[usize]) -> Result<Self> {
        let mut mask = 0u8;
        for &v in part_a {
            if v >= n {
                return Err(Error::InvalidVertex { vertex: v, n });
            }
            mask |= 1 << v;
        }
        Self::new(n, mask)
    }

    /// Parses `A=1,3` (1-based).
    pub fn parse(s: &str, n: usize) -> Result<Self> {
        let body = s
            .trim()
            .strip_prefix("A=")
            .ok_or_else(|| Error::Parse(format!("partition '{s}' must start with 'A='")))?;
        let mut verts = Vec::new();
        for tok in body.split(',').map(str::trim).filter(|t| !t.is_empty()) {
            let v: usize = tok
                .parse()
                .map_err(|_| Error::Parse(format!("bad vertex '{tok}' in partition")))?;
            if v == 0 || v > n {
                return Err(Error::InvalidVertex { vertex: v, n });
            }
            verts.push(v - 1);
        }
        Self::from_vertices(n, &verts)
    }

    pub fn n(&self) -> usize {
        self.n as usize
    }

    pub fn part_a(&self) -> u8 {
        self.part_a
    }

    pub fn part_b(&self) -> u8 {
        vertex_mask(self.n()) & !self.part_a
    }

    pub fn size_a(&self) -> usize {
        self.part_a.count_ones() as usize
    }

    pub fn size_b(&self) -> usize {
        self.part_b().count_ones() as usize
    }

    pub fn is_balanced(&self) -> bool {
        self.size_a() == self.size_b()
    }

    pub fn in_a(&self, v: usize) -> bool {
        self.part_a >> v & 1 == 1
    }

    /// Mask of the side containing `v`.
    pub fn side_of(&self, v: usize) -> u8 {
        if self.in_a(v) {
            self.part_a
        } else {
            self.part_b()
        }
    }

    pub fn swapped(&self) -> Bipartition {
        Bipartition {
            n: self.n,
            part_a: self.part_b(),
        }
    }

    /// Every balanced bipartition of `n` vertices (both orientations).
    pub fn balanced(n: usize) -> Vec<Bipartition> {
        if n % 2 == 1 || !(2..=MAX_VERTICES).contains(&n) {
            return Vec::new();
        }
        (1..vertex_mask(n))
            .filter(|m: &u8| m.count_ones() as usize * 2 == n)
            .map(|m| Bipartition {
                n: n as u8,
                part_a: m,
            })
            .collect()
    }
}

impl fmt::Display for Bipartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let verts: Vec<String> = (0..self.n())
            .filter(|&v| self.in_a(v))
            .map(|v| (v + 1).to_string())
            .collect();
        write!(f, "A={}", verts.join(","))
    }
}

/// A graph together with a qubit distribution.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ColoredGraph {
    pub graph: Graph,
    pub part: Bipartition,
}

impl ColoredGraph {
    pub fn new(graph: Graph, part: Bipartition) -> Result<Self> {
        if graph.n() != part.n() {
            return Err(Error::DimensionMismatch {
                left: graph.n(),
                right: part.n(),
            });
        }
        Ok(ColoredGraph { graph, part })
    }

    pub fn local_complement(&self, v: usize) -> Result<ColoredGraph> {
        Ok(ColoredGraph {
            graph: self.graph.local_complement(v)?,
            part: self.part,
        })
    }

    pub fn swapped(&self) -> ColoredGraph {
        ColoredGraph {
            graph: self.graph,
            part: self.part.swapped(),
        }
    }

    /// Minimal encoding over colour-preserving relabellings, and over the
    /// global A/B swap when `allow_party_swap` is set.
    pub fn canonical(&self, allow_party_swap: bool) -> ColoredGraph {
        let direct = self.canonical_with(self.part.part_a());
        if !allow_party_swap {
            return direct.0;
        }
        let swapped = self.canonical_with(self.part.part_b());
        if swapped.1 < direct.1 {
            swapped.0
        } else {
            direct.0
        }
    }

    fn canonical_with(&self, part_a: u8) -> (ColoredGraph, [u16; MAX_VERTICES]) {
        let n = self.graph.n();
        let (perm, key) = canon::minimal_labelling_keyed(&self.graph, Some(part_a));
        let graph = self.graph.relabel_unchecked(&perm[..n]);
        let new_a = (0..n)
            .filter(|&i| part_a >> perm[i] & 1 == 1)
            .fold(0u8, |m, i| m | 1 << i);
        let part = Bipartition {
            n: self.part.n,
            part_a: new_a,
        };
        (ColoredGraph { graph, part }, key)
    }
}

impl fmt::Display for ColoredGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {}", self.graph, self.part)
    }
}
