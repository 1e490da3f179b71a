//! Text formats: `n;u-v,…` edge lists, graph6 and DOT.

use std::fmt;
use std::str::FromStr;

use super::{ColoredGraph, Graph, MAX_VERTICES};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GraphFormat {
    EdgeList,
    Graph6,
    Dot,
}

/// Edge list with 1-based vertices, e.g. `4;1-2,2-3,3-4`.
impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let edges: Vec<String> = self
            .edges()
            .into_iter()
            .map(|(u, v)| format!("{}-{}", u + 1, v + 1))
            .collect();
        write!(f, "{};{}", self.n(), edges.join(","))
    }
}

impl FromStr for Graph {
    type Err = Error;

    fn from_str(s: &str) -> Result<Graph> {
        let (head, body) = s
            .trim()
            .split_once(';')
            .ok_or_else(|| Error::Parse(format!("expected 'n;u-v,…', got '{s}'")))?;
        let n: usize = head
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("bad vertex count '{head}'")))?;
        let mut g = Graph::empty(n)?;
        for tok in body.split(',').map(str::trim).filter(|t| !t.is_empty()) {
            let (u, v) = tok
                .split_once('-')
                .ok_or_else(|| Error::Parse(format!("bad edge '{tok}'")))?;
            let parse = |x: &str| -> Result<usize> {
                let v: usize = x
                    .trim()
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad vertex '{x}' in edge '{tok}'")))?;
                if v == 0 || v > n {
                    return Err(Error::InvalidVertex { vertex: v, n });
                }
                Ok(v - 1)
            };
            g.add_edge(parse(u)?, parse(v)?)?;
        }
        Ok(g)
    }
}

/// Accepts either the edge-list form (anything containing `;`) or graph6.
pub fn parse_graph(s: &str) -> Result<Graph> {
    if s.contains(';') {
        s.parse()
    } else {
        Graph::from_graph6(s)
    }
}

impl Graph {
    pub fn to_graph6(&self) -> String {
        let n = self.n();
        let mut bits = Vec::with_capacity(n * (n - 1) / 2);
        for k in 1..n {
            for i in 0..k {
                bits.push(self.has_edge(i, k));
            }
        }
        let mut out = String::new();
        out.push((n as u8 + 63) as char);
        for chunk in bits.chunks(6) {
            let mut v = 0u8;
            for (j, &b) in chunk.iter().enumerate() {
                v |= (b as u8) << (5 - j);
            }
            out.push((v + 63) as char);
        }
        out
    }

    pub fn from_graph6(s: &str) -> Result<Graph> {
        let s = s.trim();
        let s = s.strip_prefix(">>graph6<<").unwrap_or(s);
        let bytes = s.as_bytes();
        let first = *bytes
            .first()
            .ok_or_else(|| Error::Parse("empty graph6 string".into()))?;
        if !(63..=126).contains(&first) {
            return Err(Error::Parse(format!("bad graph6 header in '{s}'")));
        }
        let n = (first - 63) as usize;
        if n == 0 || n > MAX_VERTICES {
            return Err(Error::Size(n));
        }
        let pairs = n * (n - 1) / 2;
        let expected = pairs.div_ceil(6);
        if bytes.len() != 1 + expected {
            return Err(Error::Parse(format!(
                "graph6 '{s}' has {} data bytes, expected {expected}",
                bytes.len() - 1
            )));
        }
        let mut bits = Vec::with_capacity(expected * 6);
        for &b in &bytes[1..] {
            if !(63..=126).contains(&b) {
                return Err(Error::Parse(format!("bad graph6 byte {b:#x}")));
            }
            let v = b - 63;
            bits.extend((0..6).map(|j| v >> (5 - j) & 1 == 1));
        }
        let mut g = Graph::empty(n)?;
        let mut idx = 0;
        for k in 1..n {
            for i in 0..k {
                if bits[idx] {
                    g.add_edge(i, k)?;
                }
                idx += 1;
            }
        }
        Ok(g)
    }

    pub fn to_dot(&self, name: &str) -> String {
        let mut out = format!("graph {name} {{\n");
        for v in 0..self.n() {
            out.push_str(&format!("  {};\n", v + 1));
        }
        for (u, v) in self.edges() {
            out.push_str(&format!("  {} -- {};\n", u + 1, v + 1));
        }
        out.push_str("}\n");
        out
    }
}

pub(crate) const ALICE_COLOR: &str = "lightblue";
pub(crate) const BOB_COLOR: &str = "lightsalmon";

impl ColoredGraph {
    /// DOT body lines (no enclosing `graph {}`) with node ids prefixed by
    /// `prefix`.
    pub(crate) fn dot_body(&self, prefix: &str, indent: &str) -> String {
        let mut out = String::new();
        for v in 0..self.graph.n() {
            let (party, color) = if self.part.in_a(v) {
                ("A", ALICE_COLOR)
            } else {
                ("B", BOB_COLOR)
            };
            out.push_str(&format!(
                "{indent}{prefix}{} [label=\"{} ({party})\", style=filled, fillcolor={color}];\n",
                v + 1,
                v + 1
            ));
        }
        for (u, v) in self.graph.edges() {
            out.push_str(&format!(
                "{indent}{prefix}{} -- {prefix}{};\n",
                u + 1,
                v + 1
            ));
        }
        out
    }

    pub fn to_dot(&self, name: &str) -> String {
        format!("graph {name} {{\n{}}}\n", self.dot_body("", "  "))
    }
}
