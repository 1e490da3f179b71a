//! Classification of graph states and qubit distributions admitting
//! bipartite AVN proofs, and its text/JSON/DOT reports.
//!
//! Two distributions are the same when one maps to the other by local
//! complementations (each qubit stays with its party), relabellings and,
//! for the headline total, the party swap.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt::Write;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::certificate;
use crate::error::{Error, NoProofReason, Result};
use crate::graph::{colored_lc_class_memo, lc_orbits, Bipartition, ColoredGraph, LcOrbit};
use crate::stabilizer;
use crate::statevec;

pub const UNBALANCED_REASON: &str = "n_A ≠ n_B";

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ClassificationReport {
    pub n: usize,
    /// Set when no distribution can exist for this `n`.
    pub reason: Option<String>,
    pub classes_total: usize,
    /// Classes with at least one passing distribution, by `class_id`.
    pub rows: Vec<ClassRow>,
    pub totals: Totals,
    /// Only for `n = 4`.
    pub psi4a: Option<Psi4aRecord>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassRow {
    pub class_id: usize,
    pub orbit_size: usize,
    pub representative_edges: String,
    pub representative_graph6: String,
    /// Distinct distributions of this class without the party swap.
    pub distributions_no_swap: usize,
    pub distributions: Vec<Distribution>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Distribution {
    /// Edge list of the chosen labelling.
    pub graph: String,
    pub partition: String,
    /// Rendered certificate for `graph` and `partition`.
    pub certificate: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Totals {
    pub classes_with_proofs: usize,
    pub distinct_distributions: usize,
    pub distinct_distributions_no_swap: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Psi4aRecord {
    pub graph: String,
    pub partition: String,
    pub fidelity: f64,
}

/// Equivalence classes of passing distributions for one orbit:
/// `(with swap, without swap)`, each keyed by its class label.
pub fn passing_classes(orbit: &LcOrbit) -> (BTreeSet<ColoredGraph>, BTreeSet<ColoredGraph>) {
    let mut memo = HashMap::new();
    let (mut swap, mut plain) = (BTreeSet::new(), BTreeSet::new());
    for g in &orbit.members {
        for part in Bipartition::balanced(g.n()) {
            if !stabilizer::permits_bipartite_eor(g, &part) {
                continue;
            }
            let cg = ColoredGraph { graph: *g, part };
            swap.insert(colored_lc_class_memo(&cg, true, &mut memo));
            plain.insert(colored_lc_class_memo(&cg, false, &mut memo));
        }
    }
    (swap, plain)
}

fn row(orbit: &LcOrbit) -> Result<Option<ClassRow>> {
    let (swap, plain) = passing_classes(orbit);
    if swap.is_empty() {
        return Ok(None);
    }
    let distributions = swap
        .iter()
        .map(|cg| {
            Ok(Distribution {
                graph: cg.graph.to_string(),
                partition: cg.part.to_string(),
                certificate: certificate::prove(&cg.graph, &cg.part)?,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Some(ClassRow {
        class_id: orbit.class_id,
        orbit_size: orbit.members.len(),
        representative_edges: orbit.representative.to_string(),
        representative_graph6: orbit.representative.to_graph6(),
        distributions_no_swap: plain.len(),
        distributions,
    }))
}

pub fn classify(n: usize) -> Result<ClassificationReport> {
    let orbits = lc_orbits(n)?;
    let psi4a = (n == 4).then(|| Psi4aRecord {
        graph: statevec::psi4a_cluster().to_string(),
        partition: "A=1,2".into(),
        fidelity: statevec::check_psi4a(),
    });
    let reason = if n < 3 {
        Some(NoProofReason::TooFewQubits.to_string())
    } else if n % 2 == 1 {
        Some(UNBALANCED_REASON.to_string())
    } else {
        None
    };
    if reason.is_some() {
        return Ok(ClassificationReport {
            n,
            reason,
            classes_total: orbits.len(),
            rows: Vec::new(),
            totals: Totals {
                classes_with_proofs: 0,
                distinct_distributions: 0,
                distinct_distributions_no_swap: 0,
            },
            psi4a,
        });
    }
    let rows: Vec<ClassRow> = orbits
        .par_iter()
        .map(row)
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .flatten()
        .collect();
    let totals = Totals {
        classes_with_proofs: rows.len(),
        distinct_distributions: rows.iter().map(|r| r.distributions.len()).sum(),
        distinct_distributions_no_swap: rows.iter().map(|r| r.distributions_no_swap).sum(),
    };
    Ok(ClassificationReport {
        n,
        reason: None,
        classes_total: orbits.len(),
        rows,
        totals,
        psi4a,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReportFormat {
    Text,
    Json,
    Dot,
}

impl FromStr for ReportFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "text" => Ok(ReportFormat::Text),
            "json" => Ok(ReportFormat::Json),
            "dot" => Ok(ReportFormat::Dot),
            other => Err(Error::UnknownFormat(other.into())),
        }
    }
}

pub fn report_render(r: &ClassificationReport, format: ReportFormat) -> Result<String> {
    match format {
        ReportFormat::Text => Ok(render_text(r)),
        ReportFormat::Json => {
            let mut s = serde_json::to_string_pretty(r)
                .map_err(|e| Error::Contract(format!("serialization failed: {e}")))?;
            s.push('\n');
            Ok(s)
        }
        ReportFormat::Dot => render_dot(r),
    }
}

pub fn report_from_json(s: &str) -> Result<ClassificationReport> {
    serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))
}

fn render_text(r: &ClassificationReport) -> String {
    let mut out = String::new();
    let t = &r.totals;
    let _ = writeln!(out, "n = {}: {} LC classes", r.n, r.classes_total);
    if let Some(reason) = &r.reason {
        let _ = writeln!(out, "no distributions: {reason}");
    }
    let _ = writeln!(out, "classes with proofs: {}", t.classes_with_proofs);
    let _ = writeln!(
        out,
        "distinct distributions: {} (without party swap: {})",
        t.distinct_distributions, t.distinct_distributions_no_swap
    );
    for row in &r.rows {
        let _ = writeln!(
            out,
            "class {} (orbit size {}, representative {}): {} distribution(s), {} without party swap",
            row.class_id,
            row.orbit_size,
            row.representative_edges,
            row.distributions.len(),
            row.distributions_no_swap
        );
        for d in &row.distributions {
            let _ = writeln!(out, "  {} {}", d.graph, d.partition);
        }
    }
    if let Some(p) = &r.psi4a {
        let _ = writeln!(
            out,
            "psi4a labelling: {} {} (fidelity {:.12})",
            p.graph, p.partition, p.fidelity
        );
    }
    out
}

fn render_dot(r: &ClassificationReport) -> Result<String> {
    let mut out = format!("graph classification_n{} {{\n", r.n);
    for row in &r.rows {
        for (k, d) in row.distributions.iter().enumerate() {
            let graph = d.graph.parse()?;
            let part = Bipartition::parse(&d.partition, r.n)?;
            let cg = ColoredGraph::new(graph, part)?;
            let prefix = format!("c{}d{}_", row.class_id, k + 1);
            let _ = writeln!(out, "  subgraph cluster_c{}d{} {{", row.class_id, k + 1);
            let _ = writeln!(
                out,
                "    label=\"class {}: {}\";",
                row.class_id, d.partition
            );
            out.push_str(&cg.dot_body(&prefix, "    "));
            out.push_str("  }\n");
        }
    }
    out.push_str("}\n");
    Ok(out)
}

/// Passing distributions of every member of every orbit, grouped by class
/// label; exposed for invariance checks.
pub fn passing_by_member(orbit: &LcOrbit) -> BTreeMap<crate::Graph, BTreeSet<ColoredGraph>> {
    let mut memo = HashMap::new();
    orbit
        .members
        .iter()
        .map(|g| {
            let classes = Bipartition::balanced(g.n())
                .into_iter()
                .filter(|p| stabilizer::permits_bipartite_eor(g, p))
                .map(|part| {
                    colored_lc_class_memo(&ColoredGraph { graph: *g, part }, true, &mut memo)
                })
                .collect();
            (*g, classes)
        })
        .collect()
}

/// One LC class in an enumeration report.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrbitRecord {
    pub class_id: usize,
    pub n: usize,
    pub representative_edges: String,
    pub orbit_size: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EnumerationReport {
    pub n: usize,
    pub connected_graphs: usize,
    pub orbits: Vec<OrbitRecord>,
}

pub fn enumeration_report(n: usize) -> Result<EnumerationReport> {
    let orbits: Vec<OrbitRecord> = lc_orbits(n)?
        .iter()
        .map(|o| OrbitRecord {
            class_id: o.class_id,
            n,
            representative_edges: o.representative.to_string(),
            orbit_size: o.members.len(),
        })
        .collect();
    Ok(EnumerationReport {
        n,
        connected_graphs: orbits.iter().map(|o| o.orbit_size).sum(),
        orbits,
    })
}

impl EnumerationReport {
    /// `text` or `json`.
    pub fn render(&self, format: ReportFormat) -> Result<String> {
        match format {
            ReportFormat::Json => serde_json::to_string_pretty(self)
                .map(|s| s + "\n")
                .map_err(|e| Error::Contract(format!("serialization failed: {e}"))),
            ReportFormat::Text => {
                let mut out = format!(
                    "n = {}: {} connected graphs, {} LC classes\n",
                    self.n,
                    self.connected_graphs,
                    self.orbits.len()
                );
                for o in &self.orbits {
                    let _ = writeln!(
                        out,
                        "class {}: orbit size {}, representative {}",
                        o.class_id, o.orbit_size, o.representative_edges
                    );
                }
                Ok(out)
            }
            ReportFormat::Dot => Err(Error::UnknownFormat("dot".into())),
        }
    }
}
