//! Plain-text certificate format and the standalone verifier.
//!
//! ```text
//! bavn-certificate v1
//! graph 4;1-2,2-3,3-4
//! partition A=1,3
//! contradiction 4
//! <one signed operator per line>
//! witnesses 12
//! qubit 1, letter X: <signed operator>
//! ...
//! ```
//!
//! Every line ends in `\n`. Rendering is deterministic, so a parsed
//! certificate re-renders to the exact input bytes.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::{Bipartition, Graph};
use crate::pauli::{Letter, PauliOperator};
use crate::proof::{self, BavnCertificate, ParityProofCertificate};
use crate::stabilizer::{self, EorWitness};
use crate::statevec::{self, TOLERANCE};

pub const HEADER: &str = "bavn-certificate v1";

pub fn render(cert: &BavnCertificate) -> Result<String> {
    let mut out = format!(
        "{HEADER}\ngraph {}\npartition {}\ncontradiction {}\n",
        cert.graph,
        cert.part,
        cert.contradiction.len()
    );
    for e in cert.contradiction.equations() {
        out.push_str(&e.render()?);
        out.push('\n');
    }
    out.push_str(&format!("witnesses {}\n", cert.witnesses.len()));
    for w in &cert.witnesses {
        out.push_str(&format!("{w}\n"));
    }
    Ok(out)
}

fn malformed(msg: impl Into<String>) -> Error {
    Error::MalformedCertificate(msg.into())
}

fn field<'a>(line: Option<&'a str>, key: &str) -> Result<&'a str> {
    line.and_then(|l| l.strip_prefix(key))
        .and_then(|l| l.strip_prefix(' '))
        .ok_or_else(|| malformed(format!("expected `{key} ...`")))
}

fn count(line: Option<&str>, key: &str) -> Result<usize> {
    field(line, key)?
        .parse()
        .map_err(|_| malformed(format!("bad {key} count")))
}

fn operator(line: &str, n: usize) -> Result<PauliOperator> {
    let op: PauliOperator = line.parse()?;
    if op.n() != n {
        return Err(malformed(format!("`{line}` is not on {n} qubits")));
    }
    Ok(op)
}

fn witness(line: &str, n: usize) -> Result<EorWitness> {
    let bad = || malformed(format!("bad witness line `{line}`"));
    let rest = line.strip_prefix("qubit ").ok_or_else(bad)?;
    let (qubit, rest) = rest.split_once(", letter ").ok_or_else(bad)?;
    let (letter, op) = rest.split_once(": ").ok_or_else(bad)?;
    let qubit: usize = qubit.parse().map_err(|_| bad())?;
    if qubit == 0 || qubit > n {
        return Err(bad());
    }
    let mut chars = letter.chars();
    let letter = match (chars.next().and_then(Letter::from_char), chars.next()) {
        (Some(l), None) if l != Letter::I => l,
        _ => return Err(bad()),
    };
    Ok(EorWitness {
        qubit: qubit - 1,
        letter,
        witness: operator(op, n)?,
    })
}

/// Parses the text format. Only structure is checked here; see [`verify`].
pub fn parse(text: &str) -> Result<BavnCertificate> {
    let body = text
        .strip_suffix('\n')
        .ok_or_else(|| malformed("missing final newline"))?;
    let mut lines = body.split('\n');
    if lines.next() != Some(HEADER) {
        return Err(malformed(format!("first line must be `{HEADER}`")));
    }
    let graph: Graph = field(lines.next(), "graph")?.parse()?;
    let n = graph.n();
    let part = Bipartition::parse(field(lines.next(), "partition")?, n)?;
    let m = count(lines.next(), "contradiction")?;
    let equations = (0..m)
        .map(|_| {
            operator(
                lines.next().ok_or_else(|| malformed("too few equations"))?,
                n,
            )
        })
        .collect::<Result<Vec<_>>>()?;
    let w = count(lines.next(), "witnesses")?;
    let witnesses = (0..w)
        .map(|_| {
            witness(
                lines.next().ok_or_else(|| malformed("too few witnesses"))?,
                n,
            )
        })
        .collect::<Result<Vec<_>>>()?;
    if lines.next().is_some() {
        return Err(malformed("trailing lines"));
    }
    Ok(BavnCertificate {
        graph,
        part,
        witnesses,
        contradiction: ParityProofCertificate::new(equations)?,
    })
}

impl FromStr for BavnCertificate {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse(s)
    }
}

/// One named check of the verifier.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verification {
    pub checks: Vec<Check>,
}

impl Verification {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

impl fmt::Display for Verification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            let mark = if c.passed { "ok  " } else { "FAIL" };
            writeln!(f, "{mark} {:<14} {}", c.name, c.detail)?;
        }
        write!(
            f,
            "{}",
            if self.passed() {
                "certificate valid"
            } else {
                "certificate INVALID"
            }
        )
    }
}

/// Re-checks a parsed certificate from scratch: canonical rendering, parity,
/// brute-force LHV unsatisfiability, statevector eigen-equations for every
/// equation and witness, the bipartite elements-of-reality condition, and
/// witness coverage.
pub fn verify(text: &str) -> Result<Verification> {
    let cert = parse(text)?;
    let mut checks = Vec::new();
    let mut push = |name, passed, detail: String| {
        checks.push(Check {
            name,
            passed,
            detail,
        })
    };

    let rendered = render(&cert)?;
    push(
        "rendering",
        rendered == text,
        if rendered == text {
            "canonical".into()
        } else {
            "differs from canonical rendering".into()
        },
    );

    let contradiction = &cert.contradiction;
    let parity = proof::verify_parity(contradiction);
    push(
        "parity",
        parity,
        format!(
            "{} equations, sign product {}",
            contradiction.len(),
            contradiction.sign_product()
        ),
    );

    let observables = contradiction.observables().len();
    let lhv = proof::brute_force_lhv(contradiction)?;
    push(
        "lhv",
        !lhv,
        format!(
            "{} over {observables} observables",
            if lhv { "satisfiable" } else { "unsatisfiable" }
        ),
    );

    let state = statevec::build_state(&cert.graph)?;
    let worst = |ops: Vec<&PauliOperator>| -> Result<f64> {
        ops.into_iter().try_fold(0.0f64, |m, op| {
            Ok(m.max(statevec::eigen_deviation(op, &state)?))
        })
    };
    let eq_dev = worst(contradiction.equations().iter().collect())?;
    push(
        "equations",
        eq_dev <= TOLERANCE,
        format!("max deviation {eq_dev:.3e}"),
    );
    let w_dev = worst(cert.witnesses.iter().map(|w| &w.witness).collect())?;
    let local = cert.witnesses.iter().all(|w| w.is_valid_for(&cert.part));
    push(
        "witnesses",
        w_dev <= TOLERANCE && local,
        format!(
            "max deviation {w_dev:.3e}, {}",
            if local {
                "all local"
            } else {
                "non-local witness"
            }
        ),
    );

    let eor = cert.part.is_balanced() && stabilizer::permits_bipartite_eor(&cert.graph, &cert.part);
    push(
        "elements",
        eor,
        format!(
            "balanced {}, cut rank {}",
            cert.part.is_balanced(),
            stabilizer::cut_rank(&cert.graph, &cert.part)
        ),
    );

    let n = cert.graph.n();
    let complete = (0..n).all(|q| {
        Letter::PAULIS
            .iter()
            .all(|&l| cert.witnesses.iter().any(|w| w.qubit == q && w.letter == l))
    });
    push(
        "coverage",
        complete && cert.is_covered(),
        format!(
            "{} witnesses for {} observables",
            cert.witnesses.len(),
            3 * n
        ),
    );

    Ok(Verification { checks })
}

/// Builds and renders the certificate for a distribution.
pub fn prove(g: &Graph, part: &Bipartition) -> Result<String> {
    render(&proof::bavn_certificate(g, part)?)
}
