//! Parity contradictions between perfect correlations and predefined values.
//!
//! An equation is a signed stabilizing operator `σ·P` read as the perfect
//! correlation "the product of the outcomes of the letters of `P` is `σ`". A
//! set of equations is a parity proof when every `(qubit, letter)` occurs an
//! even number of times, so any assignment of predefined values forces the
//! signs to multiply to `+1`, while the operators themselves multiply to the
//! identity and the letter strings multiply to `-1`.

use std::collections::BTreeSet;
use std::fmt;

use rayon::prelude::*;

use crate::error::{Error, NoProofReason, Result};
use crate::graph::{Bipartition, Graph};
use crate::pauli::{Letter, PauliOperator};
use crate::stabilizer::{self, EorWitness};

/// A single-qubit observable appearing in a proof.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Observable {
    pub qubit: usize,
    pub letter: Letter,
}

impl fmt::Display for Observable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.letter, self.qubit + 1)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ParityProofCertificate {
    equations: Vec<PauliOperator>,
}

impl ParityProofCertificate {
    /// Equations must be nonempty, Hermitian and share one qubit count.
    pub fn new(equations: Vec<PauliOperator>) -> Result<Self> {
        let first = equations
            .first()
            .ok_or_else(|| Error::MalformedCertificate("no equations".into()))?;
        for e in &equations {
            if e.n() != first.n() {
                return Err(Error::MalformedCertificate(format!(
                    "equations on {} and {} qubits",
                    first.n(),
                    e.n()
                )));
            }
            if !e.is_hermitian() {
                return Err(Error::MalformedCertificate("non-Hermitian equation".into()));
            }
        }
        Ok(ParityProofCertificate { equations })
    }

    pub fn n(&self) -> usize {
        self.equations[0].n()
    }

    pub fn equations(&self) -> &[PauliOperator] {
        &self.equations
    }

    pub fn len(&self) -> usize {
        self.equations.len()
    }

    pub fn is_empty(&self) -> bool {
        self.equations.is_empty()
    }

    /// The sign quantum mechanics assigns to the product of all correlations
    /// once letters are cancelled pairwise; always `-1` for a valid proof.
    pub fn contradiction_sign(&self) -> i8 {
        -1
    }

    pub fn observables(&self) -> BTreeSet<Observable> {
        self.equations
            .iter()
            .flat_map(|e| {
                (0..e.n()).filter_map(move |q| match e.letter(q) {
                    Letter::I => None,
                    letter => Some(Observable { qubit: q, letter }),
                })
            })
            .collect()
    }

    /// Product of the equation signs.
    pub fn sign_product(&self) -> i8 {
        self.equations
            .iter()
            .map(|e| e.sign().unwrap_or(1))
            .product()
    }
}

/// Per-qubit masks of the qubits carrying X, Y and Z respectively.
fn letter_classes(op: &PauliOperator) -> [u8; 3] {
    let (x, z) = (op.x_mask(), op.z_mask());
    [x & !z, x & z, z & !x]
}

/// Checks the parity structure: every observable occurs an even number of
/// times, the signed operators multiply to `+I` (the correlations are jointly
/// consistent), and the unsigned letter strings multiply to `-I`, so the
/// signs multiply to `-1` where predefined values would force `+1`.
pub fn verify_parity(cert: &ParityProofCertificate) -> bool {
    let even = cert
        .equations
        .iter()
        .map(letter_classes)
        .fold([0u8; 3], |acc, c| {
            [acc[0] ^ c[0], acc[1] ^ c[1], acc[2] ^ c[2]]
        })
        == [0, 0, 0];
    if !even {
        return false;
    }
    let n = cert.n();
    let identity = PauliOperator::identity(n).expect("n in range");
    let signed = cert.equations.iter().fold(identity, |acc, e| acc * *e);
    let letters = cert
        .equations
        .iter()
        .fold(identity, |acc, e| acc * e.unsigned());
    signed == identity && letters == identity.negate() && cert.sign_product() == -1
}

/// Searches every `±1` assignment of the certificate's observables for one
/// that satisfies all equations. Returns whether one exists.
pub fn brute_force_lhv(cert: &ParityProofCertificate) -> Result<bool> {
    let observables: Vec<Observable> = cert.observables().into_iter().collect();
    if observables.len() > 24 {
        return Err(Error::TooManyObservables(observables.len()));
    }
    // bit set in an assignment = value -1
    let constraints: Vec<(u32, u32)> = cert
        .equations
        .iter()
        .map(|e| {
            let mask = observables
                .iter()
                .enumerate()
                .filter(|(_, o)| e.letter(o.qubit) == o.letter)
                .fold(0u32, |m, (i, _)| m | 1 << i);
            let odd = (e.sign() == Some(-1)) as u32;
            (mask, odd)
        })
        .collect();
    let satisfiable = (0u32..1 << observables.len()).any(|assign| {
        constraints
            .iter()
            .all(|&(mask, odd)| (assign & mask).count_ones() & 1 == odd)
    });
    Ok(satisfiable)
}

/// Vertices `i - j - k` of the first path of length two in lexicographic
/// order, and whether `i` and `k` are adjacent.
pub fn lemma1_triple(g: &Graph) -> Option<(usize, usize, usize, bool)> {
    let n = g.n();
    for i in 0..n {
        for j in (0..n).filter(|&j| g.has_edge(i, j)) {
            if let Some(k) = (0..n).find(|&k| k != i && g.has_edge(j, k)) {
                return Some((i, j, k, g.has_edge(i, k)));
            }
        }
    }
    None
}

/// The four-equation contradiction built on a path `i - j - k`:
/// `{g_i g_j, g_j, g_j g_k, g_i g_j g_k}` when `i, k` are not adjacent,
/// `{g_i, g_j, g_k, g_i g_j g_k}` when they close a triangle.
pub fn lemma1_certificate(g: &Graph) -> Result<ParityProofCertificate> {
    if g.n() < 3 {
        return Err(Error::NoCertificate(NoProofReason::TooFewQubits));
    }
    let (i, j, k, triangle) =
        lemma1_triple(g).ok_or(Error::NoCertificate(NoProofReason::NoTriple))?;
    let (bi, bj, bk) = (1u8 << i, 1u8 << j, 1u8 << k);
    let subsets = if triangle {
        [bi, bj, bk, bi | bj | bk]
    } else {
        [bi | bj, bj, bj | bk, bi | bj | bk]
    };
    let group = stabilizer::generators(g);
    ParityProofCertificate::new(subsets.iter().map(|&s| group.element(s).operator).collect())
}

struct Candidate {
    subset: u8,
    classes: [u8; 3],
    negative: bool,
}

/// Every set of at most `m_max` distinct non-identity stabilizing operators
/// forming a parity proof. Sets are listed by size, then by ascending
/// generator subsets.
pub fn find_parity_proofs(g: &Graph, m_max: usize) -> Result<Vec<ParityProofCertificate>> {
    if g.n() > 6 || m_max > 6 {
        return Err(Error::Bounds(format!(
            "n = {} and m_max = {m_max} (limits 6 and 6)",
            g.n()
        )));
    }
    let group = stabilizer::generators(g);
    let elements = group.full_group();
    let candidates: Vec<Candidate> = elements[1..]
        .iter()
        .map(|e| Candidate {
            subset: e.subset,
            classes: letter_classes(&e.operator),
            negative: e.operator.sign() == Some(-1),
        })
        .collect();
    let mut found = Vec::new();
    // the generator subsets of a proof XOR to zero, so the last member is
    // fixed by the others
    for m in 2..=m_max {
        let per_first: Vec<Vec<Vec<u8>>> = (0..candidates.len())
            .into_par_iter()
            .map(|first| {
                let mut out = Vec::new();
                let mut chosen = vec![first];
                extend(&candidates, m, &mut chosen, &mut out);
                out
            })
            .collect();
        for subsets in per_first.into_iter().flatten() {
            let cert = ParityProofCertificate::new(
                subsets
                    .iter()
                    .map(|&s| elements[s as usize].operator)
                    .collect(),
            )?;
            if !verify_parity(&cert) {
                return Err(Error::Contract("search produced a non-proof".into()));
            }
            found.push(cert);
        }
    }
    Ok(found)
}

fn extend(cands: &[Candidate], m: usize, chosen: &mut Vec<usize>, out: &mut Vec<Vec<u8>>) {
    if chosen.len() + 1 == m {
        let acc = chosen.iter().fold(0u8, |a, &c| a ^ cands[c].subset);
        if acc == 0 {
            return;
        }
        // candidates are indexed by subset - 1
        let last = acc as usize - 1;
        if last <= *chosen.last().expect("nonempty") {
            return;
        }
        let mut classes = [0u8; 3];
        let mut negative = false;
        for &c in chosen.iter().chain(std::iter::once(&last)) {
            for (a, b) in classes.iter_mut().zip(cands[c].classes) {
                *a ^= b;
            }
            negative ^= cands[c].negative;
        }
        if classes == [0, 0, 0] && negative {
            out.push(
                chosen
                    .iter()
                    .chain(std::iter::once(&last))
                    .map(|&c| cands[c].subset)
                    .collect(),
            );
        }
        return;
    }
    let start = chosen.last().expect("nonempty") + 1;
    for next in start..cands.len() {
        chosen.push(next);
        extend(cands, m, chosen, out);
        chosen.pop();
    }
}

/// A complete bipartite proof: elements-of-reality witnesses for every
/// single-qubit Pauli observable plus a parity contradiction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BavnCertificate {
    pub graph: Graph,
    pub part: Bipartition,
    pub witnesses: Vec<EorWitness>,
    pub contradiction: ParityProofCertificate,
}

impl BavnCertificate {
    /// True when every observable of the contradiction has a witness.
    pub fn is_covered(&self) -> bool {
        self.contradiction.observables().iter().all(|o| {
            self.witnesses
                .iter()
                .any(|w| w.qubit == o.qubit && w.letter == o.letter)
        })
    }
}

/// Checks the distribution, then bundles witnesses with a four-equation
/// contradiction.
pub fn bavn_certificate(g: &Graph, part: &Bipartition) -> Result<BavnCertificate> {
    if g.n() != part.n() {
        return Err(Error::DimensionMismatch {
            left: g.n(),
            right: part.n(),
        });
    }
    if g.n() < 3 {
        return Err(Error::NoProof(NoProofReason::TooFewQubits));
    }
    if !part.is_balanced() {
        return Err(Error::NoProof(NoProofReason::Unbalanced));
    }
    if !stabilizer::permits_bipartite_eor(g, part) {
        return Err(Error::NoProof(NoProofReason::RankDeficient));
    }
    let contradiction = lemma1_certificate(g).map_err(|e| match e {
        Error::NoCertificate(r) => Error::NoProof(r),
        other => other,
    })?;
    let witnesses = stabilizer::eor_witnesses(g, part)?;
    let cert = BavnCertificate {
        graph: *g,
        part: *part,
        witnesses,
        contradiction,
    };
    if !cert.is_covered() {
        return Err(Error::Contract(
            "contradiction uses an unwitnessed observable".into(),
        ));
    }
    Ok(cert)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rendered(cert: &ParityProofCertificate) -> Vec<String> {
        cert.equations()
            .iter()
            .map(|e| e.render().unwrap())
            .collect()
    }

    #[test]
    fn path_certificate() {
        let cert = lemma1_certificate(&Graph::path(3).unwrap()).unwrap();
        assert_eq!(
            rendered(&cert),
            ["+Y1·Y2·Z3", "+Z1·X2·Z3", "+Z1·Y2·Y3", "-Y1·X2·Y3"]
        );
        let obs: Vec<String> = cert.observables().iter().map(|o| o.to_string()).collect();
        assert_eq!(obs, ["Y1", "Z1", "X2", "Y2", "Y3", "Z3"]);
        assert!(verify_parity(&cert));
        assert!(!brute_force_lhv(&cert).unwrap());
        assert_eq!(cert.contradiction_sign(), -1);
    }

    #[test]
    fn triangle_certificate() {
        let tri = Graph::complete(3).unwrap();
        assert_eq!(lemma1_triple(&tri), Some((0, 1, 2, true)));
        let cert = lemma1_certificate(&tri).unwrap();
        assert_eq!(
            rendered(&cert),
            ["+X1·Z2·Z3", "+Z1·X2·Z3", "+Z1·Z2·X3", "-X1·X2·X3"]
        );
        assert!(verify_parity(&cert));
        assert!(!brute_force_lhv(&cert).unwrap());
    }

    #[test]
    fn no_certificate_cases() {
        assert_eq!(
            lemma1_certificate(&Graph::path(2).unwrap()),
            Err(Error::NoCertificate(NoProofReason::TooFewQubits))
        );
        let matching = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(
            lemma1_certificate(&matching),
            Err(Error::NoCertificate(NoProofReason::NoTriple))
        );
    }

    #[test]
    fn tampering_breaks_parity() {
        let cert = lemma1_certificate(&Graph::path(3).unwrap()).unwrap();
        let mut eqs = cert.equations().to_vec();
        eqs.pop();
        let dropped = ParityProofCertificate::new(eqs.clone()).unwrap();
        assert!(!verify_parity(&dropped));

        let mut flipped = cert.equations().to_vec();
        flipped[3] = flipped[3].negate();
        let flipped = ParityProofCertificate::new(flipped).unwrap();
        assert!(!verify_parity(&flipped));
        assert!(brute_force_lhv(&flipped).unwrap());
    }

    #[test]
    fn malformed_certificates_rejected() {
        assert!(ParityProofCertificate::new(vec![]).is_err());
        let a = PauliOperator::identity(2).unwrap();
        let b = PauliOperator::identity(3).unwrap();
        assert!(ParityProofCertificate::new(vec![a, b]).is_err());
        let nonherm = PauliOperator::new(1, 1, 0, 0).unwrap();
        assert!(ParityProofCertificate::new(vec![nonherm]).is_err());
    }

    #[test]
    fn twenty_four_observables_accepted() {
        // 8 qubits x 3 letters = 24 is the cap; the certificate below has 24
        let letters = |l: Letter| vec![l; 8];
        let eqs = [Letter::X, Letter::Y, Letter::Z]
            .iter()
            .map(|&l| PauliOperator::from_letters(false, &letters(l)).unwrap())
            .collect();
        let cert = ParityProofCertificate::new(eqs).unwrap();
        assert_eq!(cert.observables().len(), 24);
        assert!(brute_force_lhv(&cert).is_ok());
    }

    #[test]
    fn search_contains_lemma_one() {
        let path = Graph::path(3).unwrap();
        let found = find_parity_proofs(&path, 4).unwrap();
        let lemma = lemma1_certificate(&path).unwrap();
        let as_set =
            |c: &ParityProofCertificate| c.equations().iter().copied().collect::<BTreeSet<_>>();
        assert!(found.iter().any(|c| as_set(c) == as_set(&lemma)));
        assert!(find_parity_proofs(&Graph::path(2).unwrap(), 6)
            .unwrap()
            .is_empty());
        assert!(find_parity_proofs(&Graph::path(7).unwrap(), 4).is_err());
        assert!(find_parity_proofs(&path, 7).is_err());
    }

    #[test]
    fn search_results_are_unsatisfiable() {
        let g = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (0, 4), (1, 3)]).unwrap();
        let found = find_parity_proofs(&g, 4).unwrap();
        assert!(!found.is_empty());
        for c in &found {
            assert!(c.len() >= 4);
            assert!(!brute_force_lhv(c).unwrap());
        }
    }

    #[test]
    fn bavn_linear_cluster() {
        let path = Graph::path(4).unwrap();
        let part = Bipartition::parse("A=1,3", 4).unwrap();
        let cert = bavn_certificate(&path, &part).unwrap();
        assert_eq!(cert.witnesses.len(), 12);
        assert_eq!(cert.contradiction.len(), 4);
        assert!(cert.is_covered());
    }

    #[test]
    fn bavn_failures() {
        let star = Graph::star(4).unwrap();
        for p in Bipartition::balanced(4) {
            assert_eq!(
                bavn_certificate(&star, &p),
                Err(Error::NoProof(NoProofReason::RankDeficient))
            );
        }
        let p5 = Graph::path(5).unwrap();
        assert_eq!(
            bavn_certificate(&p5, &Bipartition::parse("A=1,3", 5).unwrap()),
            Err(Error::NoProof(NoProofReason::Unbalanced))
        );
        let edge = Graph::path(2).unwrap();
        assert_eq!(
            bavn_certificate(&edge, &Bipartition::parse("A=1", 2).unwrap()),
            Err(Error::NoProof(NoProofReason::TooFewQubits))
        );
    }
}
