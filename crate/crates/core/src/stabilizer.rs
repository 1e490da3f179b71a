//! Graph-state stabilizer groups and the bipartite elements-of-reality test.
//!
//! Generator `g_i` carries `X` on vertex `i` and `Z` on each neighbour. Since
//! only `g_i` has an `X` factor on qubit `i`, the generator index set of any
//! group element equals its `x` mask.

use std::fmt;

use crate::error::{Error, Result};
use crate::gf2;
use crate::graph::{Bipartition, Graph};
use crate::pauli::{Letter, PauliOperator, PauliString};

/// A stabilizing operator tagged with the generators whose product it is.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct StabilizerElement {
    /// Bit `i` set iff `g_i` is a factor.
    pub subset: u8,
    pub operator: PauliOperator,
}

impl StabilizerElement {
    /// Product notation such as `g1g2g4`; `1` for the identity.
    pub fn product_label(&self) -> String {
        if self.subset == 0 {
            return "1".to_string();
        }
        (0..8)
            .filter(|i| self.subset >> i & 1 == 1)
            .map(|i| format!("g{}", i + 1))
            .collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StabilizerGroup {
    generators: Vec<PauliOperator>,
}

/// Generators of the graph state of `g`.
pub fn generators(g: &Graph) -> StabilizerGroup {
    let n = g.n();
    let generators = (0..n)
        .map(|i| PauliOperator::new(n, 0, 1 << i, g.neighbors(i)).expect("n within range"))
        .collect();
    StabilizerGroup { generators }
}

impl StabilizerGroup {
    pub fn n(&self) -> usize {
        self.generators.len()
    }

    pub fn generators(&self) -> &[PauliOperator] {
        &self.generators
    }

    /// Product of the generators in `subset`.
    pub fn element(&self, subset: u8) -> StabilizerElement {
        let n = self.n();
        let operator = self
            .generators
            .iter()
            .enumerate()
            .filter(|(i, _)| subset >> i & 1 == 1)
            .fold(
                PauliOperator::identity(n).expect("n >= 1"),
                |acc, (_, g)| acc * *g,
            );
        StabilizerElement { subset, operator }
    }

    /// All `2^n` elements, indexed by generator subset.
    pub fn full_group(&self) -> Vec<StabilizerElement> {
        (0..1u16 << self.n())
            .map(|s| self.element(s as u8))
            .collect()
    }

    /// The group element with the same letters as `op`, if there is one.
    /// Its sign may differ from `op`'s.
    pub fn lookup(&self, op: &PauliOperator) -> Option<StabilizerElement> {
        if op.n() != self.n() {
            return None;
        }
        let e = self.element(op.x_mask());
        (e.operator.z_mask() == op.z_mask()).then_some(e)
    }

    /// Whether `op` (sign included) belongs to the group.
    pub fn contains(&self, op: &PauliOperator) -> bool {
        self.lookup(op).is_some_and(|e| e.operator == *op)
    }

    pub fn generator_matrix(&self) -> GeneratorMatrix {
        let n = self.n();
        GeneratorMatrix {
            n,
            rows: self
                .generators
                .iter()
                .map(|g| g.x_mask() as u32 | (g.z_mask() as u32) << n)
                .collect(),
        }
    }
}

/// `n x 2n` GF(2) matrix; row `i` is `(x | z << n)` of `g_i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneratorMatrix {
    n: usize,
    rows: Vec<u32>,
}

impl GeneratorMatrix {
    pub fn rows(&self) -> &[u32] {
        &self.rows
    }

    pub fn rank(&self) -> usize {
        gf2::rank(self.rows.iter().copied())
    }

    /// Rank of the columns holding the x- and z-coordinates of `side`.
    pub fn side_rank(&self, side: u8) -> usize {
        let cols = side as u32 | (side as u32) << self.n;
        gf2::rank(self.rows.iter().map(|&r| gf2::compress(r, cols)))
    }
}

/// Whether restricting all `2^n` group elements to `side` hits each of the
/// `4^|side|` Pauli strings exactly once.
pub fn restriction_bijective(g: &Graph, side: u8) -> bool {
    let n = g.n();
    let k = side.count_ones() as usize;
    if 2 * k != n {
        return false;
    }
    let mut seen = vec![false; 1 << (2 * k)];
    for e in generators(g).full_group() {
        let idx = e.operator.restrict(side).index();
        if std::mem::replace(&mut seen[idx], true) {
            return false;
        }
    }
    true
}

/// Direct test: balanced, and both reduced stabilizers contain every Pauli
/// string of their side exactly once.
pub fn permits_bipartite_eor(g: &Graph, part: &Bipartition) -> bool {
    if g.n() != part.n() || !part.is_balanced() {
        return false;
    }
    restriction_bijective(g, part.part_a()) && restriction_bijective(g, part.part_b())
}

/// Rank form of the same test: the generator-matrix columns of A's
/// coordinates form an invertible `n x n` matrix.
pub fn permits_bipartite_eor_rank(g: &Graph, part: &Bipartition) -> Result<bool> {
    if g.n() != part.n() {
        return Err(Error::DimensionMismatch {
            left: g.n(),
            right: part.n(),
        });
    }
    if !part.is_balanced() {
        return Err(Error::Unbalanced {
            a: part.size_a(),
            b: part.size_b(),
        });
    }
    Ok(generators(g).generator_matrix().side_rank(part.part_a()) == g.n())
}

/// GF(2) rank of the adjacency block between A and B.
pub fn cut_rank(g: &Graph, part: &Bipartition) -> usize {
    let b = part.part_b() as u32;
    gf2::rank(
        (0..g.n())
            .filter(|&v| part.in_a(v))
            .map(|v| gf2::compress(g.neighbors(v) as u32, b)),
    )
}

/// A stabilizing operator predicting `letter` on `qubit` from measurements
/// on the other party alone.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EorWitness {
    pub qubit: usize,
    pub letter: Letter,
    pub witness: PauliOperator,
}

impl fmt::Display for EorWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let op = self.witness.render().map_err(|_| fmt::Error)?;
        write!(
            f,
            "qubit {}, letter {}: {}",
            self.qubit + 1,
            self.letter,
            op
        )
    }
}

impl EorWitness {
    /// Checks the witness restricts to the weight-one string on its own side.
    pub fn is_valid_for(&self, part: &Bipartition) -> bool {
        let side = part.side_of(self.qubit);
        own_side_string(self.witness.n(), side, self.qubit, self.letter)
            == self.witness.restrict(side)
    }
}

fn own_side_string(n: usize, side: u8, qubit: usize, letter: Letter) -> PauliString {
    PauliString::new(
        (0..n)
            .filter(|k| side >> k & 1 == 1)
            .map(|k| if k == qubit { letter } else { Letter::I })
            .collect(),
    )
}

/// The `3n` witnesses, ordered by qubit then `X, Y, Z`.
pub fn eor_witnesses(g: &Graph, part: &Bipartition) -> Result<Vec<EorWitness>> {
    if !permits_bipartite_eor(g, part) {
        return Err(Error::Contract(format!(
            "{g} with {part} does not permit bipartite elements of reality"
        )));
    }
    let n = g.n();
    let group = generators(g).full_group();
    let mut out = Vec::with_capacity(3 * n);
    for qubit in 0..n {
        let side = part.side_of(qubit);
        for letter in Letter::PAULIS {
            let target = own_side_string(n, side, qubit, letter);
            let mut hits = group.iter().filter(|e| e.operator.restrict(side) == target);
            let first = hits.next();
            match (first, hits.next()) {
                (Some(e), None) => out.push(EorWitness {
                    qubit,
                    letter,
                    witness: e.operator,
                }),
                _ => {
                    return Err(Error::Contract(format!(
                        "witness for {letter}{} is not unique",
                        qubit + 1
                    )))
                }
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    fn render(op: &PauliOperator) -> String {
        op.render().unwrap()
    }

    #[test]
    fn generator_examples() {
        let edge = Graph::path(2).unwrap();
        let sg = generators(&edge);
        assert_eq!(render(&sg.generators()[0]), "+X1·Z2");
        assert_eq!(render(&sg.generators()[1]), "+Z1·X2");
        assert_eq!(
            render(&generators(&Graph::path(3).unwrap()).generators()[1]),
            "+Z1·X2·Z3"
        );
        assert_eq!(
            render(&generators(&Graph::star(4).unwrap()).generators()[0]),
            "+X1·Z2·Z3·Z4"
        );
    }

    #[test]
    fn full_group_examples() {
        let single = generators(&Graph::empty(1).unwrap()).full_group();
        let r: Vec<_> = single.iter().map(|e| render(&e.operator)).collect();
        assert_eq!(r, ["+I1", "+X1"]);

        let edge = generators(&Graph::path(2).unwrap()).full_group();
        let r: Vec<_> = edge.iter().map(|e| render(&e.operator)).collect();
        assert_eq!(r, ["+I1·I2", "+X1·Z2", "+Z1·X2", "+Y1·Y2"]);
        assert_eq!(edge[3].product_label(), "g1g2");
        assert_eq!(edge[0].product_label(), "1");
    }

    #[test]
    fn group_of_six_vertex_graph_is_closed() {
        let g = Graph::cycle(6).unwrap();
        let sg = generators(&g);
        let elems: HashSet<PauliOperator> = sg.full_group().iter().map(|e| e.operator).collect();
        assert_eq!(elems.len(), 64);
        for a in &elems {
            for b in &elems {
                assert!(elems.contains(&(*a * *b)));
            }
        }
        assert_eq!(sg.generator_matrix().rank(), 6);
    }

    #[test]
    fn lookup_and_contains() {
        let sg = generators(&Graph::path(3).unwrap());
        let g1g2: PauliOperator = "+Y1·Y2·Z3".parse().unwrap();
        assert!(sg.contains(&g1g2));
        assert!(!sg.contains(&g1g2.negate()));
        assert_eq!(sg.lookup(&g1g2.negate()).unwrap().subset, 0b011);
        assert!(sg.lookup(&"+X1·I2·I3".parse().unwrap()).is_none());
    }

    #[test]
    fn lemma_two_examples() {
        let path = Graph::path(4).unwrap();
        let alt = Bipartition::parse("A=1,3", 4).unwrap();
        let left = Bipartition::parse("A=1,2", 4).unwrap();
        assert!(permits_bipartite_eor(&path, &alt));
        assert!(permits_bipartite_eor_rank(&path, &alt).unwrap());
        assert!(!permits_bipartite_eor(&path, &left));
        assert!(!permits_bipartite_eor_rank(&path, &left).unwrap());

        let star = Graph::star(4).unwrap();
        for p in Bipartition::balanced(4) {
            assert!(!permits_bipartite_eor(&star, &p));
        }
        let unbalanced = Bipartition::parse("A=1", 4).unwrap();
        assert!(!permits_bipartite_eor(&path, &unbalanced));
        assert_eq!(
            permits_bipartite_eor_rank(&path, &unbalanced),
            Err(Error::Unbalanced { a: 1, b: 3 })
        );
    }

    #[test]
    fn cut_rank_examples() {
        let edge = Graph::path(2).unwrap();
        assert_eq!(cut_rank(&edge, &Bipartition::parse("A=1", 2).unwrap()), 1);
        let star = Graph::star(4).unwrap();
        assert_eq!(cut_rank(&star, &Bipartition::parse("A=1,2", 4).unwrap()), 1);
    }

    #[test]
    fn witnesses_of_linear_cluster() {
        let path = Graph::path(4).unwrap();
        let part = Bipartition::parse("A=1,3", 4).unwrap();
        let ws = eor_witnesses(&path, &part).unwrap();
        assert_eq!(ws.len(), 12);
        assert_eq!(ws[0].qubit, 0);
        assert_eq!(ws[0].letter, Letter::X);
        assert_eq!(ws[0].witness.restrict(part.part_a()).to_string(), "XI");
        for w in &ws {
            assert!(w.is_valid_for(&part));
        }
        // X and Y witnesses of a qubit multiply to its Z witness
        for q in 0..4 {
            let [x, y, z] = [0, 1, 2].map(|i| ws[3 * q + i].witness);
            assert_eq!(x * y, z);
        }
        assert!(ws[0].to_string().starts_with("qubit 1, letter X: +X1·"));
    }

    #[test]
    fn witnesses_require_passing_pair() {
        let star = Graph::star(4).unwrap();
        let part = Bipartition::parse("A=1,2", 4).unwrap();
        assert!(matches!(
            eor_witnesses(&star, &part),
            Err(Error::Contract(_))
        ));
    }
}
