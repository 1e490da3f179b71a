mod common;

use bavn_core::gf2;
use bavn_core::graph::lc_orbits;
use bavn_core::stabilizer::{
    cut_rank, eor_witnesses, generators, permits_bipartite_eor, permits_bipartite_eor_rank,
};
use bavn_core::statevec::{self, DenseMatrix, TOLERANCE};
use bavn_core::{Bipartition, Graph, PauliOperator};

#[test]
fn generators_commute_and_are_independent() {
    for g in common::all_connected(2..=7) {
        let group = generators(&g);
        let gens = group.generators();
        assert_eq!(gens.len(), g.n());
        for a in gens {
            assert!(a.is_hermitian());
            assert!((*a * *a).is_identity());
            for b in gens {
                assert!(a.commutes(b).unwrap());
            }
        }
        assert_eq!(gf2::rank(gens.iter().map(|p| p.symplectic() as u32)), g.n());
    }
}

#[test]
fn group_elements_are_hermitian_with_real_signs() {
    for g in common::all_connected(2..=6) {
        for e in generators(&g).full_group() {
            assert!(e.operator.is_hermitian());
            assert!(e.operator.sign().is_some());
            assert_eq!(e.subset, e.operator.x_mask());
        }
    }
}

/// Both orientations of every cut, balanced or not.
fn all_cuts(n: usize) -> impl Iterator<Item = Bipartition> {
    (1u8..(1 << n) - 1).map(move |a| Bipartition::new(n, a).unwrap())
}

#[test]
fn lemma_two_three_ways() {
    for g in common::all_connected(2..=7) {
        let n = g.n();
        for part in all_cuts(n) {
            let direct = permits_bipartite_eor(&g, &part);
            assert_eq!(direct, permits_bipartite_eor(&g, &part.swapped()));
            if n <= 6 {
                assert_eq!(
                    direct,
                    common::reduced_stabilizer_complete(&g, &part),
                    "{g} {part}"
                );
            }
            if part.is_balanced() {
                assert_eq!(
                    direct,
                    permits_bipartite_eor_rank(&g, &part).unwrap(),
                    "{g} {part}"
                );
                assert_eq!(direct, cut_rank(&g, &part) == n / 2, "{g} {part}");
            } else {
                assert!(!direct);
                assert!(permits_bipartite_eor_rank(&g, &part).is_err());
            }
        }
    }
}

#[test]
fn witnesses_exist_exactly_for_passing_cuts() {
    for g in common::all_connected(4..=6) {
        for part in Bipartition::balanced(g.n()) {
            match eor_witnesses(&g, &part) {
                Ok(ws) => {
                    assert!(permits_bipartite_eor(&g, &part));
                    assert_eq!(ws.len(), 3 * g.n());
                    assert!(ws.iter().all(|w| w.is_valid_for(&part)));
                }
                Err(_) => assert!(!permits_bipartite_eor(&g, &part)),
            }
        }
    }
}

#[test]
fn statevector_stabilized_by_every_element() {
    for n in 2..=7 {
        for o in lc_orbits(n).unwrap() {
            assert!(statevec::verify_stabilizer(&o.representative) <= TOLERANCE);
            let s = statevec::build_state(&o.representative).unwrap();
            assert!((s.norm() - 1.0).abs() <= TOLERANCE);
        }
    }
}

#[test]
fn apply_pauli_preserves_norm() {
    let s = statevec::build_state(&Graph::cycle(5).unwrap()).unwrap();
    for x in 0u8..32 {
        for z in 0u8..32 {
            let p = PauliOperator::new(5, 1, x, z).unwrap();
            let t = statevec::apply_pauli(&p, &s).unwrap();
            assert!((t.norm() - 1.0).abs() < 1e-12);
        }
    }
}

#[test]
fn dense_products_of_group_elements() {
    for g in common::all_connected(2..=5) {
        let group = generators(&g).full_group();
        let dense: Vec<DenseMatrix> = group
            .iter()
            .map(|e| DenseMatrix::from_pauli(&e.operator))
            .collect();
        for (a, da) in group.iter().zip(&dense) {
            for (b, db) in group.iter().zip(&dense) {
                let product = DenseMatrix::from_pauli(&a.operator.multiply(&b.operator).unwrap());
                assert!(da.mul(db).max_abs_diff(&product) < 1e-12);
            }
        }
    }
}

#[test]
fn psi4a_labellings() {
    let path = statevec::psi4a_cluster();
    let mut perfect = 0;
    for perm in common::permutations(4) {
        let h = path.relabel(&perm).unwrap();
        let f = statevec::psi4a_fidelity(&h).unwrap();
        if h == path {
            assert!((f - 1.0).abs() < TOLERANCE);
            perfect += 1;
        } else {
            assert!(f < 1.0 - 1e-3, "{h}: {f}");
        }
    }
    // the path has two automorphisms
    assert_eq!(perfect, 2);
    assert!(statevec::psi4a_fidelity(&Graph::star(4).unwrap()).unwrap() < 1.0 - 1e-3);
}
