mod common;

use bavn_core::proof::{
    brute_force_lhv, find_parity_proofs, lemma1_certificate, lemma1_triple, verify_parity,
};
use bavn_core::{Graph, ParityProofCertificate};

fn as_set(p: &ParityProofCertificate) -> Vec<String> {
    let mut k: Vec<String> = p.equations().iter().map(|e| e.render().unwrap()).collect();
    k.sort();
    k
}

#[test]
fn lemma_one_is_total() {
    for g in common::all_connected(3..=7) {
        let cert = lemma1_certificate(&g).unwrap_or_else(|e| panic!("{g}: {e}"));
        assert_eq!(cert.len(), 4);
        assert!(verify_parity(&cert), "{g}");
        assert!(!brute_force_lhv(&cert).unwrap(), "{g}");
    }
}

#[test]
fn lemma_one_triple_is_a_path() {
    for g in common::all_connected(3..=6) {
        let (i, j, k, triangle) = lemma1_triple(&g).unwrap();
        assert!(g.has_edge(i, j) && g.has_edge(j, k) && i != k);
        assert_eq!(triangle, g.has_edge(i, k));
    }
}

#[test]
fn searched_proofs_are_sound() {
    for g in common::all_connected(3..=5) {
        let proofs = find_parity_proofs(&g, 4).unwrap();
        let lemma1 = as_set(&lemma1_certificate(&g).unwrap());
        assert!(proofs.iter().any(|p| as_set(p) == lemma1), "{g}");
        for p in &proofs {
            assert!(verify_parity(p));
            assert!(!brute_force_lhv(p).unwrap());
        }
    }
}

#[test]
fn searched_proofs_are_sound_at_six_sampled() {
    for g in common::all_connected(6..=6).into_iter().step_by(16) {
        let proofs = find_parity_proofs(&g, 4).unwrap();
        assert!(!proofs.is_empty());
        for p in proofs.iter().step_by(7) {
            assert!(!brute_force_lhv(p).unwrap());
        }
    }
}

#[test]
fn searched_proofs_are_distinct_sets() {
    let g = Graph::cycle(5).unwrap();
    let proofs = find_parity_proofs(&g, 6).unwrap();
    let mut keys: Vec<Vec<String>> = proofs.iter().map(as_set).collect();
    let total = keys.len();
    keys.sort();
    keys.dedup();
    assert_eq!(keys.len(), total);
    assert!(proofs.iter().all(|p| p.len() >= 3 && p.len() <= 6));
}

#[test]
fn two_qubits_have_no_proof() {
    let edge = Graph::path(2).unwrap();
    assert!(find_parity_proofs(&edge, 6).unwrap().is_empty());
    assert!(lemma1_certificate(&edge).is_err());
}

#[test]
fn tampering_breaks_lemma_one_certificates() {
    for g in common::all_connected(3..=5) {
        let cert = lemma1_certificate(&g).unwrap();
        for k in 0..cert.len() {
            let mut flipped = cert.equations().to_vec();
            flipped[k] = flipped[k].negate();
            let flipped = ParityProofCertificate::new(flipped).unwrap();
            assert!(!verify_parity(&flipped));
            assert!(brute_force_lhv(&flipped).unwrap());

            let mut short = cert.equations().to_vec();
            short.remove(k);
            assert!(!verify_parity(&ParityProofCertificate::new(short).unwrap()));
        }
    }
}
