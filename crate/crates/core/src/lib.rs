//! Search and certification of bipartite all-versus-nothing (AVN) proofs of
//! Bell's theorem for graph states with single-qubit Pauli measurements.
//!
//! The crate is organised bottom-up:
//!
//! - [`pauli`]: phase-tracked Pauli operators in symplectic form.
//! - [`graph`]: small graphs, canonical labelling, enumeration and
//!   local-complementation orbits.
//! - [`stabilizer`]: graph-state stabilizer groups and the bipartite
//!   elements-of-reality test.
//! - [`proof`]: parity contradictions, LHV brute force and full certificates.
//! - [`certificate`]: the certificate text format and standalone verifier.
//! - [`statevec`]: dense statevector oracle.
//! - [`classify`]: the full classification and its reports.

pub mod certificate;
pub mod classify;
mod error;
pub mod gf2;
pub mod graph;
pub mod pauli;
pub mod proof;
pub mod stabilizer;
pub mod statevec;

pub use error::{Error, NoProofReason, Result};
pub use graph::{Bipartition, ColoredGraph, Graph, LcOrbit};
pub use pauli::{Letter, PauliOperator, PauliString, MAX_QUBITS};
pub use proof::{BavnCertificate, ParityProofCertificate};
pub use stabilizer::{EorWitness, StabilizerGroup};
pub use statevec::StateVector;
