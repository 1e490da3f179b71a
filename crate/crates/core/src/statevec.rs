//! Dense statevector oracle for graph states.
//!
//! Amplitude index bit `n - 1 - k` holds qubit `k`, so qubit 1 (0-based 0) is
//! the most significant bit and bitstrings read left to right as qubits
//! `1..=n`.

use std::f64::consts::FRAC_1_SQRT_2;
use std::fmt::Write;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::pauli::PauliOperator;
use crate::stabilizer;

pub const MAX_STATE_QUBITS: usize = 10;

/// Tolerance for every eigen-equation and fidelity check.
pub const TOLERANCE: f64 = 1e-10;

const ZERO: Complex64 = Complex64::new(0.0, 0.0);
const ONE: Complex64 = Complex64::new(1.0, 0.0);
const I: Complex64 = Complex64::new(0.0, 1.0);

#[derive(Debug, Clone, PartialEq)]
pub struct StateVector {
    n: usize,
    amplitudes: Vec<Complex64>,
}

fn to_index_mask(n: usize, qubit_mask: u8) -> usize {
    (0..n)
        .filter(|k| qubit_mask >> k & 1 == 1)
        .fold(0, |m, k| m | 1 << (n - 1 - k))
}

impl StateVector {
    /// `|0…0⟩`.
    pub fn zero(n: usize) -> Result<Self> {
        if n == 0 || n > MAX_STATE_QUBITS {
            return Err(Error::Size(n));
        }
        let mut amplitudes = vec![ZERO; 1 << n];
        amplitudes[0] = ONE;
        Ok(StateVector { n, amplitudes })
    }

    pub fn from_amplitudes(n: usize, amplitudes: Vec<Complex64>) -> Result<Self> {
        if n == 0 || n > MAX_STATE_QUBITS {
            return Err(Error::Size(n));
        }
        if amplitudes.len() != 1 << n {
            return Err(Error::DimensionMismatch {
                left: 1 << n,
                right: amplitudes.len(),
            });
        }
        Ok(StateVector { n, amplitudes })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amplitudes
    }

    pub fn norm(&self) -> f64 {
        self.amplitudes
            .iter()
            .map(|a| a.norm_sqr())
            .sum::<f64>()
            .sqrt()
    }

    /// `⟨self|other⟩`.
    pub fn inner(&self, other: &StateVector) -> Result<Complex64> {
        self.check_same(other)?;
        Ok(self
            .amplitudes
            .iter()
            .zip(&other.amplitudes)
            .map(|(a, b)| a.conj() * b)
            .sum())
    }

    /// `‖self - other‖`.
    pub fn distance(&self, other: &StateVector) -> Result<f64> {
        self.check_same(other)?;
        Ok(self
            .amplitudes
            .iter()
            .zip(&other.amplitudes)
            .map(|(a, b)| (a - b).norm_sqr())
            .sum::<f64>()
            .sqrt())
    }

    fn check_same(&self, other: &StateVector) -> Result<()> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch {
                left: self.n,
                right: other.n,
            });
        }
        Ok(())
    }

    pub fn apply_hadamard(&mut self, qubit: usize) {
        let bit = 1 << (self.n - 1 - qubit);
        for b in 0..self.amplitudes.len() {
            if b & bit == 0 {
                let (lo, hi) = (self.amplitudes[b], self.amplitudes[b | bit]);
                self.amplitudes[b] = (lo + hi) * FRAC_1_SQRT_2;
                self.amplitudes[b | bit] = (lo - hi) * FRAC_1_SQRT_2;
            }
        }
    }

    pub fn apply_cz(&mut self, a: usize, b: usize) {
        let mask = 1 << (self.n - 1 - a) | 1 << (self.n - 1 - b);
        for (idx, amp) in self.amplitudes.iter_mut().enumerate() {
            if idx & mask == mask {
                *amp = -*amp;
            }
        }
    }

    /// One line per amplitude: `bitstring re im`.
    pub fn dump(&self) -> String {
        let mut out = String::new();
        for (idx, a) in self.amplitudes.iter().enumerate() {
            let _ = writeln!(
                out,
                "{:0width$b} {:.12} {:.12}",
                idx,
                a.re,
                a.im,
                width = self.n
            );
        }
        out
    }
}

/// `|+⟩^{⊗n}` followed by a controlled-Z on every edge.
pub fn build_state(g: &Graph) -> Result<StateVector> {
    let n = g.n();
    let mut s = StateVector::zero(n)?;
    for q in 0..n {
        s.apply_hadamard(q);
    }
    for (u, v) in g.edges() {
        s.apply_cz(u, v);
    }
    Ok(s)
}

/// Dense application of `i^phase · X^x · Z^z`.
pub fn apply_pauli(p: &PauliOperator, s: &StateVector) -> Result<StateVector> {
    if p.n() != s.n() {
        return Err(Error::DimensionMismatch {
            left: p.n(),
            right: s.n(),
        });
    }
    let n = s.n();
    let xi = to_index_mask(n, p.x_mask());
    let zi = to_index_mask(n, p.z_mask());
    let phase = I.powu(p.phase_exp() as u32);
    let mut out = vec![ZERO; s.amplitudes.len()];
    for (b, amp) in s.amplitudes.iter().enumerate() {
        let sign = if (zi & b).count_ones() % 2 == 1 {
            -1.0
        } else {
            1.0
        };
        out[b ^ xi] = phase * amp * sign;
    }
    Ok(StateVector { n, amplitudes: out })
}

/// `‖p|s⟩ - |s⟩‖`.
pub fn eigen_deviation(p: &PauliOperator, s: &StateVector) -> Result<f64> {
    apply_pauli(p, s)?.distance(s)
}

/// Largest `‖s|G⟩ - |G⟩‖` over all `2^n` stabilizing operators.
pub fn verify_stabilizer(g: &Graph) -> f64 {
    let state = build_state(g).expect("graphs have at most 8 vertices");
    stabilizer::generators(g)
        .full_group()
        .iter()
        .map(|e| eigen_deviation(&e.operator, &state).expect("same qubit count"))
        .fold(0.0, f64::max)
}

/// The 4-qubit state `½(|00⟩|x̄0x̄0⟩ + |01⟩|x̄0x̄1⟩ + |10⟩|x̄1x̄0⟩ − |11⟩|x̄1x̄1⟩)`
/// with qubits 1, 2 in the computational basis and 3, 4 in the σ_x basis
/// (`|x̄0⟩ = |+⟩`, `|x̄1⟩ = |−⟩`), written out in the computational basis.
pub fn psi4a() -> StateVector {
    // Label coefficients: qubit 3 carries the label of qubit 1, qubit 4 that
    // of qubit 2; then map the labels of qubits 3, 4 into the σ_x basis.
    let mut labels = vec![ZERO; 16];
    for (a, b) in [(0, 0), (0, 1), (1, 0), (1, 1)] {
        let idx = a << 3 | b << 2 | a << 1 | b;
        labels[idx] = if a == 1 && b == 1 {
            -0.5 * ONE
        } else {
            0.5 * ONE
        };
    }
    let mut s = StateVector::from_amplitudes(4, labels).expect("16 amplitudes");
    s.apply_hadamard(2);
    s.apply_hadamard(3);
    s
}

/// The labelling of the 4-qubit linear cluster matching [`psi4a`]: the path
/// `3 - 1 - 2 - 4`, with Alice holding qubits 1 and 2.
pub fn psi4a_cluster() -> Graph {
    Graph::from_edges(4, &[(0, 1), (0, 2), (1, 3)]).expect("valid edges")
}

/// `|⟨ψ4a|G⟩|` for a 4-vertex graph.
pub fn psi4a_fidelity(g: &Graph) -> Result<f64> {
    if g.n() != 4 {
        return Err(Error::DimensionMismatch {
            left: 4,
            right: g.n(),
        });
    }
    Ok(psi4a().inner(&build_state(g)?)?.norm())
}

/// Fidelity of [`psi4a`] with the graph state of [`psi4a_cluster`].
pub fn check_psi4a() -> f64 {
    psi4a_fidelity(&psi4a_cluster()).expect("4 qubits")
}

/// Row-major dense matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct DenseMatrix {
    dim: usize,
    data: Vec<Complex64>,
}

impl DenseMatrix {
    /// `i^phase · ⊗_k X^{x_k} Z^{z_k}` assembled by Kronecker products.
    pub fn from_pauli(p: &PauliOperator) -> DenseMatrix {
        let mut m = DenseMatrix {
            dim: 1,
            data: vec![I.powu(p.phase_exp() as u32)],
        };
        for k in 0..p.n() {
            let x = p.x_mask() >> k & 1 == 1;
            let z = p.z_mask() >> k & 1 == 1;
            // X^x Z^z as a 2x2 block
            let block = match (x, z) {
                (false, false) => [ONE, ZERO, ZERO, ONE],
                (true, false) => [ZERO, ONE, ONE, ZERO],
                (false, true) => [ONE, ZERO, ZERO, -ONE],
                (true, true) => [ZERO, -ONE, ONE, ZERO],
            };
            m = m.kron2(&block);
        }
        m
    }

    fn kron2(&self, block: &[Complex64; 4]) -> DenseMatrix {
        let d = self.dim * 2;
        let mut data = vec![ZERO; d * d];
        for i in 0..self.dim {
            for j in 0..self.dim {
                let a = self.data[i * self.dim + j];
                for k in 0..2 {
                    for l in 0..2 {
                        data[(2 * i + k) * d + 2 * j + l] = a * block[2 * k + l];
                    }
                }
            }
        }
        DenseMatrix { dim: d, data }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, row: usize, col: usize) -> Complex64 {
        self.data[row * self.dim + col]
    }

    pub fn mul(&self, other: &DenseMatrix) -> DenseMatrix {
        let d = self.dim;
        let mut data = vec![ZERO; d * d];
        for i in 0..d {
            for k in 0..d {
                let a = self.data[i * d + k];
                if a == ZERO {
                    continue;
                }
                for j in 0..d {
                    data[i * d + j] += a * other.data[k * d + j];
                }
            }
        }
        DenseMatrix { dim: d, data }
    }

    pub fn max_abs_diff(&self, other: &DenseMatrix) -> f64 {
        self.data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn close(a: Complex64, b: f64) -> bool {
        (a - Complex64::new(b, 0.0)).norm() < 1e-12
    }

    #[test]
    fn single_qubit_plus() {
        let s = build_state(&Graph::empty(1).unwrap()).unwrap();
        assert!(close(s.amplitudes()[0], FRAC_1_SQRT_2));
        assert!(close(s.amplitudes()[1], FRAC_1_SQRT_2));
    }

    #[test]
    fn single_edge_state() {
        let s = build_state(&Graph::path(2).unwrap()).unwrap();
        let expect = [0.5, 0.5, 0.5, -0.5];
        for (a, e) in s.amplitudes().iter().zip(expect) {
            assert!(close(*a, e));
        }
    }

    #[test]
    fn apply_pauli_basics() {
        let id = PauliOperator::identity(2).unwrap();
        let s = build_state(&Graph::path(2).unwrap()).unwrap();
        assert_eq!(apply_pauli(&id, &s).unwrap(), s);
        let x = PauliOperator::single(1, 0, crate::Letter::X).unwrap();
        let zero = StateVector::zero(1).unwrap();
        let one = apply_pauli(&x, &zero).unwrap();
        assert!(close(one.amplitudes()[1], 1.0) && close(one.amplitudes()[0], 0.0));
        assert!(apply_pauli(&x, &s).is_err());
    }

    #[test]
    fn generator_stabilizes_path() {
        let g = Graph::path(3).unwrap();
        let s = build_state(&g).unwrap();
        let g2 = stabilizer::generators(&g).generators()[1];
        assert!(eigen_deviation(&g2, &s).unwrap() < TOLERANCE);
        assert!((eigen_deviation(&g2.negate(), &s).unwrap() - 2.0).abs() < TOLERANCE);
    }

    #[test]
    fn stabilizer_of_edge_verified() {
        assert!(verify_stabilizer(&Graph::path(2).unwrap()) < TOLERANCE);
    }

    #[test]
    fn psi4a_matches_cluster() {
        assert!((psi4a().norm() - 1.0).abs() < 1e-12);
        assert!((check_psi4a() - 1.0).abs() < TOLERANCE);
        let ghz = psi4a_fidelity(&Graph::star(4).unwrap()).unwrap();
        assert!(ghz < 1.0 - 1e-3);
        assert!(psi4a_fidelity(&Graph::path(3).unwrap()).is_err());
    }

    #[test]
    fn dense_matrix_of_y() {
        let y = PauliOperator::single(1, 0, crate::Letter::Y).unwrap();
        let m = DenseMatrix::from_pauli(&y);
        assert!((m.get(0, 1) - Complex64::new(0.0, -1.0)).norm() < 1e-12);
        assert!((m.get(1, 0) - Complex64::new(0.0, 1.0)).norm() < 1e-12);
    }

    #[test]
    fn dump_format() {
        let s = build_state(&Graph::path(2).unwrap()).unwrap();
        let dump = s.dump();
        assert_eq!(dump.lines().count(), 4);
        assert!(dump.lines().last().unwrap().starts_with("11 -0.5"));
    }

    #[test]
    fn size_limits() {
        assert!(StateVector::zero(11).is_err());
        assert!(StateVector::zero(10).is_ok());
        assert!(StateVector::from_amplitudes(2, vec![ZERO; 3]).is_err());
    }
}
