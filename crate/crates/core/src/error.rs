use thiserror::Error;

/// Why a (graph, distribution) pair admits no bipartite proof.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NoProofReason {
    /// Fewer than three qubits.
    TooFewQubits,
    /// Alice and Bob hold different numbers of qubits.
    Unbalanced,
    /// The reduced stabilizer of one side misses some Pauli string.
    RankDeficient,
    /// No connected path of length two exists.
    NoTriple,
}

impl std::fmt::Display for NoProofReason {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            NoProofReason::TooFewQubits => "fewer than 3 qubits",
            NoProofReason::Unbalanced => "unbalanced distribution (n_A != n_B)",
            NoProofReason::RankDeficient => "rank-deficient reduced stabilizer",
            NoProofReason::NoTriple => "no connected vertex triple",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("qubit count mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },
    #[error("unsupported qubit/vertex count {0}")]
    Size(usize),
    #[error("operator is not Hermitian")]
    NonHermitian,
    #[error("vertex {vertex} out of range for {n} vertices")]
    InvalidVertex { vertex: usize, n: usize },
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("partition is unbalanced ({a} vs {b})")]
    Unbalanced { a: usize, b: usize },
    #[error("parse error: {0}")]
    Parse(String),
    #[error("no certificate: {0}")]
    NoCertificate(NoProofReason),
    #[error("no proof: {0}")]
    NoProof(NoProofReason),
    #[error("malformed certificate: {0}")]
    MalformedCertificate(String),
    #[error("too many observables ({0}, limit 24)")]
    TooManyObservables(usize),
    #[error("search bounds exceeded: {0}")]
    Bounds(String),
    #[error("unknown format '{0}'")]
    UnknownFormat(String),
    #[error("contract violation: {0}")]
    Contract(String),
}

pub type Result<T> = std::result::Result<T, Error>;
