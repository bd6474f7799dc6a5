use thiserror::Error;

/// Errors produced by the crystal library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("unknown diagram name `{0}`")]
    UnknownDiagram(String),

    #[error("rank {rank} is out of range for type {kind}")]
    RankOutOfRange { kind: char, rank: usize },

    #[error("node {node} does not exist in a diagram of rank {rank}")]
    InvalidNode { node: usize, rank: usize },

    #[error("vector {0} does not lie in the root lattice")]
    NotInRootLattice(String),

    #[error("fundamental weight {node} of {diagram} is not minuscule")]
    NotMinuscule { diagram: String, node: usize },

    #[error("index {k} does not have the parity of node {node}")]
    ParityViolation { node: usize, k: i64 },

    #[error("monomial is not of the form y_R z_S^-1: {0}")]
    NotDecomposable(String),

    #[error("S_{node} + 2 is not contained in R_{node} and the shifted neighbouring S multisets")]
    ContainmentViolation { node: usize },

    #[error("element cap of {cap} exceeded")]
    CapExceeded { cap: usize },

    #[error("monomial {0} is not an element of the crystal")]
    NotAnElement(String),

    #[error("crystal is not closed: {0}")]
    NotClosed(String),

    #[error("values do not lie in a single coset")]
    CosetMismatch,

    #[error("multisets have different sizes ({left} vs {right})")]
    SizeMismatch { left: usize, right: usize },

    #[error("weight difference has negative root coefficient at node {node}")]
    NegativeRootCoefficient { node: usize },

    #[error("invalid input: {0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, Error>;
