use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Errors shared by every module of the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid rank {rank} for family {family}")]
    InvalidRank { family: char, rank: usize },

    #[error("invalid lattice: {0}")]
    InvalidLattice(String),

    #[error("dimension mismatch: expected {expected} coordinates, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("not a root of this datum")]
    NotARoot,

    #[error("not a coroot of this datum")]
    NotACoroot,

    #[error("coweight is not dominant")]
    NotDominant,

    #[error("root is not the maximal root of its irreducible factor")]
    NotMaximalRoot,

    #[error("coweight is not minuscule or quasi-minuscule")]
    ElementNotMinimal,

    #[error("coweight does not lie in the weight set of the given highest coweight")]
    NotInOmega,

    #[error("step {index} does not lie in the weight set of its minimal coweight")]
    StepNotInOmega { index: usize },

    #[error("invalid path: {0}")]
    InvalidPath(String),

    #[error("Weyl group of order {order} exceeds the enumeration cap {cap}")]
    WeylGroupTooLarge { order: u128, cap: u128 },

    #[error("parse error: {0}")]
    Parse(String),

    #[error("thread pool already configured")]
    ThreadPool,
}
