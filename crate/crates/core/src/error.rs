use alloc::string::String;

/// Errors raised by seed construction and the seed calculus.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("unknown Cartan type `{0}`")]
    UnknownType(String),
    #[error("letter {letter} is out of range for rank {rank}")]
    BadLetter { letter: i32, rank: usize },
    #[error("cannot parse `{0}`")]
    Parse(String),
    #[error("the Demazure product of the word is not the longest element")]
    BadDemazure,
    #[error("internal inconsistency: {0}")]
    InternalInconsistency(String),
    #[error("exchange matrix entry at row {row}, column {col} is not an integer")]
    NonIntegral { row: usize, col: usize },
    #[error("index {0} is not mutable")]
    NotMutable(usize),
    #[error("contraction assumption violated: {0}")]
    AssumptionViolated(String),
    #[error("the seeds do not share a character lattice")]
    IncomparableLattices,
    #[error("move not applicable: {0}")]
    NotApplicable(String),
    #[error("seed is not weakly admissible: {0}")]
    NotAdmissible(String),
    #[error("orbit mutation at {0} is not quasi-admissible")]
    NotQuasiAdmissible(usize),
    #[error("oracle division failed: {0}")]
    DivisionFailure(String),
    #[error("oracle factorization failed: {0}")]
    FactorizationFailure(String),
}

pub type Result<T> = core::result::Result<T, Error>;
