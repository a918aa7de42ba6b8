use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid Cartan type: {0}")]
    InvalidType(String),
    #[error("operation requires an irreducible root system, got {0}")]
    Reducible(String),
    #[error("weight {0:?} is not dominant")]
    NotDominant(Vec<i64>),
    #[error("weight has {got} coordinates, root system has rank {expected}")]
    RankMismatch { expected: usize, got: usize },
    #[error("{what} exceeds the budget of {limit}")]
    BudgetExceeded { what: String, limit: usize },
    #[error("elements belong to different root systems ({0} vs {1})")]
    MismatchedSystems(String, String),
    #[error("element {0:?} is not the minimal representative of its double coset")]
    NotMinimalRepresentative(Vec<usize>),
    #[error("simple index {index} out of range for rank {rank}")]
    IndexOutOfRange { index: usize, rank: usize },
    #[error("subsystem enumeration is limited to rank {limit}, got rank {rank}")]
    RankGuard { rank: usize, limit: usize },
    #[error("{0} is not a prime")]
    NotPrime(u64),
    #[error("partition {partition:?} is not {p}-regular")]
    NotRegular { partition: Vec<usize>, p: u64 },
    #[error("partition {partition:?} has size {size}, expected {expected}")]
    SizeMismatch {
        partition: Vec<usize>,
        size: usize,
        expected: usize,
    },
    #[error("malformed input: {0}")]
    Malformed(String),
    #[error("no strictly convex support function exists: {0}")]
    Infeasible(String),
    #[error("no generic point found after {0} draws")]
    NonGeneric(usize),
    #[error("ray {0:?} is outside the support of the fan")]
    OutsideSupport(Vec<i64>),
    #[error("generation search exhausted for fundamental weights {0:?}")]
    SearchExhausted(Vec<usize>),
    #[error("internal invariant violated: {0}")]
    Internal(String),
}
