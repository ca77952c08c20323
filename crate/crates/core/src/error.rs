use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u32),
    #[error("linear system has no solution")]
    NoSolution,
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("invalid relation: {0}")]
    InvalidRelation(String),
    #[error("algebra is not finite-dimensional below path length {0}")]
    NotFiniteDimensional(usize),
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("could not split a decomposable module (dim {0}): no usable idempotent found")]
    IdempotentLiftFailure(usize),
    #[error("knitting exceeded {0} meshes")]
    KnittingDiverged(usize),
    #[error("hom digraph among same-shift summands has a cycle")]
    CycleDetected,
    #[error("algebra is not split basic: {0}")]
    NotSplitBasic(String),
    #[error("summand {0} has a non-local endomorphism ring")]
    NonLocalSummand(usize),
    #[error("isomorphism search exceeded budget of {0} candidates")]
    SearchBudgetExceeded(usize),
    #[error("silting completion not found within shift window width {0}")]
    CompletionSearchExhausted(usize),
    #[error("approximation did not reach orthogonality within {0} steps")]
    ApproximationDiverged(usize),
    #[error("combinatorial budget exceeded: {0}")]
    BudgetExceeded(String),
    #[error("object is not silting: {0}")]
    NotSilting(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
