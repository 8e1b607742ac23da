use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LieError {
    #[error("inadmissible rank {rank} for type {family}: {expected}")]
    InadmissibleRank {
        family: char,
        rank: usize,
        expected: &'static str,
    },
    #[error("cannot parse simple type `{0}` (expected e.g. `E7`, `B5`)")]
    ParseType(String),
    #[error("cannot parse weight `{0}` (expected comma-separated integers)")]
    ParseWeight(String),
    #[error("cannot parse module `{0}`: {1}")]
    ParseModule(String, String),
    #[error("weight has {got} coordinates, algebra {algebra} has rank {expected}")]
    WeightLength {
        algebra: String,
        expected: usize,
        got: usize,
    },
    #[error("root vector has {got} coordinates, root system has rank {expected}")]
    RootLength { expected: usize, got: usize },
    #[error("vector {0:?} is not a root")]
    NotARoot(Vec<i32>),
    #[error("weight {0} is not dominant")]
    NonDominant(String),
    #[error("zero highest weight: the orbit of the highest weight vector is a point")]
    ZeroWeight,
    #[error("mismatched algebras: {0}")]
    MismatchedAlgebra(String),
    #[error("root subset is not a root subsystem: {0}")]
    NotClosed(String),
    #[error("unidentified Cartan matrix of rank {0}")]
    Unidentified(usize),
    #[error(
        "instance too large for the multiplicity recursion: dimension {dim} exceeds the limit \
         {limit}; rerun with a larger limit to continue"
    )]
    SizeGuard { dim: String, limit: u64 },
    #[error("module has no summands")]
    EmptyModule,
    #[error("dimension {0} does not fit in 64 bits")]
    Overflow(String),
    #[error("{0}")]
    Unsupported(String),
    #[error("malformed reference data: {0}")]
    Golden(String),
    #[error("classification violation: {0}")]
    Violation(String),
}

pub type Result<T> = std::result::Result<T, LieError>;
