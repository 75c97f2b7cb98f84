use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ArithError {
    #[error("variable lists differ: {left:?} vs {right:?}")]
    VarMismatch { left: Vec<String>, right: Vec<String> },
    #[error("exponent vector has length {found}, expected {expected}")]
    ExponentLength { expected: usize, found: usize },
    #[error("no exact Laurent quotient exists")]
    NotDivisible,
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("variable {0} is zero but occurs with a negative exponent")]
    ZeroToNegativePower(String),
    #[error("no value given for variable {0}")]
    MissingValue(String),
    #[error("parse error: {0}")]
    Parse(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FriezeError {
    #[error("quiddity must be non-empty")]
    EmptyQuiddity,
    #[error("quiddity entry {index} is {value}, entries must be positive")]
    NonPositiveQuiddity { index: usize, value: String },
    #[error("depth must be at least 1")]
    ZeroDepth,
    #[error("entry x[{i},{j}] in row {row} is {value}, not positive")]
    NonPositiveEntry { i: i64, j: i64, row: usize, value: String },
    #[error("invalid frieze: {0}")]
    InvalidFrieze(String),
    #[error("frieze depth {depth} is too small, need at least {needed}")]
    InsufficientDepth { depth: usize, needed: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ClusterError {
    #[error("vertex {vertex} out of range for a quiver with {size} vertices")]
    VertexOutOfRange { vertex: usize, size: usize },
    #[error("exchange matrix is not skew-symmetric at ({0},{1})")]
    NotSkewSymmetric(usize, usize),
    #[error("exchange matrix must be square, row {row} has length {len}, expected {expected}")]
    NotSquare { row: usize, len: usize, expected: usize },
    #[error("{0} labels given for {1} vertices")]
    LabelCount(usize, usize),
    #[error("unknown vertex label {0:?}")]
    UnknownLabel(String),
    #[error("vertex {0} is frozen and cannot be mutated")]
    FrozenVertex(usize),
    #[error("quivers have different vertex counts ({0} vs {1})")]
    SizeMismatch(usize, usize),
    #[error("vertex map is not a permutation")]
    NotAPermutation,
    #[error("no quiver satisfying the predicate within {0} canonical quivers")]
    NotFound(usize),
    #[error("quiver is not connected")]
    Disconnected,
    #[error("no vertex permutation returns the mutated quiver to its base labeling")]
    NoRestoringPermutation,
    #[error("restoring permutations disagree on cluster variables")]
    AmbiguousPermutation,
    #[error("quiver does not have the affine E shape with a double arrow: {0}")]
    NotEShape(String),
    #[error("no double arrow {0} => {1} in the quiver")]
    MissingDoubleArrow(usize, usize),
    #[error("quiver {0} has no double arrow with a triangle on each side")]
    NoGrowthDoubleArrow(String),
    #[error("unknown modular generator {0:?}")]
    UnknownGenerator(String),
    #[error("generator gamma needs a quiver with a nontrivial symmetry (affine E6)")]
    NoSymmetry,
    #[error(transparent)]
    Arith(#[from] ArithError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RepError {
    #[error("dimension vector has length {found}, expected {expected}")]
    DimLength { expected: usize, found: usize },
    #[error("quiver must be acyclic for representations")]
    Cyclic,
    #[error("matrix for arrow {tail}->{head} has shape {rows}x{cols}, expected {exp_rows}x{exp_cols}")]
    MatrixShape { tail: usize, head: usize, rows: usize, cols: usize, exp_rows: usize, exp_cols: usize },
    #[error("arrow {tail}->{head} has {given} maps but the quiver has {expected} arrows")]
    ArrowCount { tail: usize, head: usize, given: usize, expected: usize },
    #[error("prime {0} is not admissible for this representation")]
    InadmissiblePrime(u64),
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("need {needed} admissible primes for interpolation, only {available} available")]
    TooFewPrimes { needed: usize, available: usize },
    #[error("point counts are not polynomial in q for e = {e:?}: {detail}")]
    NonPolynomialCount { e: Vec<u32>, detail: String },
    #[error("subdimension vector {0:?} exceeds the representation's dimensions")]
    DimVectorTooLarge(Vec<u32>),
    #[error("quiver is not affine: {0}")]
    NotAffine(String),
    #[error("{0}")]
    Parse(String),
    #[error("representations live on different quivers")]
    QuiverMismatch,
    #[error(transparent)]
    Cluster(#[from] ClusterError),
    #[error(transparent)]
    Arith(#[from] ArithError),
}

/// Crate-level error used by the pipelines and the command line.
#[derive(Debug, Error)]
pub enum Error {
    #[error(transparent)]
    Arith(#[from] ArithError),
    #[error(transparent)]
    Frieze(#[from] FriezeError),
    #[error(transparent)]
    Cluster(#[from] ClusterError),
    #[error(transparent)]
    Rep(#[from] RepError),
    #[error("{0}")]
    Invalid(String),
    #[error("io error on {path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

impl Error {
    /// Short machine-readable kind for JSON error objects.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::Arith(_) => "arith",
            Error::Frieze(_) => "frieze",
            Error::Cluster(_) => "cluster",
            Error::Rep(_) => "rep",
            Error::Invalid(_) => "invalid",
            Error::Io { .. } => "io",
            Error::Json(_) => "json",
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
