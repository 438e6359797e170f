use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("frame of discernment must contain at least one element")]
    EmptyFrame,

    #[error("frame labels must be nonempty")]
    EmptyLabel,

    #[error("duplicate frame label `{0}`")]
    DuplicateLabel(String),

    #[error("label `{0}` is not an element of the frame")]
    UnknownLabel(String),

    #[error("empty focal set: the axiom m(∅) = 0 forbids assigning mass to the empty set")]
    EmptySubset,

    #[error("frame size {size} exceeds the limit of {limit}")]
    FrameTooLarge { size: usize, limit: usize },

    #[error("frame size must be at least 1")]
    ZeroFrameSize,

    #[error("subset member index {index} out of range for a frame of size {size}")]
    IndexOutOfRange { index: usize, size: usize },

    #[error("masses sum to {total}, violating the axiom Σ m(A) = 1 (tolerance {tolerance:e})")]
    NonUnitTotal { total: f64, tolerance: f64 },

    #[error("negative mass {mass} assigned to {subset}")]
    NegativeMass { subset: String, mass: f64 },

    #[error("mass {0} is not a finite number")]
    NonFiniteMass(f64),

    #[error("subset {0} is assigned more than once")]
    DuplicateSubset(String),

    #[error("mass function has a non-singleton focal element {0}; it is not Bayesian")]
    NotBayesian(String),

    #[error("focal sets of cardinality {cardinality} carry unequal masses")]
    NotCardinalitySymmetric { cardinality: usize },

    #[error("cardinality layer {cardinality} holds {count} of {full} subsets; only full layers can be expanded")]
    PartialLayerUnsupported {
        cardinality: usize,
        count: u64,
        full: u64,
    },

    #[error("{0:?} is not a permutation of the frame indices")]
    InvalidPermutation(Vec<usize>),

    #[error("invalid cardinality profile: {0}")]
    InvalidProfile(String),

    #[error("probabilities must be positive and finite, got {0}")]
    InvalidProbability(f64),

    #[error("logarithm base must be a finite number greater than 1, got {0}")]
    InvalidBase(f64),

    #[error("unknown logarithm base `{0}` (expected 2, e or 10)")]
    UnknownBase(String),

    #[error("tolerance must be positive and finite, got {0}")]
    InvalidTolerance(f64),

    #[error(
        "unknown family `{0}` (expected vacuous, uniform-bayesian, uniform-powerset or max-deng)"
    )]
    UnknownFamily(String),

    #[error("invalid sweep range {n_min}..={n_max}")]
    InvalidRange { n_min: usize, n_max: usize },

    #[error("limit detection needs at least {window} rows, table has {rows}")]
    InsufficientRows { rows: usize, window: usize },

    #[error("limit detection window must be at least 2, got {0}")]
    InvalidWindow(usize),

    #[error("decimals must lie in 1..=15, got {0}")]
    InvalidDecimals(usize),

    #[error("unknown output format `{0}` (expected json, csv or markdown)")]
    UnknownFormat(String),

    #[error("malformed mass-function document: {0}")]
    Json(#[from] serde_json::Error),
}
