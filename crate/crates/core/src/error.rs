use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("line {line}: duplicate vertex `{label}`")]
    DuplicateVertex { line: usize, label: String },
    #[error("line {line}: edge endpoint `{label}` is not a declared vertex")]
    UnknownEndpoint { line: usize, label: String },
    #[error("line {line}: self-loop on `{label}`")]
    SelfLoop { line: usize, label: String },
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("graph has no vertices")]
    EmptyGraph,
    #[error("graph has {0} vertices; at most {max} are supported", max = crate::graph::MAX_VERTICES)]
    TooManyVertices(usize),
    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),
    #[error("graph is a join and cannot be classified as a single factor")]
    NotAFactor,
    #[error("radius {radius} exceeds cap {cap}")]
    RadiusExceedsCap { radius: usize, cap: usize },
    #[error("word `{0}` is not reduced")]
    NotReduced(String),
    #[error("generator `{0}` does not occur in the word")]
    GeneratorAbsent(String),
    #[error("generators missing from the reduced word: {}", .0.join(", "))]
    MissingGenerators(Vec<String>),
    #[error("no blocker pair exists for `{0}`; the graph is reducible or affine")]
    NoBlocker(String),
    #[error("exponent {0} is too small; at least 2 is required")]
    ExponentTooSmall(u32),
    #[error("contract violation: {0}")]
    ContractViolation(String),
    #[error("word `{0}` is not a member of the subgroup")]
    NotInSubgroup(String),
    #[error("precondition failed: {0}")]
    PreconditionClass(String),
    #[error("invalid subgroup spec: {0}")]
    InvalidSubgroup(String),
}

impl Error {
    /// Stable machine-readable code, used in JSON diagnostics.
    pub fn code(&self) -> &'static str {
        match self {
            Error::DuplicateVertex { .. } => "DUPLICATE_VERTEX",
            Error::UnknownEndpoint { .. } => "UNKNOWN_ENDPOINT",
            Error::SelfLoop { .. } => "SELF_LOOP",
            Error::Syntax { .. } => "SYNTAX_ERROR",
            Error::EmptyGraph => "EMPTY_GRAPH",
            Error::TooManyVertices(_) => "TOO_MANY_VERTICES",
            Error::UnknownGenerator(_) => "UNKNOWN_GENERATOR",
            Error::NotAFactor => "NOT_A_FACTOR",
            Error::RadiusExceedsCap { .. } => "RADIUS_EXCEEDS_CAP",
            Error::NotReduced(_) => "NOT_REDUCED",
            Error::GeneratorAbsent(_) => "GENERATOR_ABSENT",
            Error::MissingGenerators(_) => "MISSING_GENERATORS",
            Error::NoBlocker(_) => "NO_BLOCKER",
            Error::ExponentTooSmall(_) => "EXPONENT_TOO_SMALL",
            Error::ContractViolation(_) => "CONTRACT_VIOLATION",
            Error::NotInSubgroup(_) => "NOT_IN_SUBGROUP",
            Error::PreconditionClass(_) => "PRECONDITION_CLASS",
            Error::InvalidSubgroup(_) => "INVALID_SUBGROUP",
        }
    }
}
