use thiserror::Error;

/// Failure while reading the textual polynomial grammar.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("syntax error at position {position}: {message}")]
    Syntax { position: usize, message: String },
    #[error("unknown variable `{name}` at position {position}")]
    UnknownVariable { name: String, position: usize },
    #[error("variable `{name}` at position {position} exceeds arity {arity}")]
    ArityMismatch {
        name: String,
        position: usize,
        arity: usize,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("arity mismatch: expected {expected}, found {found}")]
    ArityMismatch { expected: usize, found: usize },
    #[error("variable index {index} out of range for arity {arity}")]
    IndexOutOfRange { index: usize, arity: usize },
    #[error("weights must all be positive, got {0:?}")]
    NonPositiveWeights(Vec<i64>),
    #[error("polynomial is not homogeneous: {0}")]
    NotHomogeneous(String),
    #[error("expected a homogeneous polynomial of degree {expected}, found {found}")]
    WrongDegree { expected: i64, found: String },
    #[error("structure is not graded: bracket {{x{i},x{j}}} = {bracket} is not of degree {expected}", i = .i + 1, j = .j + 1)]
    NotGraded {
        i: usize,
        j: usize,
        bracket: String,
        expected: i64,
    },
    #[error("structure does not satisfy the Jacobi identity on (x{i},x{j},x{k})", i = .0 + 1, j = .1 + 1, k = .2 + 1)]
    NotPoisson(usize, usize, usize),
    #[error("derivation has degree {found}, expected {expected}")]
    DerivationDegree { expected: i64, found: i64 },
    #[error("derivation is not semi-Poisson for this structure")]
    NotSemiPoisson,
    #[error("scaling factor must be nonzero")]
    ZeroScale,
    #[error("structure is not unimodular")]
    NotUnimodular,
    #[error("{0} requires a structure on three variables of weight one")]
    NotQuadraticThreeVariable(&'static str),
    #[error("supplied generator {0} is not central")]
    NotCentral(String),
    #[error("cochain level {level} out of range 0..={max}")]
    LevelOutOfRange { level: usize, max: usize },
    #[error("expected {expected} arguments, got {found}")]
    ArgumentCount { expected: usize, found: usize },
    #[error("unknown catalog entry `{0}`")]
    UnknownEntry(String),
    #[error("invalid parameter for `{entry}`: {message}")]
    InvalidParameter { entry: String, message: String },
    #[error("no recorded expectation for `{0}`")]
    NoExpectation(String),
    #[error("invalid document: {0}")]
    Document(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
