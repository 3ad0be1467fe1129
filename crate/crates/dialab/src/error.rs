use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid tree name {0}")]
    InvalidName(String),
    #[error("invalid permutation {0}")]
    InvalidPermutation(String),
    #[error("cannot split the leaf")]
    SplitOfLeaf,
    #[error("the leaf has no faces")]
    FaceOfLeaf,
    #[error("the leaf has no bidegree")]
    BidegreeOfLeaf,
    #[error("index {index} out of range 0..={max}")]
    IndexOutOfRange { index: usize, max: usize },
    #[error("slot {slot} out of range 1..={max}")]
    SlotOutOfRange { slot: usize, max: usize },
    #[error("product {0} is undefined on the unit tree")]
    UndefinedOnUnit(&'static str),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("unknown fixture {0}")]
    UnknownFixture(String),
    #[error("unknown preset {0}")]
    UnknownPreset(String),
    #[error("dimension {dim} exceeds the cap {cap}")]
    TooLarge { dim: usize, cap: usize },
    #[error("axiom {axiom} fails on ({}, {}, {})", witness.0, witness.1, witness.2)]
    AxiomFailure { axiom: String, witness: (String, String, String) },
    #[error("theory {theory} does not accept a {found} source")]
    UnsupportedTheoryForSource { theory: String, found: String },
    #[error("incompatible algebras: {0}")]
    IncompatibleAlgebras(String),
    #[error("no homotopy case matches {0}")]
    CaseDispatchFailure(String),
    #[error("malformed algebra: {0}")]
    MalformedAlgebra(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

impl Error {
    /// Stable variant name used in machine-readable output.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::InvalidName(_) => "InvalidName",
            Error::InvalidPermutation(_) => "InvalidPermutation",
            Error::SplitOfLeaf => "SplitOfLeaf",
            Error::FaceOfLeaf => "FaceOfLeaf",
            Error::BidegreeOfLeaf => "BidegreeOfLeaf",
            Error::IndexOutOfRange { .. } => "IndexOutOfRange",
            Error::SlotOutOfRange { .. } => "SlotOutOfRange",
            Error::UndefinedOnUnit(_) => "UndefinedOnUnit",
            Error::Parse(_) => "ParseError",
            Error::UnknownFixture(_) => "UnknownFixture",
            Error::UnknownPreset(_) => "UnknownPreset",
            Error::TooLarge { .. } => "TooLarge",
            Error::AxiomFailure { .. } => "AxiomFailure",
            Error::UnsupportedTheoryForSource { .. } => "UnsupportedTheoryForSource",
            Error::IncompatibleAlgebras(_) => "IncompatibleAlgebras",
            Error::CaseDispatchFailure(_) => "CaseDispatchFailure",
            Error::MalformedAlgebra(_) => "MalformedAlgebra",
            Error::InvalidArgument(_) => "InvalidArgument",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
