use thiserror::Error;

/// Every domain error raised by the library.
///
/// `code()` gives a stable machine-readable identifier used by the CLI.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("d_out * d_in is nonzero")]
    CompositionNonzero,
    #[error("matrix dimensions do not match: {0}")]
    DimensionMismatch(String),
    #[error("entry ({row}, {col}) out of bounds for a {rows}x{cols} matrix")]
    OutOfBounds { row: usize, col: usize, rows: usize, cols: usize },
    #[error("duplicate matrix entry ({0}, {1})")]
    DuplicateEntry(usize, usize),
    #[error("integer overflow in {0}")]
    Overflow(&'static str),
    #[error("matrix is not homogeneous with respect to the supplied gradings")]
    NonHomogeneous,

    #[error("invalid complex: {0}")]
    InvalidComplex(String),

    #[error("hat homology is not a single F in Maslov grading 0")]
    NotCanceling,
    #[error("bigraded group is not symmetric under (m, a) -> (m - 2a, -a)")]
    NotSymmetric,
    #[error("d-value difference {0} is odd")]
    NonIntegral(i64),
    #[error("group is empty")]
    EmptyGroup,
    #[error("polynomial is not of staircase shape: {0}")]
    NotStaircaseShape(String),
    #[error("no thin complex realizes this polynomial: {0}")]
    NotRealizable(String),

    #[error("grid of size {size} exceeds the bound {bound}")]
    GridTooLarge { size: usize, bound: usize },
    #[error("not a knot: {0}")]
    NotAKnot(String),
    #[error("tilde homology does not factor through V^(n-1): {0}")]
    FactorizationFailure(String),
    #[error("invalid grid: {0}")]
    InvalidGrid(String),

    #[error("diagram has no basepoint")]
    NoBasepoint,
    #[error("diagram has {crossings} crossings, above the bound {bound}")]
    DiagramTooLarge { crossings: usize, bound: usize },
    #[error("diagram has no second basepoint")]
    NoSecondBasepoint,
    #[error("both basepoints lie on edge {0}")]
    DegenerateBasepoints(u32),
    #[error("diagrams do not form a skein triple: {0}")]
    NotASkeinTriple(String),
    #[error("invalid planar diagram: {0}")]
    InvalidDiagram(String),

    #[error("unknown knot {0:?}")]
    UnknownKnot(String),
    #[error("catalog fixture problem: {0}")]
    Catalog(String),

    #[error("unknown verify suite {0:?}")]
    UnknownSuite(String),

    #[error("io error: {0}")]
    Io(String),
    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    pub fn code(&self) -> &'static str {
        match self {
            Error::CompositionNonzero => "CompositionNonzero",
            Error::DimensionMismatch(_) => "DimensionMismatch",
            Error::OutOfBounds { .. } => "OutOfBounds",
            Error::DuplicateEntry(..) => "DuplicateEntry",
            Error::Overflow(_) => "Overflow",
            Error::NonHomogeneous => "NonHomogeneous",
            Error::InvalidComplex(_) => "InvalidComplex",
            Error::NotCanceling => "NotCanceling",
            Error::NotSymmetric => "NotSymmetric",
            Error::NonIntegral(_) => "NonIntegral",
            Error::EmptyGroup => "EmptyGroup",
            Error::NotStaircaseShape(_) => "NotStaircaseShape",
            Error::NotRealizable(_) => "NotRealizable",
            Error::GridTooLarge { .. } => "GridTooLarge",
            Error::NotAKnot(_) => "NotAKnot",
            Error::FactorizationFailure(_) => "FactorizationFailure",
            Error::InvalidGrid(_) => "InvalidGrid",
            Error::NoBasepoint => "NoBasepoint",
            Error::DiagramTooLarge { .. } => "DiagramTooLarge",
            Error::NoSecondBasepoint => "NoSecondBasepoint",
            Error::DegenerateBasepoints(_) => "DegenerateBasepoints",
            Error::NotASkeinTriple(_) => "NotASkeinTriple",
            Error::InvalidDiagram(_) => "InvalidDiagram",
            Error::UnknownKnot(_) => "UnknownKnot",
            Error::Catalog(_) => "Catalog",
            Error::UnknownSuite(_) => "UnknownSuite",
            Error::Io(_) => "IoError",
            Error::Parse(_) => "ParseError",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
