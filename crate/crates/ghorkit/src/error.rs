use std::fmt;

/// Errors raised across the toolkit. Validation and certification failures
/// are report data, not errors; this type covers malformed input and
/// violated preconditions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// A surface with fewer than two side pairs is not modeled.
    UnsupportedSurface(usize),
    /// Syntax or reference error in an input file, with a 1-based line number.
    Parse { line: usize, msg: String },
    /// Two paths that do not compose head-to-tail.
    Composition { head: usize, tail: usize },
    /// Face data admits no rotation order at a vertex.
    Embedding { vertex: usize, msg: String },
    /// A named matching set does not occur among the enumerated matchings.
    Naming(String),
    /// An operation was called outside its stated precondition.
    Precondition(String),
    /// A path through an unsupported arrow cannot be inverted.
    NotLocallyInvertible(String),
    /// Two supported cycles with equal labels act by different scalars.
    WellDefinedness(String),
    /// No geodesic cycle with the requested homology class was found in bound.
    RepresentativeNotFound { vertex: usize, class: Vec<i64> },
    /// Bounded search for the homotopy-relation paths failed.
    BdSearch(String),
    Usage(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::UnsupportedSurface(n) => {
                write!(f, "unsupported surface: side pair count {n} is below 2")
            }
            Error::Parse { line, msg } => write!(f, "line {line}: {msg}"),
            Error::Composition { head, tail } => {
                write!(f, "paths do not compose: head {head} != tail {tail}")
            }
            Error::Embedding { vertex, msg } => {
                write!(f, "no consistent rotation at vertex {vertex}: {msg}")
            }
            Error::Naming(msg) => write!(f, "naming error: {msg}"),
            Error::Precondition(msg) => write!(f, "precondition violated: {msg}"),
            Error::NotLocallyInvertible(msg) => write!(f, "not locally invertible: {msg}"),
            Error::WellDefinedness(msg) => write!(f, "ill-defined module action: {msg}"),
            Error::RepresentativeNotFound { vertex, class } => {
                write!(f, "no geodesic representative at vertex {vertex} for class {class:?}")
            }
            Error::BdSearch(msg) => write!(f, "relation search failed: {msg}"),
            Error::Usage(msg) => write!(f, "usage error: {msg}"),
        }
    }
}

impl std::error::Error for Error {}

pub type Result<T> = std::result::Result<T, Error>;
