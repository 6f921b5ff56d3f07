use std::fmt;

/// Error type shared by every module in the crate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Input outside an operation's domain (e.g. greedy expansion of a
    /// rational outside (0,1), or a point outside a fractal's bounding box).
    Domain(String),
    /// A stated precondition was violated (e.g. disjoint-support addition on
    /// overlapping supports).
    Precondition(String),
    /// Malformed text. `position` is the byte offset of the offending input.
    Parse { position: usize, message: String },
    /// A guard against runaway work fired (cell-count limits, iteration caps).
    Resource(String),
    /// The requested value has no finite expansion in the requested base
    /// within the given length bound.
    NotFinitelyRepresentable(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Domain(msg) => write!(f, "domain error: {msg}"),
            Error::Precondition(msg) => write!(f, "precondition violated: {msg}"),
            Error::Parse { position, message } => {
                write!(f, "parse error at byte {position}: {message}")
            }
            Error::Resource(msg) => write!(f, "resource guard: {msg}"),
            Error::NotFinitelyRepresentable(msg) => {
                write!(f, "not finitely representable: {msg}")
            }
        }
    }
}

impl std::error::Error for Error {}

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
