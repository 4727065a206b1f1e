use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Broad category of a failure, used to pick the process exit code.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ErrorKind {
    /// Malformed input: bad lengths, orderings, windows.
    Validation,
    /// Well-formed input that the mathematics refuses (a hypothesis fails,
    /// a table does not decompose, an unsupported combination).
    Refusal,
    /// A proven identity failed to hold. Always a bug.
    InvariantBreach,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("length mismatch in {what}: expected {expected}, found {found}")]
    LengthMismatch {
        what: &'static str,
        expected: usize,
        found: usize,
    },
    #[error("{what} must be weakly decreasing: {parts:?}")]
    NotWeaklyDecreasing { what: &'static str, parts: Vec<i64> },
    #[error("{what} must be strictly {order}: {parts:?}")]
    NotStrictlyMonotone {
        what: &'static str,
        order: &'static str,
        parts: Vec<i64>,
    },
    #[error("ambient dimension mismatch: P^{left} vs P^{right}")]
    AmbientMismatch { left: usize, right: usize },
    #[error("{what} out of range: {detail}")]
    OutOfRange { what: &'static str, detail: String },
    #[error("invalid {field}: {detail}")]
    Invalid { field: &'static str, detail: String },
    #[error("window mismatch: [{a0},{a1}] vs [{b0},{b1}]")]
    WindowMismatch { a0: i64, a1: i64, b0: i64, b1: i64 },
    #[error("not a lattice class: {0}")]
    NotLatticeClass(String),
    #[error("not a basis: the {0} classes are linearly dependent")]
    NotABasis(&'static str),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("hypothesis violated: {0}")]
    Hypothesis(String),
    #[error("not w_0-regular: nonzero higher cohomology at (i={degree}, q={index})")]
    NotRegular { degree: usize, index: usize },
    #[error("not decomposable on this window: {0}")]
    NotDecomposable(String),
    #[error("internal invariant breach: {0}")]
    InvariantBreach(String),
}

impl Error {
    pub fn kind(&self) -> ErrorKind {
        match self {
            Error::LengthMismatch { .. }
            | Error::NotWeaklyDecreasing { .. }
            | Error::NotStrictlyMonotone { .. }
            | Error::AmbientMismatch { .. }
            | Error::OutOfRange { .. }
            | Error::Invalid { .. }
            | Error::WindowMismatch { .. } => ErrorKind::Validation,
            Error::NotLatticeClass(_)
            | Error::NotABasis(_)
            | Error::Unsupported(_)
            | Error::Hypothesis(_)
            | Error::NotRegular { .. }
            | Error::NotDecomposable(_) => ErrorKind::Refusal,
            Error::InvariantBreach(_) => ErrorKind::InvariantBreach,
        }
    }

    pub(crate) fn breach(msg: impl Into<String>) -> Self {
        Error::InvariantBreach(msg.into())
    }
}
