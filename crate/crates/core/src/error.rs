use std::path::PathBuf;

use crate::hurwitz::ClassSignature;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("division by zero in cyclotomic arithmetic")]
    DivisionByZero,

    #[error("matrix is singular")]
    SingularMatrix,

    #[error("cannot parse `{input}`: {reason}")]
    Parse { input: String, reason: String },

    #[error("group closure exceeded the cap of {cap} elements")]
    ClosureCapExceeded { cap: usize },

    #[error("element of order {order} does not divide 12; regularity search is restricted to 12th roots of unity")]
    UnsupportedOrder { order: u32 },

    #[error("reflection of determinant {det} has no class label (expected zeta, zeta^2 or -1)")]
    UnlabelledReflection { det: String },

    #[error("group has {count} reflections, at most 16 fit in a packed factorization")]
    TooManyReflections { count: usize },

    #[error("move position {position} out of range for a factorization of length {len}")]
    MoveOutOfRange { position: usize, len: usize },

    #[error("factorization length {len} exceeds the cap of {cap}")]
    LengthCap { len: usize, cap: usize },

    #[error("orbit exceeded the state cap of {cap} factorizations")]
    StateCapExceeded { cap: usize },

    #[error("signature {sig} is inadmissible for the Coxeter element: need k odd and n + 2m = 1 (mod 3)")]
    InadmissibleSignature { sig: ClassSignature },

    #[error("factorization multiplies to element {actual}, expected {expected}")]
    ProductMismatch { expected: u32, actual: u32 },

    #[error("token `{token}` at position {position} is not a reflection")]
    NotAReflection { token: String, position: usize },

    #[error("token `{token}` at position {position}: {reason}")]
    BadToken {
        token: String,
        position: usize,
        reason: String,
    },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("verification failure: {0}")]
    Verification(String),

    #[error("cache I/O error at {path}: {source}")]
    Cache {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("invalid configuration: {0}")]
    Config(String),
}

impl Error {
    pub(crate) fn parse(input: impl Into<String>, reason: impl Into<String>) -> Self {
        Error::Parse {
            input: input.into(),
            reason: reason.into(),
        }
    }

    pub(crate) fn cache(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        Error::Cache {
            path: path.into(),
            source,
        }
    }
}
