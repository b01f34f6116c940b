use thiserror::Error;

use crate::dsl::ParseError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("add not a group: {0}")]
    NotAGroup(String),
    #[error("index {index} out of range for ring of order {order}")]
    IndexOutOfRange { index: usize, order: usize },
    #[error("rings of order 1 are not supported (one = zero)")]
    TrivialRing,
    #[error("{what}: order {order} exceeds the configured cap {cap}")]
    TooLarge {
        what: &'static str,
        order: usize,
        cap: usize,
    },
    #[error("ring mismatch: element belongs to a different ring")]
    RingMismatch,
    #[error("{0} is not idempotent")]
    NotIdempotent(String),
    #[error("the idempotent must be nonzero")]
    ZeroIdempotent,
    #[error("{0} is not central")]
    NotCentral(String),
    #[error("{0} is not invertible")]
    NotInvertible(String),
    #[error("not a ring homomorphism: {0}")]
    NotHomomorphism(String),
    #[error("no identity: {0}")]
    NoIdentity(String),
    #[error("not associative on basis triple ({0}, {1}, {2})")]
    NotAssociative(usize, usize, usize),
    #[error("improper ideal: the quotient would be the zero ring")]
    ImproperIdeal,
    #[error("direct product of an empty list")]
    EmptyProduct,
    #[error("subring is not commutative")]
    NotCommutative,
    #[error("unknown element literal `{0}`")]
    UnknownElement(String),
    #[error("unknown property `{0}`")]
    UnknownProperty(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("{file}:{line}: {message}")]
    Manifest { file: String, line: usize, message: String },
}

impl Error {
    /// Size-guard failures are reported separately from ordinary errors.
    pub fn is_size_guard(&self) -> bool {
        matches!(self, Error::TooLarge { .. })
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
