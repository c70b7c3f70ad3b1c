use thiserror::Error;

/// Errors raised by semigroup construction and the variety machinery.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("empty generator list")]
    EmptyGenerators,

    #[error("generators must be positive integers, got 0")]
    ZeroGenerator,

    #[error("generators have gcd {gcd}, a numerical semigroup needs gcd 1")]
    GcdNotOne { gcd: u64 },

    #[error("{0} is not an element of the semigroup")]
    NotMember(u64),

    #[error("{0} belongs to the semigroup but is not a minimal generator")]
    NotMinimalGenerator(u64),

    #[error("{0} already belongs to the semigroup")]
    AlreadyMember(u64),

    #[error("adjoining {element} does not give a semigroup ({witness} is missing)")]
    NotClosed { element: u64, witness: u64 },

    #[error("{what} is not contained in {container}")]
    NotContained { what: String, container: String },

    #[error("semigroups are equal, restricted Frobenius number is undefined")]
    Equal,

    #[error("integer overflow while computing {0}")]
    Overflow(&'static str),

    #[error("conductor bound {bound} exceeds the supported limit {limit}")]
    ConductorTooLarge { bound: u64, limit: u64 },

    #[error("{0} is not an element of the maximum of the variety")]
    NotInDelta(u64),

    #[error("no member of the variety contains the given set")]
    NoContainingElement,

    #[error("{0} is not a member of the variety")]
    NotInVariety(String),

    #[error("member enumeration does not terminate within genus bound {bound}")]
    InfiniteVariety { bound: u64 },

    #[error("the generated monoid has gcd {gcd} and is not a numerical semigroup")]
    NotCofinite { gcd: u64 },

    #[error("invalid variety descriptor: {0}")]
    InvalidDescriptor(String),

    #[error("{0} is not closed under the requested closure operation")]
    NotKindClosed(String),

    #[error("parse error at `{token}`: {reason}")]
    Parse { token: String, reason: String },

    #[error("internal invariant violated: {0}")]
    Invariant(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

impl Error {
    pub(crate) fn parse(token: impl Into<String>, reason: impl Into<String>) -> Self {
        Error::Parse {
            token: token.into(),
            reason: reason.into(),
        }
    }

    pub(crate) fn not_contained(what: impl ToString, container: impl ToString) -> Self {
        Error::NotContained {
            what: what.to_string(),
            container: container.to_string(),
        }
    }
}
