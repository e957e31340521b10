use thiserror::Error;

use crate::element::Element;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("cutoff set is empty")]
    EmptyFamily,

    #[error("not ω-closed: cutoff {missing} is missing between {below} and {above}")]
    NotOmegaClosed {
        below: u64,
        missing: u64,
        above: u64,
    },

    #[error("malformed subset description: member {member} lies at or beyond horizon {horizon} with the tail excluded")]
    MalformedSubset { member: u64, horizon: u64 },

    #[error("family upper bound {hi} is below its lower bound {lo}")]
    InvertedInterval { lo: u64, hi: u64 },

    #[error("cutoff [{cutoff}) is not a member of family {family}")]
    CutoffNotInFamily { cutoff: u64, family: String },

    #[error("{0} is not an idempotent")]
    NotIdempotent(Element),

    #[error("coordinate overflow while multiplying {0} by {1}")]
    Overflow(Element, Element),

    #[error("coordinate {0} exceeds the supported range")]
    CoordinateOutOfRange(u64),

    #[error("family {0} is not canonical (its least cutoff must be 0)")]
    NotCanonical(String),

    #[error("ball needs N >= 2 (got N = {0})")]
    BallTooSmall(u64),

    #[error("ball slice is empty: no cutoff of {family} is <= {cutoff_bound}")]
    EmptyBall { family: String, cutoff_bound: u64 },

    #[error("inner radius {inner} exceeds N - 2 = {max}")]
    InnerRadiusTooLarge { inner: u64, max: u64 },

    #[error("{0} lies outside the ball")]
    OutsideBall(Element),

    #[error("domain escape: the map is undefined on {0}")]
    DomainEscape(String),

    #[error("map kind {0} does not send the semigroup to itself")]
    NotSelfMap(&'static str),

    #[error("families {0} and {1} are not isomorphic")]
    NotIsomorphic(String, String),

    #[error(
        "refutation needs k >= 1 with [k-1), [k), [k+1) in the family (k = {k}, family {family})"
    )]
    RefutationPrecondition { k: u64, family: String },

    #[error("isomorphism criteria disagree for {0} and {1}")]
    CriteriaDisagree(String, String),

    #[error("parse error at column {column}: {message}")]
    Parse { column: usize, message: String },
}

pub type Result<T> = std::result::Result<T, Error>;
