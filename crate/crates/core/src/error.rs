use thiserror::Error;

use crate::nonstandard::{Bound, Rational};

pub type Result<T, E = NsError> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum NsError {
    /// Set division is only defined for strictly positive scalars.
    #[error("division by non-positive scalar {0}")]
    NonPositiveDivisor(Rational),
    #[error("value is undefined on the empty set")]
    EmptySet,
    #[error("piece lower end {lo} exceeds upper end {hi}")]
    InvertedPiece { lo: Box<Bound>, hi: Box<Bound> },
    #[error("triple component {0} must be non-empty")]
    EmptyComponent(&'static str),
    #[error("oracle input must be tag-free, found {0}")]
    TaggedOracleInput(Box<Bound>),
}
