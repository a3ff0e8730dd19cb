//! Exact neutrosophic probability.
//!
//! * [`nonstandard`]: rationals tagged with a monad (`a-`, `a`, `a+`);
//! * [`nsset`]: finite unions of closed pieces and their Minkowski arithmetic;
//! * [`probability`]: `(T, I, F)` triples, the event algebra and a classifier;
//! * [`worlds`]: possible-worlds truth valuation;
//! * [`dsl`]: a small language for declaring and querying triples;
//! * [`oracle`] and [`check`]: brute-force references and seeded self-checks.

pub mod check;
pub mod dsl;
pub mod error;
pub mod exec;
pub mod gen;
pub mod nonstandard;
pub mod nsset;
pub mod oracle;
pub mod probability;
pub mod worlds;

pub use error::{NsError, Result};
pub use exec::Execution;
pub use nonstandard::{bound_cmp, ratio, Bound, MonadTag, Rational, Role, TagCombination};
pub use nsset::{NsSet, Piece};
pub use probability::{classify, ClassificationReport, Flag, Label, NBounds, NpTriple};
pub use worlds::{nl_component, nl_nwff, nl_triple, NlTriple, NlValue, Valuation, WorldAssignment};
