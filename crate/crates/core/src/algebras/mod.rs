//! The concrete measure constructions: probability, ranking functions,
//! possibility under two conditionings, sets of probabilities, and the
//! non-algebraic probability bounds.

pub mod bounds;
pub mod family;
pub mod patched;
pub mod possibility;
pub mod probability;
pub mod probset;
pub mod ranking;

pub use bounds::{interval_value, BoundVariant, LowerProbabilityCpm, UpperProbabilityCpm};
pub use family::MeasureFamily;
pub use patched::PatchedCpm;
pub use possibility::{PossConditioning, PossibilityCpm};
pub use probability::ProbabilityCpm;
pub use probset::ProbSetCpm;
pub use ranking::RankingCpm;
