//! Conditional plausibility measures over finite world spaces, with the
//! machinery to treat them as Bayesian networks.
//!
//! The library models uncertainty as a map from pairs of events to a
//! partially ordered value domain. Five constructions share one trait:
//! probability (ratio conditioning), ranking functions (subtraction),
//! possibility measures (min- and division-conditioned), and sets of
//! probability measures conditioned member by member. Lower and upper
//! probability round out the collection as measures that deliberately
//! lack combination operators.
//!
//! On top of the measures sit exhaustive desk-scale checkers for the
//! conditioning axioms and the algebraic laws, definitions of plausibilistic
//! independence and noninteractivity with the semi-graphoid properties,
//! and Bayesian-network machinery: compatibility, network construction
//! from any variable ordering, chain-rule reconstruction, and
//! d-separation with a seeded search for dependence witnesses.
//!
//! Everything is exact: values are big rationals, extended naturals, or
//! finite functions of those, never floats.

pub mod algebras;
pub mod axioms;
pub mod domain;
pub mod error;
pub mod measure;
pub mod sampling;
pub mod world;

pub use axioms::{CheckOptions, CheckReport, CheckStatus, LawResult, SuiteReport, Witness};
pub use domain::{
    compare, format_rat, parse_rat, rat, AlgebraOps, DomainKind, PartialComparison, Rank, Rat,
    StarFn, Value,
};
pub use error::Error;
pub use measure::{CachedCpm, Cpm, MeasureClaims, PopperAlgebra};
pub use world::{Event, WorldSpace};
