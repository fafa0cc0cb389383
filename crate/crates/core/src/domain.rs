//! Plausibility value domains.
//!
//! Every value is tagged with the domain it lives in; comparing values from
//! different domains is a usage error, not `Incomparable`. The domains:
//!
//! * probability scale: rationals in `[0,1]`, totally ordered (also used by
//!   lower and upper probability, which measure on the same scale),
//! * ranks: naturals plus infinity, ordered in reverse (rank 0 is the top,
//!   infinity the bottom),
//! * possibility scale: rationals in `[0,1]`, totally ordered,
//! * star functions: per-measure entries in `[0,1]` or `*` (undefined),
//!   partially ordered pointwise, with the all-zero and all-one classes
//!   collapsed to sentinels,
//! * intervals: `[lower, upper]` pairs ordered by `upper <= lower'`.

use num::{BigInt, BigRational, One, Signed, Zero};

use crate::error::Error;

/// Exact rational scalar used throughout.
pub type Rat = BigRational;

/// Shorthand for a rational from small integers. Panics if `q == 0`.
pub fn rat(p: i64, q: i64) -> Rat {
    Rat::new(BigInt::from(p), BigInt::from(q))
}

/// Outcome of comparing two values in a partially ordered domain.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PartialComparison {
    LessThan,
    Equal,
    GreaterThan,
    Incomparable,
}

impl PartialComparison {
    /// True for `LessThan` or `Equal`.
    pub fn is_le(self) -> bool {
        matches!(self, PartialComparison::LessThan | PartialComparison::Equal)
    }

    pub fn flip(self) -> PartialComparison {
        match self {
            PartialComparison::LessThan => PartialComparison::GreaterThan,
            PartialComparison::GreaterThan => PartialComparison::LessThan,
            other => other,
        }
    }
}

/// Which value domain a [`Value`] belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum DomainKind {
    Probability,
    Rank,
    Possibility,
    ProbSet,
    Interval,
}

impl std::fmt::Display for DomainKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let name = match self {
            DomainKind::Probability => "probability",
            DomainKind::Rank => "rank",
            DomainKind::Possibility => "possibility",
            DomainKind::ProbSet => "probability-set",
            DomainKind::Interval => "interval",
        };
        f.write_str(name)
    }
}

/// A rank: a natural number or infinity.
///
/// `Ord` here is numeric; the plausibility order on ranks is the reverse
/// (smaller ranks are more plausible), which [`compare`] implements.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Rank {
    Finite(u64),
    Infinite,
}

impl Rank {
    pub fn is_finite(self) -> bool {
        matches!(self, Rank::Finite(_))
    }

    pub fn finite(&self) -> Option<u64> {
        match self {
            Rank::Finite(v) => Some(*v),
            Rank::Infinite => None,
        }
    }

    /// Saturating addition; infinity absorbs.
    pub fn plus(self, other: Rank) -> Rank {
        match (self, other) {
            (Rank::Finite(a), Rank::Finite(b)) => Rank::Finite(a.saturating_add(b)),
            _ => Rank::Infinite,
        }
    }

    /// Difference `self - other` for finite `other <= self`; infinity stays.
    pub fn minus(self, other: u64) -> Rank {
        match self {
            Rank::Finite(a) => Rank::Finite(a - other),
            Rank::Infinite => Rank::Infinite,
        }
    }

    pub fn parse(s: &str) -> Result<Rank, Error> {
        if s == "inf" {
            Ok(Rank::Infinite)
        } else {
            s.parse::<u64>()
                .map(Rank::Finite)
                .map_err(|_| Error::ParseValue(format!("bad rank: {s:?}")))
        }
    }
}

impl std::fmt::Display for Rank {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Rank::Finite(k) => write!(f, "{k}"),
            Rank::Infinite => f.write_str("inf"),
        }
    }
}

/// A star function over a fixed family of probability measures.
///
/// Entries are `Some(value)` or `None` for `*`. At least one entry is
/// defined. Functions that are zero wherever defined collapse to `Bottom`,
/// and functions that are one wherever defined collapse to `Top`; equality
/// is syntactic on this collapsed form.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum StarFn {
    Bottom,
    Top,
    Entries(Vec<Option<Rat>>),
}

impl StarFn {
    /// Canonicalize raw entries. Returns `None` when every entry is `*`,
    /// which is not a domain element.
    pub fn collapse(entries: Vec<Option<Rat>>) -> Option<StarFn> {
        let defined: Vec<&Rat> = entries.iter().flatten().collect();
        if defined.is_empty() {
            return None;
        }
        if defined.iter().all(|r| r.is_zero()) {
            Some(StarFn::Bottom)
        } else if defined.iter().all(|r| r.is_one()) {
            Some(StarFn::Top)
        } else {
            Some(StarFn::Entries(entries))
        }
    }

    fn le(&self, other: &StarFn) -> bool {
        match (self, other) {
            (StarFn::Bottom, _) | (_, StarFn::Top) => true,
            (StarFn::Entries(f), StarFn::Entries(g)) => {
                f.len() == g.len()
                    && f.iter().zip(g).all(|(a, b)| match (a, b) {
                        (None, None) => true,
                        (Some(x), Some(y)) => x <= y,
                        _ => false,
                    })
            }
            _ => false,
        }
    }
}

impl std::fmt::Display for StarFn {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            StarFn::Bottom => f.write_str("bottom"),
            StarFn::Top => f.write_str("top"),
            StarFn::Entries(es) => {
                write!(f, "(")?;
                for (i, e) in es.iter().enumerate() {
                    if i > 0 {
                        write!(f, ", ")?;
                    }
                    match e {
                        Some(r) => write!(f, "{}", format_rat(r))?,
                        None => write!(f, "*")?,
                    }
                }
                write!(f, ")")
            }
        }
    }
}

/// A tagged plausibility value.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Value {
    Probability(Rat),
    Rank(Rank),
    Possibility(Rat),
    ProbSet(StarFn),
    Interval(Rat, Rat),
}

impl Value {
    pub fn kind(&self) -> DomainKind {
        match self {
            Value::Probability(_) => DomainKind::Probability,
            Value::Rank(_) => DomainKind::Rank,
            Value::Possibility(_) => DomainKind::Possibility,
            Value::ProbSet(_) => DomainKind::ProbSet,
            Value::Interval(..) => DomainKind::Interval,
        }
    }
}

impl std::fmt::Display for Value {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Value::Probability(r) | Value::Possibility(r) => f.write_str(&format_rat(r)),
            Value::Rank(k) => write!(f, "{k}"),
            Value::ProbSet(s) => write!(f, "{s}"),
            Value::Interval(a, b) => write!(f, "[{}, {}]", format_rat(a), format_rat(b)),
        }
    }
}

/// Compare two values of the same domain; mixing domains is rejected.
pub fn compare(a: &Value, b: &Value) -> Result<PartialComparison, Error> {
    use PartialComparison::*;
    match (a, b) {
        (Value::Probability(x), Value::Probability(y))
        | (Value::Possibility(x), Value::Possibility(y)) => Ok(total(x, y)),
        (Value::Rank(x), Value::Rank(y)) => Ok(total(y, x)),
        (Value::ProbSet(f), Value::ProbSet(g)) => {
            if let (StarFn::Entries(fe), StarFn::Entries(ge)) = (f, g) {
                if fe.len() != ge.len() {
                    return Err(Error::InvalidMeasure(
                        "cannot compare star functions over different measure families".into(),
                    ));
                }
            }
            Ok(if f == g {
                Equal
            } else if f.le(g) {
                LessThan
            } else if g.le(f) {
                GreaterThan
            } else {
                Incomparable
            })
        }
        (Value::Interval(a0, a1), Value::Interval(b0, b1)) => Ok(if (a0, a1) == (b0, b1) {
            Equal
        } else if a1 <= b0 {
            LessThan
        } else if b1 <= a0 {
            GreaterThan
        } else {
            Incomparable
        }),
        _ => Err(Error::DomainMismatch(a.kind(), b.kind())),
    }
}

/// `a <= b` in the domain order; mixing domains is rejected.
pub fn leq(a: &Value, b: &Value) -> Result<bool, Error> {
    Ok(compare(a, b)?.is_le())
}

fn total<T: Ord>(x: &T, y: &T) -> PartialComparison {
    match x.cmp(y) {
        std::cmp::Ordering::Less => PartialComparison::LessThan,
        std::cmp::Ordering::Equal => PartialComparison::Equal,
        std::cmp::Ordering::Greater => PartialComparison::GreaterThan,
    }
}

/// The operator pair of one algebra, independent of any measure instance.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum AlgebraOps {
    Probability,
    Ranking,
    PossibilityMin,
    PossibilityDiv,
    ProbSet,
}

impl AlgebraOps {
    pub fn domain_kind(self) -> DomainKind {
        match self {
            AlgebraOps::Probability => DomainKind::Probability,
            AlgebraOps::Ranking => DomainKind::Rank,
            AlgebraOps::PossibilityMin | AlgebraOps::PossibilityDiv => DomainKind::Possibility,
            AlgebraOps::ProbSet => DomainKind::ProbSet,
        }
    }

    pub fn bottom(self) -> Value {
        match self {
            AlgebraOps::Probability => Value::Probability(Rat::zero()),
            AlgebraOps::Ranking => Value::Rank(Rank::Infinite),
            AlgebraOps::PossibilityMin | AlgebraOps::PossibilityDiv => {
                Value::Possibility(Rat::zero())
            }
            AlgebraOps::ProbSet => Value::ProbSet(StarFn::Bottom),
        }
    }

    pub fn top(self) -> Value {
        match self {
            AlgebraOps::Probability => Value::Probability(Rat::one()),
            AlgebraOps::Ranking => Value::Rank(Rank::Finite(0)),
            AlgebraOps::PossibilityMin | AlgebraOps::PossibilityDiv => {
                Value::Possibility(Rat::one())
            }
            AlgebraOps::ProbSet => Value::ProbSet(StarFn::Top),
        }
    }

    /// Combine plausibilities of disjoint events. `None` only when the
    /// result falls outside the domain, which cannot happen on in-domain
    /// argument pairs.
    pub fn oplus(self, a: &Value, b: &Value) -> Option<Value> {
        match (self, a, b) {
            (AlgebraOps::Probability, Value::Probability(x), Value::Probability(y)) => {
                Some(Value::Probability((x + y).min(Rat::one())))
            }
            (AlgebraOps::Ranking, Value::Rank(x), Value::Rank(y)) => {
                Some(Value::Rank(*x.min(y)))
            }
            (
                AlgebraOps::PossibilityMin | AlgebraOps::PossibilityDiv,
                Value::Possibility(x),
                Value::Possibility(y),
            ) => Some(Value::Possibility(x.max(y).clone())),
            (AlgebraOps::ProbSet, Value::ProbSet(f), Value::ProbSet(g)) => {
                star_oplus(f, g).map(Value::ProbSet)
            }
            _ => panic!(
                "operator {:?} applied to {} and {} values",
                self,
                a.kind(),
                b.kind()
            ),
        }
    }

    /// Chain two conditionals. `None` only when the result falls outside
    /// the domain, which cannot happen on in-domain argument pairs.
    pub fn otimes(self, a: &Value, b: &Value) -> Option<Value> {
        match (self, a, b) {
            (AlgebraOps::Probability, Value::Probability(x), Value::Probability(y)) => {
                Some(Value::Probability(x * y))
            }
            (AlgebraOps::Ranking, Value::Rank(x), Value::Rank(y)) => {
                Some(Value::Rank(x.plus(*y)))
            }
            (AlgebraOps::PossibilityMin, Value::Possibility(x), Value::Possibility(y)) => {
                Some(Value::Possibility(x.min(y).clone()))
            }
            (AlgebraOps::PossibilityDiv, Value::Possibility(x), Value::Possibility(y)) => {
                Some(Value::Possibility(x * y))
            }
            (AlgebraOps::ProbSet, Value::ProbSet(f), Value::ProbSet(g)) => {
                star_otimes(f, g).map(Value::ProbSet)
            }
            _ => panic!(
                "operator {:?} applied to {} and {} values",
                self,
                a.kind(),
                b.kind()
            ),
        }
    }
}

/// Disjoint-union operator on star functions: the bottom sentinel is the
/// identity, the top sentinel absorbs, and otherwise entries add pointwise
/// (capped at one) with `*` absorbing per entry.
fn star_oplus(f: &StarFn, g: &StarFn) -> Option<StarFn> {
    match (f, g) {
        (StarFn::Bottom, x) | (x, StarFn::Bottom) => Some(x.clone()),
        (StarFn::Top, _) | (_, StarFn::Top) => Some(StarFn::Top),
        (StarFn::Entries(fe), StarFn::Entries(ge)) => {
            if fe.len() != ge.len() {
                return None;
            }
            let entries = fe
                .iter()
                .zip(ge)
                .map(|(a, b)| match (a, b) {
                    (Some(x), Some(y)) => Some((x + y).min(Rat::one())),
                    _ => None,
                })
                .collect();
            StarFn::collapse(entries)
        }
    }
}

/// Chaining operator on star functions: the bottom sentinel absorbs, the
/// top sentinel is the identity, and otherwise entries multiply pointwise.
/// A defined zero entry wins over `*` (the product of a conditional with a
/// zero-plausibility condition is zero whether or not the conditional is
/// defined); any other pairing with `*` is `*`.
fn star_otimes(f: &StarFn, g: &StarFn) -> Option<StarFn> {
    match (f, g) {
        (StarFn::Bottom, _) | (_, StarFn::Bottom) => Some(StarFn::Bottom),
        (StarFn::Top, x) | (x, StarFn::Top) => Some(x.clone()),
        (StarFn::Entries(fe), StarFn::Entries(ge)) => {
            if fe.len() != ge.len() {
                return None;
            }
            let entries = fe
                .iter()
                .zip(ge)
                .map(|(a, b)| match (a, b) {
                    (Some(x), Some(y)) => Some(x * y),
                    (None, Some(y)) if y.is_zero() => Some(Rat::zero()),
                    (Some(x), None) if x.is_zero() => Some(Rat::zero()),
                    _ => None,
                })
                .collect();
            StarFn::collapse(entries)
        }
    }
}

/// Parse `"p/q"` or `"p"` into a rational.
pub fn parse_rat(s: &str) -> Result<Rat, Error> {
    let bad = || Error::ParseValue(format!("bad rational: {s:?}"));
    let s = s.trim();
    let (p, q) = match s.split_once('/') {
        Some((p, q)) => (p, q),
        None => (s, "1"),
    };
    let p: BigInt = p.trim().parse().map_err(|_| bad())?;
    let q: BigInt = q.trim().parse().map_err(|_| bad())?;
    if q.is_zero() {
        return Err(bad());
    }
    Ok(Rat::new(p, q))
}

/// Render a rational as `"p/q"`, or just `"p"` for integers.
pub fn format_rat(r: &Rat) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// True when `r` lies in `[0, 1]`.
pub fn in_unit_range(r: &Rat) -> bool {
    !r.is_negative() && *r <= Rat::one()
}
