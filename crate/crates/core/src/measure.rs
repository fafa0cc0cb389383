//! The conditional plausibility measure interface.
//!
//! A measure assigns every pair `(U, V)` with `V` in its conditionable
//! family a value `Pl(U | V)` in one value domain. The event family is
//! always the full powerset of the world space; the conditionable family
//! varies by construction.

use std::any::Any;
use std::cell::RefCell;
use std::collections::HashMap;

use crate::domain::{AlgebraOps, DomainKind, Value};
use crate::error::Error;
use crate::world::{Event, WorldSpace};

/// Which laws a construction guarantees. Checks report every law they
/// evaluate; these flags say which failures indicate a bug rather than a
/// documented limitation of the construction.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MeasureClaims {
    pub acceptable: bool,
    pub algebraic: bool,
    pub standard: bool,
    pub determined: bool,
    pub coherent: bool,
    pub monotonic: bool,
    /// Unrestricted cancellation, beyond the domain-restricted form.
    pub alg4_prime: bool,
}

/// A conditional plausibility measure over a finite world space.
pub trait Cpm {
    fn space(&self) -> &WorldSpace;

    /// Value domain of this measure.
    fn kind(&self) -> DomainKind;

    /// Short constructor name used in reports, e.g. `"probability"`.
    fn name(&self) -> &'static str;

    fn bottom(&self) -> Value;

    fn top(&self) -> Value;

    /// True when `v` is in the conditionable family.
    fn is_conditionable(&self, v: &Event) -> bool;

    /// `Pl(u | v)`. Fails with [`Error::ConditioningUndefined`] when `v`
    /// is not conditionable.
    fn cond(&self, u: &Event, v: &Event) -> Result<Value, Error>;

    /// The operator pair, for algebraic measures.
    fn algebra(&self) -> Option<AlgebraOps>;

    fn is_algebraic(&self) -> bool {
        self.algebra().is_some()
    }

    /// Combine plausibilities of disjoint events. `None` when the measure
    /// is not algebraic or the result would fall outside the domain.
    fn oplus(&self, a: &Value, b: &Value) -> Option<Value> {
        self.algebra().and_then(|ops| ops.oplus(a, b))
    }

    /// Chain two conditionals. `None` when the measure is not algebraic or
    /// the result would fall outside the domain.
    fn otimes(&self, a: &Value, b: &Value) -> Option<Value> {
        self.algebra().and_then(|ops| ops.otimes(a, b))
    }

    fn claims(&self) -> MeasureClaims;

    fn as_any(&self) -> &dyn Any;

    /// `Pl(u)`, conditioning on the full event, which every construction
    /// here keeps conditionable.
    fn unconditional(&self, u: &Event) -> Value {
        self.cond(u, &Event::full(self.space()))
            .expect("the full event is always conditionable")
    }

    /// `Pl(u | v)` as an option: `None` when `v` is not conditionable.
    fn cond_opt(&self, u: &Event, v: &Event) -> Option<Value> {
        match self.cond(u, v) {
            Ok(value) => Some(value),
            Err(Error::ConditioningUndefined) => None,
            Err(other) => panic!("unexpected conditioning failure: {other}"),
        }
    }
}

/// Reject events that come from a different world space than the measure.
pub(crate) fn guard_space(space: &WorldSpace, events: &[&Event]) -> Result<(), Error> {
    for e in events {
        if e.universe() != space.world_count() {
            return Err(Error::SpaceMismatch(e.universe(), space.world_count()));
        }
    }
    Ok(())
}

/// The event pair structure a measure conditions over: the full powerset
/// together with the measure's conditionable family.
pub struct PopperAlgebra<'a> {
    measure: &'a dyn Cpm,
}

impl<'a> PopperAlgebra<'a> {
    pub fn new(measure: &'a dyn Cpm) -> Self {
        PopperAlgebra { measure }
    }

    pub fn space(&self) -> &WorldSpace {
        self.measure.space()
    }

    /// Every subset of the world space is an event.
    pub fn contains(&self, u: &Event) -> bool {
        u.universe() == self.space().world_count()
    }

    pub fn is_conditionable(&self, v: &Event) -> bool {
        self.measure.is_conditionable(v)
    }
}

/// A measure wrapper that memoizes conditioning and conditionability.
///
/// Construction searches and independence sweeps ask for the same
/// conditionals many times over; wrapping the measure keeps those
/// evaluations linear in the number of distinct queries.
pub struct CachedCpm<'a> {
    inner: &'a dyn Cpm,
    cond_cache: RefCell<HashMap<(Event, Event), Option<Value>>>,
    family_cache: RefCell<HashMap<Event, bool>>,
}

impl<'a> CachedCpm<'a> {
    pub fn new(inner: &'a dyn Cpm) -> Self {
        CachedCpm {
            inner,
            cond_cache: RefCell::new(HashMap::new()),
            family_cache: RefCell::new(HashMap::new()),
        }
    }
}

impl Cpm for CachedCpm<'_> {
    fn space(&self) -> &WorldSpace {
        self.inner.space()
    }

    fn kind(&self) -> DomainKind {
        self.inner.kind()
    }

    fn name(&self) -> &'static str {
        self.inner.name()
    }

    fn bottom(&self) -> Value {
        self.inner.bottom()
    }

    fn top(&self) -> Value {
        self.inner.top()
    }

    fn is_conditionable(&self, v: &Event) -> bool {
        if let Some(&hit) = self.family_cache.borrow().get(v) {
            return hit;
        }
        let answer = self.inner.is_conditionable(v);
        self.family_cache.borrow_mut().insert(v.clone(), answer);
        answer
    }

    fn cond(&self, u: &Event, v: &Event) -> Result<Value, Error> {
        let key = (u.clone(), v.clone());
        if let Some(hit) = self.cond_cache.borrow().get(&key) {
            return hit.clone().ok_or(Error::ConditioningUndefined);
        }
        let answer = self.inner.cond(u, v);
        let memo = match &answer {
            Ok(value) => Some(value.clone()),
            Err(Error::ConditioningUndefined) => None,
            Err(_) => return answer,
        };
        self.cond_cache.borrow_mut().insert(key, memo);
        answer
    }

    fn algebra(&self) -> Option<AlgebraOps> {
        self.inner.algebra()
    }

    fn claims(&self) -> MeasureClaims {
        self.inner.claims()
    }

    fn as_any(&self) -> &dyn Any {
        self.inner.as_any()
    }
}
