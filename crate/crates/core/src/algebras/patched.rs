//! Point overrides on top of another measure, for building deliberately
//! broken inputs to feed the law checkers.

use std::any::Any;
use std::collections::HashMap;

use crate::domain::{AlgebraOps, DomainKind, Value};
use crate::error::Error;
use crate::measure::{Cpm, MeasureClaims};
use crate::world::{Event, WorldSpace};

/// A measure with finitely many conditional values replaced by hand.
///
/// The conditionable family, operators, and claims all come from the
/// underlying measure; only the listed `(u, v)` queries answer
/// differently. Overriding a query whose condition the underlying
/// measure rejects has no effect: the query stays undefined.
pub struct PatchedCpm {
    inner: Box<dyn Cpm>,
    patches: HashMap<(Event, Event), Value>,
}

impl PatchedCpm {
    pub fn new(
        inner: Box<dyn Cpm>,
        patches: Vec<((Event, Event), Value)>,
    ) -> Result<Self, Error> {
        let mut table = HashMap::new();
        for ((u, v), value) in patches {
            if u.universe() != inner.space().world_count()
                || v.universe() != inner.space().world_count()
            {
                return Err(Error::SpaceMismatch(
                    u.universe().max(v.universe()),
                    inner.space().world_count(),
                ));
            }
            if value.kind() != inner.kind() {
                return Err(Error::DomainMismatch(inner.kind(), value.kind()));
            }
            table.insert((u, v), value);
        }
        Ok(PatchedCpm {
            inner,
            patches: table,
        })
    }

    pub fn patch_count(&self) -> usize {
        self.patches.len()
    }
}

impl Cpm for PatchedCpm {
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
        self.inner.is_conditionable(v)
    }

    fn cond(&self, u: &Event, v: &Event) -> Result<Value, Error> {
        let base = self.inner.cond(u, v)?;
        Ok(self
            .patches
            .get(&(u.clone(), v.clone()))
            .cloned()
            .unwrap_or(base))
    }

    fn algebra(&self) -> Option<AlgebraOps> {
        self.inner.algebra()
    }

    fn claims(&self) -> MeasureClaims {
        self.inner.claims()
    }

    fn as_any(&self) -> &dyn Any {
        self
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebras::probability::ProbabilityCpm;
    use crate::domain::rat;

    fn uniform() -> Box<dyn Cpm> {
        let space = WorldSpace::new(2).unwrap();
        Box::new(ProbabilityCpm::new(space, vec![rat(1, 4); 4]).unwrap())
    }

    #[test]
    fn overridden_queries_answer_with_the_patch() {
        let inner = uniform();
        let space = *inner.space();
        let empty = Event::empty(&space);
        let full = Event::full(&space);
        let m = PatchedCpm::new(
            inner,
            vec![(
                (empty.clone(), full.clone()),
                Value::Probability(rat(1, 1)),
            )],
        )
        .unwrap();
        assert_eq!(m.cond(&empty, &full).unwrap(), m.top());
        // Everything else still behaves like the uniform measure.
        let half = space.variable_event(0, true);
        assert_eq!(
            m.cond(&half, &full).unwrap(),
            Value::Probability(rat(1, 2))
        );
        assert_eq!(m.claims(), uniform().claims());
    }

    #[test]
    fn patches_cannot_extend_the_conditionable_family() {
        let space = WorldSpace::new(2).unwrap();
        let inner = Box::new(
            ProbabilityCpm::new(
                space,
                vec![rat(1, 2), rat(1, 2), rat(0, 1), rat(0, 1)],
            )
            .unwrap(),
        );
        let dead = Event::singleton(&space, 3);
        let m = PatchedCpm::new(
            inner,
            vec![(
                (dead.clone(), dead.clone()),
                Value::Probability(rat(1, 1)),
            )],
        )
        .unwrap();
        assert_eq!(m.cond(&dead, &dead), Err(Error::ConditioningUndefined));
    }

    #[test]
    fn patch_values_must_share_the_measure_domain() {
        let space = WorldSpace::new(2).unwrap();
        let full = Event::full(&space);
        let err = PatchedCpm::new(
            uniform(),
            vec![((full.clone(), full), Value::Rank(crate::domain::Rank::Finite(0)))],
        );
        assert_eq!(
            err.err(),
            Some(Error::DomainMismatch(
                DomainKind::Probability,
                DomainKind::Rank
            ))
        );
    }
}
