//! Sets of probability measures, conditioned member by member.

use std::any::Any;

use num::Zero;

use crate::algebras::family::MeasureFamily;
use crate::domain::{AlgebraOps, DomainKind, StarFn, Value};
use crate::error::Error;
use crate::measure::{guard_space, Cpm, MeasureClaims};
use crate::world::{Event, WorldSpace};

/// A set of probability measures treated as one plausibility measure.
///
/// `cond(u, v)` records the conditional probability `u` gets from each
/// member that assigns `v` positive probability, with a placeholder for
/// members that do not. An event is conditionable when at least one
/// member can condition on it. Functions that are zero (or one) wherever
/// defined collapse to the shared bottom (or top) element.
#[derive(Debug, Clone)]
pub struct ProbSetCpm {
    family: MeasureFamily,
}

impl ProbSetCpm {
    pub fn new(family: MeasureFamily) -> Self {
        ProbSetCpm { family }
    }

    pub fn family(&self) -> &MeasureFamily {
        &self.family
    }

    fn entries(&self, u: &Event, v: &Event) -> Vec<Option<crate::domain::Rat>> {
        (0..self.family.len())
            .map(|i| self.family.member_cond(i, u, v))
            .collect()
    }
}

impl Cpm for ProbSetCpm {
    fn space(&self) -> &WorldSpace {
        self.family.space()
    }

    fn kind(&self) -> DomainKind {
        DomainKind::ProbSet
    }

    fn name(&self) -> &'static str {
        "probability-set"
    }

    fn bottom(&self) -> Value {
        Value::ProbSet(StarFn::Bottom)
    }

    fn top(&self) -> Value {
        Value::ProbSet(StarFn::Top)
    }

    fn is_conditionable(&self, v: &Event) -> bool {
        (0..self.family.len()).any(|i| !self.family.measure_of(i, v).is_zero())
    }

    fn cond(&self, u: &Event, v: &Event) -> Result<Value, Error> {
        guard_space(self.family.space(), &[u, v])?;
        match StarFn::collapse(self.entries(u, v)) {
            Some(f) => Ok(Value::ProbSet(f)),
            None => Err(Error::ConditioningUndefined),
        }
    }

    fn algebra(&self) -> Option<AlgebraOps> {
        Some(AlgebraOps::ProbSet)
    }

    fn claims(&self) -> MeasureClaims {
        MeasureClaims {
            acceptable: true,
            algebraic: true,
            standard: true,
            determined: true,
            coherent: true,
            monotonic: true,
            // Cancellation fails outside the conditional-pair domain: a
            // member that rules the condition out contributes a
            // placeholder, and multiplying by zero erases distinctions.
            alg4_prime: false,
        }
    }

    fn as_any(&self) -> &dyn Any {
        self
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::domain::{rat, Rat};

    /// Both members are sure of one outcome: either both coins land
    /// heads or both land tails. Heads is value 1, so with the low bit
    /// holding the first coin the all-heads world is 3 and the all-tails
    /// world is 0.
    fn double_coin() -> ProbSetCpm {
        let space = WorldSpace::new(2).unwrap();
        let heads = vec![rat(0, 1), rat(0, 1), rat(0, 1), rat(1, 1)];
        let tails = vec![rat(1, 1), rat(0, 1), rat(0, 1), rat(0, 1)];
        ProbSetCpm::new(MeasureFamily::new(space, vec![heads, tails]).unwrap())
    }

    fn two_coin_biases() -> ProbSetCpm {
        let space = WorldSpace::new(1).unwrap();
        let fair = vec![rat(1, 2), rat(1, 2)];
        let bent = vec![rat(1, 3), rat(2, 3)];
        ProbSetCpm::new(MeasureFamily::new(space, vec![fair, bent]).unwrap())
    }

    #[test]
    fn members_that_rule_out_the_condition_leave_placeholders() {
        let m = double_coin();
        let first_heads = m.space().variable_event(0, true);
        let second_heads = m.space().variable_event(1, true);
        // Only the all-heads member can condition on the second coin
        // landing heads, and it is then certain the first did too.
        assert_eq!(
            m.cond(&first_heads, &second_heads).unwrap(),
            Value::ProbSet(StarFn::Top)
        );
        let first_tails = m.space().variable_event(0, false);
        assert_eq!(
            m.cond(&first_tails, &second_heads).unwrap(),
            Value::ProbSet(StarFn::Bottom)
        );
    }

    #[test]
    fn disagreeing_members_stay_uncollapsed() {
        let m = double_coin();
        let first_heads = m.space().variable_event(0, true);
        assert_eq!(
            m.unconditional(&first_heads),
            Value::ProbSet(StarFn::Entries(vec![
                Some(rat(1, 1)),
                Some(rat(0, 1))
            ]))
        );

        let m = two_coin_biases();
        let heads = Event::singleton(m.space(), 1);
        assert_eq!(
            m.unconditional(&heads),
            Value::ProbSet(StarFn::Entries(vec![
                Some(rat(1, 2)),
                Some(rat(2, 3))
            ]))
        );
    }

    #[test]
    fn conditioning_needs_one_willing_member() {
        let m = double_coin();
        let mixed = Event::from_mask(m.space(), 0b0110);
        assert!(!m.is_conditionable(&mixed));
        assert_eq!(
            m.cond(&Event::full(m.space()), &mixed),
            Err(Error::ConditioningUndefined)
        );
    }

    #[test]
    fn certain_and_impossible_events_collapse() {
        let m = two_coin_biases();
        let w = Event::full(m.space());
        assert_eq!(m.unconditional(&w), m.top());
        assert_eq!(
            m.unconditional(&Event::empty(m.space())),
            m.bottom()
        );
    }

    #[test]
    fn conditionals_agree_with_per_member_evaluation() {
        let space = WorldSpace::new(2).unwrap();
        let members = vec![
            vec![rat(1, 2), rat(1, 4), rat(1, 8), rat(1, 8)],
            vec![rat(0, 1), rat(1, 3), rat(1, 3), rat(1, 3)],
            vec![rat(1, 1), rat(0, 1), rat(0, 1), rat(0, 1)],
        ];
        let weight_of = |m: &[Rat], mask: u64| -> Rat {
            (0..4)
                .filter(|w| mask >> w & 1 == 1)
                .map(|w| m[w].clone())
                .sum()
        };
        let cpm = ProbSetCpm::new(MeasureFamily::new(space, members.clone()).unwrap());
        for v_mask in 0..16u64 {
            for u_mask in 0..16u64 {
                let u = Event::from_mask(&space, u_mask);
                let v = Event::from_mask(&space, v_mask);
                let raw: Vec<Option<Rat>> = members
                    .iter()
                    .map(|m| {
                        let pv = weight_of(m, v_mask);
                        if pv.is_zero() {
                            None
                        } else {
                            Some(weight_of(m, u_mask & v_mask) / pv)
                        }
                    })
                    .collect();
                let got = cpm.cond_opt(&u, &v);
                if raw.iter().all(Option::is_none) {
                    assert_eq!(got, None);
                    continue;
                }
                let got = match got.unwrap() {
                    Value::ProbSet(f) => f,
                    other => panic!("unexpected value {other}"),
                };
                match got {
                    StarFn::Bottom => {
                        assert!(raw
                            .iter()
                            .flatten()
                            .all(|r| r.is_zero()))
                    }
                    StarFn::Top => {
                        assert!(raw
                            .iter()
                            .flatten()
                            .all(|r| *r == rat(1, 1)))
                    }
                    StarFn::Entries(entries) => assert_eq!(entries, raw),
                }
            }
        }
    }
}
