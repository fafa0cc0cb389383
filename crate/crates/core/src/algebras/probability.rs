//! Probability measures with ratio conditioning.

use std::any::Any;

use num::Zero;

use crate::algebras::family::validate_weights;
use crate::domain::{AlgebraOps, DomainKind, Rat, Value};
use crate::error::Error;
use crate::measure::{guard_space, Cpm, MeasureClaims};
use crate::world::{Event, WorldSpace};

/// A probability measure. An event is conditionable when its probability
/// is positive, and `Pl(u | v) = mu(u and v) / mu(v)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProbabilityCpm {
    space: WorldSpace,
    weights: Vec<Rat>,
}

impl ProbabilityCpm {
    pub fn new(space: WorldSpace, weights: Vec<Rat>) -> Result<Self, Error> {
        validate_weights(&space, &weights).map_err(Error::InvalidMeasure)?;
        Ok(ProbabilityCpm { space, weights })
    }

    pub fn weights(&self) -> &[Rat] {
        &self.weights
    }

    /// `mu(e)`.
    pub fn measure_of(&self, e: &Event) -> Rat {
        e.iter().map(|w| &self.weights[w]).sum()
    }
}

impl Cpm for ProbabilityCpm {
    fn space(&self) -> &WorldSpace {
        &self.space
    }

    fn kind(&self) -> DomainKind {
        DomainKind::Probability
    }

    fn name(&self) -> &'static str {
        "probability"
    }

    fn bottom(&self) -> Value {
        AlgebraOps::Probability.bottom()
    }

    fn top(&self) -> Value {
        AlgebraOps::Probability.top()
    }

    fn is_conditionable(&self, v: &Event) -> bool {
        !self.measure_of(v).is_zero()
    }

    fn cond(&self, u: &Event, v: &Event) -> Result<Value, Error> {
        guard_space(&self.space, &[u, v])?;
        let pv = self.measure_of(v);
        if pv.is_zero() {
            return Err(Error::ConditioningUndefined);
        }
        Ok(Value::Probability(
            self.measure_of(&u.intersection(v)) / pv,
        ))
    }

    fn algebra(&self) -> Option<AlgebraOps> {
        Some(AlgebraOps::Probability)
    }

    fn claims(&self) -> MeasureClaims {
        MeasureClaims {
            acceptable: true,
            algebraic: true,
            standard: true,
            determined: true,
            coherent: true,
            monotonic: true,
            alg4_prime: true,
        }
    }

    fn as_any(&self) -> &dyn Any {
        self
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::domain::rat;

    /// Independent evaluator: conditional probability straight from raw
    /// weights and world masks, bypassing the measure machinery.
    fn oracle_cond(weights: &[Rat], u_mask: u64, v_mask: u64) -> Option<Rat> {
        let of = |mask: u64| -> Rat {
            (0..weights.len())
                .filter(|w| mask >> w & 1 == 1)
                .map(|w| weights[w].clone())
                .sum()
        };
        let pv = of(v_mask);
        if pv.is_zero() {
            None
        } else {
            Some(of(u_mask & v_mask) / pv)
        }
    }

    fn uniform(n: usize) -> ProbabilityCpm {
        let space = WorldSpace::new(n).unwrap();
        let k = space.world_count() as i64;
        ProbabilityCpm::new(space, vec![rat(1, k); k as usize]).unwrap()
    }

    fn skewed() -> ProbabilityCpm {
        let space = WorldSpace::new(2).unwrap();
        ProbabilityCpm::new(
            space,
            vec![rat(1, 2), rat(1, 4), rat(1, 8), rat(1, 8)],
        )
        .unwrap()
    }

    #[test]
    fn validation_rejects_bad_weights() {
        let space = WorldSpace::new(2).unwrap();
        assert!(ProbabilityCpm::new(space, vec![rat(1, 2); 4]).is_err());
        assert!(ProbabilityCpm::new(space, vec![rat(1, 2); 3]).is_err());
        assert!(
            ProbabilityCpm::new(space, vec![rat(3, 2), rat(-1, 2), rat(0, 1), rat(0, 1)])
                .is_err()
        );
    }

    #[test]
    fn uniform_halves_on_one_variable() {
        let m = uniform(2);
        let x1 = m.space().variable_event(0, true);
        let x2 = m.space().variable_event(1, true);
        assert_eq!(m.cond(&x1, &x2).unwrap(), Value::Probability(rat(1, 2)));
        assert_eq!(m.unconditional(&x1), Value::Probability(rat(1, 2)));
    }

    #[test]
    fn skewed_ratio_matches_hand_computation() {
        let m = skewed();
        let u = Event::from_mask(m.space(), 0b0001);
        let v = Event::from_mask(m.space(), 0b0011);
        // (1/2) / (1/2 + 1/4)
        assert_eq!(m.cond(&u, &v).unwrap(), Value::Probability(rat(2, 3)));
    }

    #[test]
    fn empty_condition_is_undefined() {
        let m = uniform(2);
        let u = Event::from_mask(m.space(), 0b0001);
        let none = Event::empty(m.space());
        assert_eq!(m.cond(&u, &none), Err(Error::ConditioningUndefined));
        assert!(!m.is_conditionable(&none));
        assert!(m.is_conditionable(&Event::from_mask(m.space(), 0b0100)));
    }

    #[test]
    fn conditioning_agrees_with_oracle_everywhere() {
        for m in [uniform(2), skewed()] {
            let worlds = m.space().world_count();
            for v_mask in 0..1u64 << worlds {
                let v = Event::from_mask(m.space(), v_mask);
                for u_mask in 0..1u64 << worlds {
                    let u = Event::from_mask(m.space(), u_mask);
                    let got = m.cond_opt(&u, &v).map(|val| match val {
                        Value::Probability(r) => r,
                        other => panic!("unexpected value {other}"),
                    });
                    assert_eq!(got, oracle_cond(m.weights(), u_mask, v_mask));
                }
            }
        }
    }

    #[test]
    fn events_from_other_spaces_are_rejected() {
        let m = uniform(2);
        let other = WorldSpace::new(3).unwrap();
        let u = Event::empty(&other);
        let w = Event::full(m.space());
        assert!(matches!(m.cond(&u, &w), Err(Error::SpaceMismatch(8, 4))));
    }
}
