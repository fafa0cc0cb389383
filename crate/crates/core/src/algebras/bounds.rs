//! Lower and upper probabilities of a measure family, plus the interval
//! measure pairing them. None of these carry combination operators.

use std::any::Any;

use num::{One, Zero};

use crate::algebras::family::MeasureFamily;
use crate::domain::{AlgebraOps, DomainKind, Rat, Value};
use crate::error::Error;
use crate::measure::{guard_space, Cpm, MeasureClaims};
use crate::world::{Event, WorldSpace};

/// When a bound conditions on `v`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BoundVariant {
    /// Every member must give `v` positive probability. Fewer events are
    /// conditionable, and members never drop out of the bound.
    Strict,
    /// One member giving `v` positive probability suffices; the bound
    /// ranges over the members that do.
    Lenient,
}

fn member_conditionals(
    family: &MeasureFamily,
    u: &Event,
    v: &Event,
) -> Vec<Option<Rat>> {
    (0..family.len())
        .map(|i| family.member_cond(i, u, v))
        .collect()
}

fn bound_cond(
    family: &MeasureFamily,
    variant: BoundVariant,
    u: &Event,
    v: &Event,
    fold: fn(Rat, Rat) -> Rat,
) -> Result<Value, Error> {
    guard_space(family.space(), &[u, v])?;
    let per_member = member_conditionals(family, u, v);
    if variant == BoundVariant::Strict && per_member.iter().any(Option::is_none) {
        return Err(Error::ConditioningUndefined);
    }
    per_member
        .into_iter()
        .flatten()
        .reduce(fold)
        .map(Value::Probability)
        .ok_or(Error::ConditioningUndefined)
}

fn bound_conditionable(family: &MeasureFamily, variant: BoundVariant, v: &Event) -> bool {
    let positive = (0..family.len()).filter(|&i| !family.measure_of(i, v).is_zero());
    match variant {
        BoundVariant::Strict => positive.count() == family.len(),
        BoundVariant::Lenient => positive.count() > 0,
    }
}

/// The pointwise infimum of a family's conditional probabilities.
///
/// Carries no combination operators: equal lower probabilities of
/// disjoint events say nothing about the lower probability of their
/// union. Conditioning can even invert the unconditional order, so
/// neither variant is claimed coherent or determined by its
/// unconditional values.
#[derive(Debug, Clone)]
pub struct LowerProbabilityCpm {
    family: MeasureFamily,
    variant: BoundVariant,
}

impl LowerProbabilityCpm {
    pub fn strict(family: MeasureFamily) -> Self {
        LowerProbabilityCpm {
            family,
            variant: BoundVariant::Strict,
        }
    }

    pub fn lenient(family: MeasureFamily) -> Self {
        LowerProbabilityCpm {
            family,
            variant: BoundVariant::Lenient,
        }
    }

    pub fn family(&self) -> &MeasureFamily {
        &self.family
    }

    pub fn variant(&self) -> BoundVariant {
        self.variant
    }
}

impl Cpm for LowerProbabilityCpm {
    fn space(&self) -> &WorldSpace {
        self.family.space()
    }

    fn kind(&self) -> DomainKind {
        DomainKind::Probability
    }

    fn name(&self) -> &'static str {
        match self.variant {
            BoundVariant::Strict => "lower-probability-strict",
            BoundVariant::Lenient => "lower-probability-lenient",
        }
    }

    fn bottom(&self) -> Value {
        Value::Probability(Rat::zero())
    }

    fn top(&self) -> Value {
        Value::Probability(Rat::one())
    }

    fn is_conditionable(&self, v: &Event) -> bool {
        bound_conditionable(&self.family, self.variant, v)
    }

    fn cond(&self, u: &Event, v: &Event) -> Result<Value, Error> {
        bound_cond(&self.family, self.variant, u, v, Rat::min)
    }

    fn algebra(&self) -> Option<AlgebraOps> {
        None
    }

    fn claims(&self) -> MeasureClaims {
        MeasureClaims {
            acceptable: true,
            algebraic: false,
            // The lenient infimum can be zero on a conditionable event:
            // one member rules it out while another keeps conditioning
            // defined.
            standard: self.variant == BoundVariant::Strict,
            determined: false,
            coherent: false,
            monotonic: false,
            alg4_prime: false,
        }
    }

    fn as_any(&self) -> &dyn Any {
        self
    }
}

/// The pointwise supremum of a family's conditional probabilities.
#[derive(Debug, Clone)]
pub struct UpperProbabilityCpm {
    family: MeasureFamily,
    variant: BoundVariant,
}

impl UpperProbabilityCpm {
    pub fn strict(family: MeasureFamily) -> Self {
        UpperProbabilityCpm {
            family,
            variant: BoundVariant::Strict,
        }
    }

    pub fn lenient(family: MeasureFamily) -> Self {
        UpperProbabilityCpm {
            family,
            variant: BoundVariant::Lenient,
        }
    }

    pub fn family(&self) -> &MeasureFamily {
        &self.family
    }

    pub fn variant(&self) -> BoundVariant {
        self.variant
    }
}

impl Cpm for UpperProbabilityCpm {
    fn space(&self) -> &WorldSpace {
        self.family.space()
    }

    fn kind(&self) -> DomainKind {
        DomainKind::Probability
    }

    fn name(&self) -> &'static str {
        match self.variant {
            BoundVariant::Strict => "upper-probability-strict",
            BoundVariant::Lenient => "upper-probability-lenient",
        }
    }

    fn bottom(&self) -> Value {
        Value::Probability(Rat::zero())
    }

    fn top(&self) -> Value {
        Value::Probability(Rat::one())
    }

    fn is_conditionable(&self, v: &Event) -> bool {
        bound_conditionable(&self.family, self.variant, v)
    }

    fn cond(&self, u: &Event, v: &Event) -> Result<Value, Error> {
        bound_cond(&self.family, self.variant, u, v, Rat::max)
    }

    fn algebra(&self) -> Option<AlgebraOps> {
        None
    }

    fn claims(&self) -> MeasureClaims {
        MeasureClaims {
            acceptable: true,
            algebraic: false,
            // The strict supremum can be positive on an event that some
            // member rules out, which keeps that event unconditionable.
            standard: self.variant == BoundVariant::Lenient,
            determined: false,
            coherent: false,
            monotonic: false,
            alg4_prime: false,
        }
    }

    fn as_any(&self) -> &dyn Any {
        self
    }
}

/// The unconditional interval measure: an event maps to its lower and
/// upper probability under the family.
pub fn interval_value(family: &MeasureFamily, u: &Event) -> Result<Value, Error> {
    guard_space(family.space(), &[u])?;
    let values: Vec<Rat> = (0..family.len())
        .map(|i| family.measure_of(i, u))
        .collect();
    let lo = values.iter().min().expect("family is nonempty").clone();
    let hi = values.into_iter().max().expect("family is nonempty");
    Ok(Value::Interval(lo, hi))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebras::probability::ProbabilityCpm;
    use crate::domain::rat;

    fn family(members: &[&[(i64, i64)]]) -> MeasureFamily {
        let space = WorldSpace::new(2).unwrap();
        let members = members
            .iter()
            .map(|m| m.iter().map(|&(p, q)| rat(p, q)).collect())
            .collect();
        MeasureFamily::new(space, members).unwrap()
    }

    /// One member is certain of the third world; the other splits its
    /// mass 2:1 over the first two. The fourth world is null for both.
    fn split_family() -> MeasureFamily {
        family(&[
            &[(0, 1), (0, 1), (1, 1), (0, 1)],
            &[(2, 3), (1, 3), (0, 1), (0, 1)],
        ])
    }

    #[test]
    fn lenient_conditioning_drops_members_that_rule_out_the_condition() {
        let m = LowerProbabilityCpm::lenient(split_family());
        let a = Event::singleton(m.space(), 0);
        let b = Event::singleton(m.space(), 1);
        let ab = Event::from_mask(m.space(), 0b0011);
        // Unconditionally the two worlds tie at zero, yet conditioning
        // on their union separates them: only the second member stays.
        assert_eq!(m.unconditional(&a), Value::Probability(rat(0, 1)));
        assert_eq!(m.unconditional(&b), Value::Probability(rat(0, 1)));
        assert_eq!(m.cond(&a, &ab).unwrap(), Value::Probability(rat(2, 3)));
        assert_eq!(m.cond(&b, &ab).unwrap(), Value::Probability(rat(1, 3)));
    }

    #[test]
    fn strict_conditioning_requires_every_member() {
        let m = LowerProbabilityCpm::strict(split_family());
        let ab = Event::from_mask(m.space(), 0b0011);
        assert!(!m.is_conditionable(&ab));
        assert_eq!(
            m.cond(&Event::singleton(m.space(), 0), &ab),
            Err(Error::ConditioningUndefined)
        );
        // Both members give {a, c} positive probability.
        let ac = Event::from_mask(m.space(), 0b0101);
        assert!(m.is_conditionable(&ac));
        assert_eq!(
            m.cond(&Event::singleton(m.space(), 0), &ac).unwrap(),
            Value::Probability(rat(0, 1))
        );
    }

    #[test]
    fn strict_conditioning_can_invert_the_unconditional_order() {
        // Every member conditions on {a, b}, yet the infimum order over
        // {a} and {b} flips from a tie to a strict gap.
        let m = LowerProbabilityCpm::strict(family(&[
            &[(1, 4), (1, 4), (1, 2), (0, 1)],
            &[(1, 2), (1, 4), (1, 4), (0, 1)],
        ]));
        let a = Event::singleton(m.space(), 0);
        let b = Event::singleton(m.space(), 1);
        let ab = Event::from_mask(m.space(), 0b0011);
        assert_eq!(m.unconditional(&a), Value::Probability(rat(1, 4)));
        assert_eq!(m.unconditional(&b), Value::Probability(rat(1, 4)));
        assert_eq!(m.cond(&a, &ab).unwrap(), Value::Probability(rat(1, 2)));
        assert_eq!(m.cond(&b, &ab).unwrap(), Value::Probability(rat(1, 3)));
    }

    #[test]
    fn upper_bound_is_dual_to_the_lower_bound() {
        let fam = family(&[
            &[(1, 2), (1, 4), (1, 8), (1, 8)],
            &[(0, 1), (1, 3), (1, 3), (1, 3)],
        ]);
        let lower = LowerProbabilityCpm::lenient(fam.clone());
        let upper = UpperProbabilityCpm::lenient(fam);
        let w = Event::full(lower.space());
        assert_eq!(upper.unconditional(&w), Value::Probability(rat(1, 1)));
        assert_eq!(
            upper.unconditional(&Event::empty(lower.space())),
            Value::Probability(rat(0, 1))
        );
        for mask in 0..16u64 {
            let u = Event::from_mask(lower.space(), mask);
            let hi = match upper.unconditional(&u) {
                Value::Probability(r) => r,
                _ => unreachable!(),
            };
            let lo_comp = match lower.unconditional(&u.complement()) {
                Value::Probability(r) => r,
                _ => unreachable!(),
            };
            assert_eq!(hi, rat(1, 1) - lo_comp);
        }
    }

    #[test]
    fn singleton_families_reduce_to_plain_probability() {
        let weights = [(1, 2), (1, 4), (1, 4), (0, 1)];
        let fam = family(&[&weights]);
        let space = *fam.space();
        let prob = ProbabilityCpm::new(
            space,
            weights.iter().map(|&(p, q)| rat(p, q)).collect(),
        )
        .unwrap();
        let bounds: Vec<Box<dyn Cpm>> = vec![
            Box::new(LowerProbabilityCpm::strict(fam.clone())),
            Box::new(LowerProbabilityCpm::lenient(fam.clone())),
            Box::new(UpperProbabilityCpm::strict(fam.clone())),
            Box::new(UpperProbabilityCpm::lenient(fam)),
        ];
        for v_mask in 0..16u64 {
            for u_mask in 0..16u64 {
                let u = Event::from_mask(&space, u_mask);
                let v = Event::from_mask(&space, v_mask);
                for b in &bounds {
                    assert_eq!(b.cond_opt(&u, &v), prob.cond_opt(&u, &v));
                }
            }
        }
    }

    #[test]
    fn interval_pairs_the_two_bounds() {
        let fam = split_family();
        let space = *fam.space();
        assert_eq!(
            interval_value(&fam, &Event::singleton(&space, 0)).unwrap(),
            Value::Interval(rat(0, 1), rat(2, 3))
        );
        assert_eq!(
            interval_value(&fam, &Event::empty(&space)).unwrap(),
            Value::Interval(rat(0, 1), rat(0, 1))
        );
        assert_eq!(
            interval_value(&fam, &Event::full(&space)).unwrap(),
            Value::Interval(rat(1, 1), rat(1, 1))
        );
    }
}
