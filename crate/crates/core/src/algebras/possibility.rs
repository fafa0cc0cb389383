//! Possibility measures, under both standard conditionings.

use std::any::Any;

use num::{One, Zero};

use crate::domain::{in_unit_range, AlgebraOps, DomainKind, Rat, Value};
use crate::error::Error;
use crate::measure::{guard_space, Cpm, MeasureClaims};
use crate::world::{Event, WorldSpace};

/// How a possibility measure conditions.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PossConditioning {
    /// `Poss(u | v)` is `Poss(u and v)` when below `Poss(v)`, else 1.
    /// Chains with min.
    Min,
    /// `Poss(u | v) = Poss(u and v) / Poss(v)`. Chains with product.
    Division,
}

/// A possibility measure: `Poss(e)` is the greatest world possibility in
/// `e` (zero for the empty event), and an event is conditionable when its
/// possibility is positive.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PossibilityCpm {
    space: WorldSpace,
    poss: Vec<Rat>,
    conditioning: PossConditioning,
}

impl PossibilityCpm {
    /// Min-conditioned measure. Requires one value per world in `[0, 1]`
    /// with greatest value one.
    pub fn new_min(space: WorldSpace, poss: Vec<Rat>) -> Result<Self, Error> {
        Self::validated(space, poss, PossConditioning::Min)
    }

    /// Division-conditioned measure over the same kind of assignment.
    pub fn new_division(space: WorldSpace, poss: Vec<Rat>) -> Result<Self, Error> {
        Self::validated(space, poss, PossConditioning::Division)
    }

    fn validated(
        space: WorldSpace,
        poss: Vec<Rat>,
        conditioning: PossConditioning,
    ) -> Result<Self, Error> {
        if poss.len() != space.world_count() {
            return Err(Error::InvalidMeasure(format!(
                "expected {} possibility values, got {}",
                space.world_count(),
                poss.len()
            )));
        }
        if !poss.iter().all(in_unit_range) {
            return Err(Error::InvalidMeasure(
                "possibility values must lie in [0, 1]".into(),
            ));
        }
        if poss.iter().max() != Some(&Rat::one()) {
            return Err(Error::InvalidMeasure(
                "greatest world possibility must be one".into(),
            ));
        }
        Ok(PossibilityCpm {
            space,
            poss,
            conditioning,
        })
    }

    pub fn values(&self) -> &[Rat] {
        &self.poss
    }

    pub fn conditioning(&self) -> PossConditioning {
        self.conditioning
    }

    pub fn poss_of(&self, e: &Event) -> Rat {
        e.iter()
            .map(|w| self.poss[w].clone())
            .max()
            .unwrap_or_else(Rat::zero)
    }
}

impl Cpm for PossibilityCpm {
    fn space(&self) -> &WorldSpace {
        &self.space
    }

    fn kind(&self) -> DomainKind {
        DomainKind::Possibility
    }

    fn name(&self) -> &'static str {
        match self.conditioning {
            PossConditioning::Min => "possibility-min",
            PossConditioning::Division => "possibility-div",
        }
    }

    fn bottom(&self) -> Value {
        Value::Possibility(Rat::zero())
    }

    fn top(&self) -> Value {
        Value::Possibility(Rat::one())
    }

    fn is_conditionable(&self, v: &Event) -> bool {
        !self.poss_of(v).is_zero()
    }

    fn cond(&self, u: &Event, v: &Event) -> Result<Value, Error> {
        guard_space(&self.space, &[u, v])?;
        let pv = self.poss_of(v);
        if pv.is_zero() {
            return Err(Error::ConditioningUndefined);
        }
        let pu = self.poss_of(&u.intersection(v));
        Ok(Value::Possibility(match self.conditioning {
            PossConditioning::Min => {
                if pu < pv {
                    pu
                } else {
                    Rat::one()
                }
            }
            PossConditioning::Division => pu / pv,
        }))
    }

    fn algebra(&self) -> Option<AlgebraOps> {
        Some(match self.conditioning {
            PossConditioning::Min => AlgebraOps::PossibilityMin,
            PossConditioning::Division => AlgebraOps::PossibilityDiv,
        })
    }

    fn claims(&self) -> MeasureClaims {
        MeasureClaims {
            acceptable: true,
            algebraic: true,
            standard: true,
            determined: true,
            coherent: true,
            monotonic: true,
            // Unrestricted cancellation fails for min-conditioning: min
            // discards the larger argument, so products cannot be undone
            // outside the conditional-pair domain.
            alg4_prime: self.conditioning == PossConditioning::Division,
        }
    }

    fn as_any(&self) -> &dyn Any {
        self
    }
}
