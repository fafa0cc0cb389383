//! Ranking measures: degrees of surprise with min/plus structure.

use std::any::Any;

use crate::domain::{AlgebraOps, DomainKind, Rank, Value};
use crate::error::Error;
use crate::measure::{guard_space, Cpm, MeasureClaims};
use crate::world::{Event, WorldSpace};

/// A ranking measure. `rank(e)` is the least world rank in `e` (infinite
/// for the empty event), an event is conditionable when its rank is
/// finite, and `rank(u | v) = rank(u and v) - rank(v)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RankingCpm {
    space: WorldSpace,
    ranks: Vec<Rank>,
}

impl RankingCpm {
    /// Requires one rank per world, with least finite rank zero.
    pub fn new(space: WorldSpace, ranks: Vec<Rank>) -> Result<Self, Error> {
        if ranks.len() != space.world_count() {
            return Err(Error::InvalidMeasure(format!(
                "expected {} ranks, got {}",
                space.world_count(),
                ranks.len()
            )));
        }
        if ranks.iter().min() != Some(&Rank::Finite(0)) {
            return Err(Error::InvalidMeasure(
                "least world rank must be zero".into(),
            ));
        }
        Ok(RankingCpm { space, ranks })
    }

    pub fn ranks(&self) -> &[Rank] {
        &self.ranks
    }

    pub fn rank_of(&self, e: &Event) -> Rank {
        e.iter().map(|w| self.ranks[w]).min().unwrap_or(Rank::Infinite)
    }
}

impl Cpm for RankingCpm {
    fn space(&self) -> &WorldSpace {
        &self.space
    }

    fn kind(&self) -> DomainKind {
        DomainKind::Rank
    }

    fn name(&self) -> &'static str {
        "ranking"
    }

    fn bottom(&self) -> Value {
        AlgebraOps::Ranking.bottom()
    }

    fn top(&self) -> Value {
        AlgebraOps::Ranking.top()
    }

    fn is_conditionable(&self, v: &Event) -> bool {
        self.rank_of(v).is_finite()
    }

    fn cond(&self, u: &Event, v: &Event) -> Result<Value, Error> {
        guard_space(&self.space, &[u, v])?;
        match self.rank_of(v) {
            Rank::Finite(rv) => {
                Ok(Value::Rank(self.rank_of(&u.intersection(v)).minus(rv)))
            }
            Rank::Infinite => Err(Error::ConditioningUndefined),
        }
    }

    fn algebra(&self) -> Option<AlgebraOps> {
        Some(AlgebraOps::Ranking)
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

    fn ranking(ranks: &[i64]) -> RankingCpm {
        let space = WorldSpace::new(2).unwrap();
        let ranks = ranks
            .iter()
            .map(|&k| {
                if k < 0 {
                    Rank::Infinite
                } else {
                    Rank::Finite(k as u64)
                }
            })
            .collect();
        RankingCpm::new(space, ranks).unwrap()
    }

    /// Independent evaluator working directly on world masks.
    fn oracle_cond(ranks: &[Rank], u_mask: u64, v_mask: u64) -> Option<Rank> {
        let of = |mask: u64| {
            (0..ranks.len())
                .filter(|w| mask >> w & 1 == 1)
                .map(|w| ranks[w])
                .min()
                .unwrap_or(Rank::Infinite)
        };
        match of(v_mask) {
            Rank::Finite(rv) => Some(match of(u_mask & v_mask) {
                Rank::Finite(ru) => Rank::Finite(ru - rv),
                Rank::Infinite => Rank::Infinite,
            }),
            Rank::Infinite => None,
        }
    }

    #[test]
    fn normalization_is_required() {
        let space = WorldSpace::new(2).unwrap();
        assert!(RankingCpm::new(space, vec![Rank::Finite(1); 4]).is_err());
        assert!(RankingCpm::new(space, vec![Rank::Infinite; 4]).is_err());
    }

    #[test]
    fn conditioning_subtracts_the_condition_rank() {
        let m = ranking(&[0, 1, -1, -1]);
        let w1 = Event::singleton(m.space(), 1);
        let v = Event::from_mask(m.space(), 0b0011);
        assert_eq!(m.cond(&w1, &v).unwrap(), Value::Rank(Rank::Finite(1)));

        let m2 = ranking(&[0, 2, 3, -1]);
        let u = Event::singleton(m2.space(), 2);
        let v2 = Event::from_mask(m2.space(), 0b0110);
        assert_eq!(m2.cond(&u, &v2).unwrap(), Value::Rank(Rank::Finite(1)));
    }

    #[test]
    fn impossible_events_stay_infinitely_surprising() {
        let m = ranking(&[0, 1, -1, -1]);
        let w2 = Event::singleton(m.space(), 2);
        let full = Event::full(m.space());
        assert_eq!(m.cond(&w2, &full).unwrap(), Value::Rank(Rank::Infinite));
        assert!(!m.is_conditionable(&w2));
        assert_eq!(
            m.cond(&full, &w2),
            Err(Error::ConditioningUndefined)
        );
    }

    #[test]
    fn conditioning_agrees_with_oracle_everywhere() {
        let m = ranking(&[0, 2, 3, -1]);
        for v_mask in 0..16u64 {
            let v = Event::from_mask(m.space(), v_mask);
            for u_mask in 0..16u64 {
                let u = Event::from_mask(m.space(), u_mask);
                let got = m.cond_opt(&u, &v).map(|val| match val {
                    Value::Rank(k) => k,
                    other => panic!("unexpected value {other}"),
                });
                assert_eq!(got, oracle_cond(m.ranks(), u_mask, v_mask));
            }
        }
    }
}
