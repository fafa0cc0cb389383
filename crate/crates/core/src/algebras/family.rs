//! A finite family of probability measures over one world space, shared by
//! the set-based constructions.

use num::{One, Zero};

use crate::domain::{in_unit_range, Rat};
use crate::error::Error;
use crate::world::{Event, WorldSpace};

/// A nonempty list of probability weight vectors, one per member measure.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MeasureFamily {
    space: WorldSpace,
    measures: Vec<Vec<Rat>>,
}

impl MeasureFamily {
    pub fn new(space: WorldSpace, measures: Vec<Vec<Rat>>) -> Result<Self, Error> {
        if measures.is_empty() {
            return Err(Error::InvalidMeasure("measure family is empty".into()));
        }
        for (i, weights) in measures.iter().enumerate() {
            validate_weights(&space, weights)
                .map_err(|e| Error::InvalidMeasure(format!("family member {i}: {e}")))?;
        }
        Ok(MeasureFamily { space, measures })
    }

    pub fn space(&self) -> &WorldSpace {
        &self.space
    }

    pub fn len(&self) -> usize {
        self.measures.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn weights(&self, member: usize) -> &[Rat] {
        &self.measures[member]
    }

    /// `mu_member(e)`.
    pub fn measure_of(&self, member: usize, e: &Event) -> Rat {
        e.iter().map(|w| &self.measures[member][w]).sum()
    }

    /// `mu_member(u | v)` when `mu_member(v) > 0`.
    pub fn member_cond(&self, member: usize, u: &Event, v: &Event) -> Option<Rat> {
        let pv = self.measure_of(member, v);
        if pv.is_zero() {
            None
        } else {
            Some(self.measure_of(member, &u.intersection(v)) / pv)
        }
    }

    pub fn members(&self) -> impl Iterator<Item = usize> {
        0..self.measures.len()
    }
}

pub(crate) fn validate_weights(space: &WorldSpace, weights: &[Rat]) -> Result<(), String> {
    if weights.len() != space.world_count() {
        return Err(format!(
            "expected {} weights, got {}",
            space.world_count(),
            weights.len()
        ));
    }
    if !weights.iter().all(in_unit_range) {
        return Err("weights must lie in [0, 1]".into());
    }
    let total: Rat = weights.iter().sum();
    if !total.is_one() {
        return Err(format!("weights sum to {total}, not 1"));
    }
    Ok(())
}
