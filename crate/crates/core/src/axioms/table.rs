//! Shared evaluation context for the law checkers: one conditional-value
//! table over a fixed event universe, with interned values, memoized
//! comparisons, and memoized operator applications.
//!
//! Exhaustive universes enumerate every event and index it by its world
//! mask, so set algebra in the hot loops is integer arithmetic. Sampled
//! universes precompute pairwise intersection/union indices and fall back
//! to direct measure queries for combined events outside the sample.

use rustc_hash::FxHashMap;

use crate::axioms::{CheckOptions, Mode};
use crate::domain::{compare, PartialComparison};
use crate::error::Error;
use crate::measure::Cpm;
use crate::sampling::{sampled_events, seeded_rng};
use crate::world::Event;
use crate::Value;

/// Sentinel id for "no value": the condition is not conditionable.
pub(crate) const UNDEF: u32 = u32::MAX;
/// Sentinel index for "event not in the sampled universe".
const MISSING: u32 = u32::MAX;
/// Largest interned pool that still gets a dense comparison matrix.
const CMP_DENSE_CAP: usize = 4096;
/// Largest variable count for an exhaustive event universe.
pub(crate) const EXHAUSTIVE_VARS: usize = 3;
/// Largest variable count the checkers accept at all.
pub(crate) const SAMPLED_VARS: usize = 5;

pub(crate) struct Ctx<'a> {
    pub cpm: &'a dyn Cpm,
    pub exhaustive: bool,
    pub conditionable: Vec<bool>,
    pub empty_idx: usize,
    pub full_idx: usize,
    /// Pool ids below `base` are conditional values from the table; ids
    /// at or above it were created by operator applications.
    pub base: usize,
    pub bottom: u32,
    pub top: u32,
    events: Vec<Event>,
    pool: Vec<Value>,
    /// Row-major `count x count` table of interned `Pl(u | v)` ids,
    /// indexed `v * count + u`, `UNDEF` on non-conditionable rows.
    flat: Vec<u32>,
    index: FxHashMap<Event, usize>,
    intern_map: FxHashMap<Value, u32>,
    cmp_dense: Vec<u8>,
    cmp_spill: FxHashMap<(u32, u32), PartialComparison>,
    oplus_memo: FxHashMap<(u32, u32), Option<u32>>,
    otimes_memo: FxHashMap<(u32, u32), Option<u32>>,
    cond_spill: FxHashMap<(Event, usize), u32>,
    inter_tbl: Vec<u32>,
    union_tbl: Vec<u32>,
}

impl<'a> Ctx<'a> {
    pub fn new(cpm: &'a dyn Cpm, opts: &CheckOptions) -> Result<Self, Error> {
        let space = *cpm.space();
        let vars = space.variables();
        let exhaustive = match opts.mode {
            Mode::Exhaustive => true,
            Mode::Sampled => false,
            Mode::Auto => vars <= EXHAUSTIVE_VARS,
        };
        let cap = if exhaustive {
            EXHAUSTIVE_VARS
        } else {
            SAMPLED_VARS
        };
        if vars > cap {
            return Err(Error::SpaceTooLarge { vars, cap });
        }

        let events: Vec<Event> = if exhaustive {
            (0..1u64 << space.world_count())
                .map(|m| Event::from_mask(&space, m))
                .collect()
        } else {
            let mut rng = seeded_rng(opts.seed);
            sampled_events(&space, &mut rng, opts.sample_events, opts.event_cap)
        };
        let count = events.len();
        let index: FxHashMap<Event, usize> = events
            .iter()
            .enumerate()
            .map(|(i, e)| (e.clone(), i))
            .collect();
        let empty_idx = index[&Event::empty(&space)];
        let full_idx = index[&Event::full(&space)];

        let mut pool: Vec<Value> = Vec::new();
        let mut intern_map: FxHashMap<Value, u32> = FxHashMap::default();
        let put = |pool: &mut Vec<Value>, map: &mut FxHashMap<Value, u32>, value: Value| {
            if let Some(&id) = map.get(&value) {
                return id;
            }
            let id = pool.len() as u32;
            pool.push(value.clone());
            map.insert(value, id);
            id
        };
        let bottom = put(&mut pool, &mut intern_map, cpm.bottom());
        let top = put(&mut pool, &mut intern_map, cpm.top());

        let mut conditionable = Vec::with_capacity(count);
        let mut flat = vec![UNDEF; count * count];
        for (v, ve) in events.iter().enumerate() {
            let ok = cpm.is_conditionable(ve);
            conditionable.push(ok);
            if !ok {
                continue;
            }
            for (u, ue) in events.iter().enumerate() {
                if let Some(value) = cpm.cond_opt(ue, ve) {
                    flat[v * count + u] = put(&mut pool, &mut intern_map, value);
                }
            }
        }
        let base = pool.len();
        let cmp_dense = if base <= CMP_DENSE_CAP {
            vec![0u8; base * base]
        } else {
            Vec::new()
        };

        let (mut inter_tbl, mut union_tbl) = (Vec::new(), Vec::new());
        if !exhaustive {
            inter_tbl = vec![MISSING; count * count];
            union_tbl = vec![MISSING; count * count];
            for i in 0..count {
                for j in 0..count {
                    let inter = events[i].intersection(&events[j]);
                    let union = events[i].union(&events[j]);
                    if let Some(&k) = index.get(&inter) {
                        inter_tbl[i * count + j] = k as u32;
                    }
                    if let Some(&k) = index.get(&union) {
                        union_tbl[i * count + j] = k as u32;
                    }
                }
            }
        }

        Ok(Ctx {
            cpm,
            exhaustive,
            conditionable,
            empty_idx,
            full_idx,
            base,
            bottom,
            top,
            events,
            pool,
            flat,
            index,
            intern_map,
            cmp_dense,
            cmp_spill: FxHashMap::default(),
            oplus_memo: FxHashMap::default(),
            otimes_memo: FxHashMap::default(),
            cond_spill: FxHashMap::default(),
            inter_tbl,
            union_tbl,
        })
    }

    pub fn len(&self) -> usize {
        self.events.len()
    }

    pub fn ev(&self, i: usize) -> &Event {
        &self.events[i]
    }

    pub fn value(&self, id: u32) -> &Value {
        &self.pool[id as usize]
    }

    pub fn intern(&mut self, value: Value) -> u32 {
        if let Some(&id) = self.intern_map.get(&value) {
            return id;
        }
        let id = self.pool.len() as u32;
        self.pool.push(value.clone());
        self.intern_map.insert(value, id);
        id
    }

    /// Index of `events[i] ∩ events[j]`, when the universe contains it.
    pub fn inter_idx(&self, i: usize, j: usize) -> Option<usize> {
        if self.exhaustive {
            Some(i & j)
        } else {
            match self.inter_tbl[i * self.len() + j] {
                MISSING => None,
                k => Some(k as usize),
            }
        }
    }

    pub fn union_idx(&self, i: usize, j: usize) -> Option<usize> {
        if self.exhaustive {
            Some(i | j)
        } else {
            match self.union_tbl[i * self.len() + j] {
                MISSING => None,
                k => Some(k as usize),
            }
        }
    }

    pub fn is_subset(&self, i: usize, j: usize) -> bool {
        if self.exhaustive {
            i & j == i
        } else {
            self.events[i].is_subset_of(&self.events[j])
        }
    }

    pub fn is_disjoint(&self, i: usize, j: usize) -> bool {
        if self.exhaustive {
            i & j == 0
        } else {
            self.events[i].is_disjoint_from(&self.events[j])
        }
    }

    /// Interned id of `Pl(events[u] | events[v])`; `UNDEF` when `v` is
    /// not conditionable.
    pub fn cond_id(&self, u: usize, v: usize) -> u32 {
        self.flat[v * self.events.len() + u]
    }

    /// Interned id of `Pl(u | events[v])` for an event possibly outside
    /// the universe (sampled mode); queries the measure on a miss.
    pub fn cond_id_ev(&mut self, u: &Event, v: usize) -> u32 {
        if !self.conditionable[v] {
            return UNDEF;
        }
        if let Some(&ui) = self.index.get(u) {
            return self.cond_id(ui, v);
        }
        if let Some(&id) = self.cond_spill.get(&(u.clone(), v)) {
            return id;
        }
        let id = match self.cpm.cond_opt(u, &self.events[v]) {
            Some(value) => self.intern(value),
            None => UNDEF,
        };
        self.cond_spill.insert((u.clone(), v), id);
        id
    }

    /// Interned id of `Pl(u | v)` for arbitrary events; unmemoized
    /// outside the table.
    pub fn cond_id_raw(&mut self, u: &Event, v: &Event) -> u32 {
        if let (Some(&ui), Some(&vi)) = (self.index.get(u), self.index.get(v)) {
            if self.conditionable[vi] {
                return self.cond_id(ui, vi);
            }
            return UNDEF;
        }
        match self.cpm.cond_opt(u, v) {
            Some(value) => self.intern(value),
            None => UNDEF,
        }
    }

    pub fn compare_ids(&mut self, a: u32, b: u32) -> PartialComparison {
        let dense = (a as usize) < self.base
            && (b as usize) < self.base
            && !self.cmp_dense.is_empty();
        if dense {
            let slot = a as usize * self.base + b as usize;
            if self.cmp_dense[slot] != 0 {
                return decode(self.cmp_dense[slot]);
            }
            let c = self.raw_compare(a, b);
            self.cmp_dense[slot] = encode(c);
            self.cmp_dense[b as usize * self.base + a as usize] = encode(c.flip());
            return c;
        }
        if let Some(&c) = self.cmp_spill.get(&(a, b)) {
            return c;
        }
        let c = self.raw_compare(a, b);
        self.cmp_spill.insert((a, b), c);
        self.cmp_spill.insert((b, a), c.flip());
        c
    }

    fn raw_compare(&self, a: u32, b: u32) -> PartialComparison {
        compare(&self.pool[a as usize], &self.pool[b as usize])
            .expect("one measure produces one value domain")
    }

    pub fn le(&mut self, a: u32, b: u32) -> bool {
        self.compare_ids(a, b).is_le()
    }

    pub fn oplus_id(&mut self, a: u32, b: u32) -> Option<u32> {
        if let Some(&r) = self.oplus_memo.get(&(a, b)) {
            return r;
        }
        let r = self
            .cpm
            .oplus(&self.pool[a as usize], &self.pool[b as usize])
            .map(|v| self.intern(v));
        self.oplus_memo.insert((a, b), r);
        r
    }

    pub fn otimes_id(&mut self, a: u32, b: u32) -> Option<u32> {
        if let Some(&r) = self.otimes_memo.get(&(a, b)) {
            return r;
        }
        let r = self
            .cpm
            .otimes(&self.pool[a as usize], &self.pool[b as usize])
            .map(|v| self.intern(v));
        self.otimes_memo.insert((a, b), r);
        r
    }

    pub fn conditionable_count(&self) -> usize {
        self.conditionable.iter().filter(|&&c| c).count()
    }
}

fn encode(c: PartialComparison) -> u8 {
    match c {
        PartialComparison::LessThan => 1,
        PartialComparison::Equal => 2,
        PartialComparison::GreaterThan => 3,
        PartialComparison::Incomparable => 4,
    }
}

fn decode(b: u8) -> PartialComparison {
    match b {
        1 => PartialComparison::LessThan,
        2 => PartialComparison::Equal,
        3 => PartialComparison::GreaterThan,
        _ => PartialComparison::Incomparable,
    }
}

/// A set of id pairs, dense while the id range is small.
pub(crate) struct PairSet {
    n: usize,
    dense: Option<Vec<u64>>,
    sparse: std::collections::HashSet<(u32, u32)>,
}

const PAIRSET_DENSE_CAP: usize = 4096;

impl PairSet {
    pub fn new(n: usize) -> Self {
        let dense = (n <= PAIRSET_DENSE_CAP).then(|| vec![0u64; (n * n).div_ceil(64)]);
        PairSet {
            n,
            dense,
            sparse: std::collections::HashSet::new(),
        }
    }

    pub fn insert(&mut self, a: u32, b: u32) {
        match &mut self.dense {
            Some(bits) if (a as usize) < self.n && (b as usize) < self.n => {
                let slot = a as usize * self.n + b as usize;
                bits[slot / 64] |= 1 << (slot % 64);
            }
            _ => {
                self.sparse.insert((a, b));
            }
        }
    }

    pub fn contains(&self, a: u32, b: u32) -> bool {
        match &self.dense {
            Some(bits) if (a as usize) < self.n && (b as usize) < self.n => {
                let slot = a as usize * self.n + b as usize;
                bits[slot / 64] & (1 << (slot % 64)) != 0
            }
            _ => self.sparse.contains(&(a, b)),
        }
    }

    pub fn pairs(&self) -> Vec<(u32, u32)> {
        let mut out = Vec::new();
        if let Some(bits) = &self.dense {
            for (word_i, &word) in bits.iter().enumerate() {
                let mut w = word;
                while w != 0 {
                    let bit = w.trailing_zeros() as usize;
                    let slot = word_i * 64 + bit;
                    out.push(((slot / self.n) as u32, (slot % self.n) as u32));
                    w &= w - 1;
                }
            }
        }
        out.extend(self.sparse.iter().copied());
        out
    }

    pub fn len(&self) -> usize {
        let dense = self
            .dense
            .as_ref()
            .map_or(0, |b| b.iter().map(|w| w.count_ones() as usize).sum());
        dense + self.sparse.len()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebras::ProbabilityCpm;
    use crate::domain::rat;
    use crate::world::WorldSpace;

    fn uniform_ctx_parts() -> (ProbabilityCpm, CheckOptions) {
        let space = WorldSpace::new(2).unwrap();
        let cpm = ProbabilityCpm::new(space, vec![rat(1, 4); 4]).unwrap();
        (cpm, CheckOptions::default())
    }

    #[test]
    fn exhaustive_universe_indexes_events_by_mask() {
        let (cpm, opts) = uniform_ctx_parts();
        let ctx = Ctx::new(&cpm, &opts).unwrap();
        assert!(ctx.exhaustive);
        assert_eq!(ctx.len(), 16);
        assert_eq!(ctx.inter_idx(0b1010, 0b0110), Some(0b0010));
        assert_eq!(ctx.union_idx(0b1010, 0b0110), Some(0b1110));
        assert!(ctx.is_subset(0b0010, 0b1010));
        assert!(ctx.is_disjoint(0b0101, 0b1010));
        assert_eq!(ctx.cond_id(ctx.empty_idx, ctx.full_idx), ctx.bottom);
        assert_eq!(ctx.cond_id(ctx.full_idx, ctx.full_idx), ctx.top);
        assert_eq!(ctx.cond_id(3, 0), UNDEF);
    }

    #[test]
    fn interning_is_stable_and_comparison_memoized() {
        let (cpm, opts) = uniform_ctx_parts();
        let mut ctx = Ctx::new(&cpm, &opts).unwrap();
        let half = ctx.intern(Value::Probability(rat(1, 2)));
        assert_eq!(ctx.intern(Value::Probability(rat(2, 4))), half);
        assert_eq!(
            ctx.compare_ids(ctx.bottom, half),
            PartialComparison::LessThan
        );
        assert_eq!(
            ctx.compare_ids(half, ctx.bottom),
            PartialComparison::GreaterThan
        );
        assert!(ctx.le(half, ctx.top));
    }

    #[test]
    fn operator_memo_interns_new_values() {
        let (cpm, opts) = uniform_ctx_parts();
        let mut ctx = Ctx::new(&cpm, &opts).unwrap();
        let quarter = ctx.intern(Value::Probability(rat(1, 4)));
        let sixteenth = ctx.otimes_id(quarter, quarter).unwrap();
        assert_eq!(ctx.value(sixteenth), &Value::Probability(rat(1, 16)));
        assert_eq!(ctx.otimes_id(quarter, quarter), Some(sixteenth));
    }

    #[test]
    fn sampled_universes_fall_back_to_direct_queries() {
        let space = WorldSpace::new(4).unwrap();
        let weights = vec![rat(1, 16); 16];
        let cpm = ProbabilityCpm::new(space, weights).unwrap();
        let opts = CheckOptions {
            mode: Mode::Sampled,
            ..CheckOptions::default()
        };
        let mut ctx = Ctx::new(&cpm, &opts).unwrap();
        assert!(!ctx.exhaustive);
        assert!(ctx.len() <= opts.event_cap);
        let odd = Event::from_worlds(&space, [1, 6, 9, 14]);
        let id = ctx.cond_id_ev(&odd, ctx.full_idx);
        assert_eq!(ctx.value(id), &Value::Probability(rat(1, 4)));
    }

    #[test]
    fn pairsets_report_membership_both_dense_and_sparse() {
        let mut small = PairSet::new(10);
        small.insert(3, 7);
        assert!(small.contains(3, 7));
        assert!(!small.contains(7, 3));
        assert_eq!(small.pairs(), vec![(3, 7)]);
        assert_eq!(small.len(), 1);

        let mut big = PairSet::new(10_000);
        big.insert(9_999, 2);
        assert!(big.contains(9_999, 2));
        assert_eq!(big.len(), 1);
    }
}
