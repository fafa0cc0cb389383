//! Seeded random instances for the law checkers and the test suites.
//!
//! Weights are drawn with small fixed denominators so that the exact
//! rational arithmetic downstream stays cheap: conditioning a
//! granularity-g measure only ever produces fractions from the
//! denominator-bounded pool, no matter how many events are combined.

use num::{BigInt, One};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebras::family::MeasureFamily;
use crate::algebras::probability::ProbabilityCpm;
use crate::algebras::ranking::RankingCpm;
use crate::domain::{Rank, Rat};
use crate::world::{Event, WorldSpace};

/// Seed used wherever the caller does not supply one.
pub const DEFAULT_SEED: u64 = 0x706c_6175_7369_6e65;

/// Denominator for randomly drawn probability and possibility values.
pub const DEFAULT_GRANULARITY: u32 = 12;

pub fn seeded_rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A probability measure with denominator `granularity`, drawn by
/// dropping that many unit masses into worlds uniformly. Zero-weight
/// worlds are common on purpose; they exercise the undefined-conditioning
/// paths.
pub fn random_probability(
    space: &WorldSpace,
    rng: &mut ChaCha8Rng,
    granularity: u32,
) -> ProbabilityCpm {
    let weights = random_weights(space, rng, granularity);
    ProbabilityCpm::new(*space, weights).expect("generated weights are valid")
}

fn random_weights(space: &WorldSpace, rng: &mut ChaCha8Rng, granularity: u32) -> Vec<Rat> {
    assert!(granularity > 0);
    let mut counts = vec![0u32; space.world_count()];
    for _ in 0..granularity {
        counts[rng.gen_range(0..space.world_count())] += 1;
    }
    counts
        .into_iter()
        .map(|c| Rat::new(BigInt::from(c), BigInt::from(granularity)))
        .collect()
}

/// A normalized ranking function: worlds are infinitely surprising with
/// probability 1/4, otherwise get a small rank, and the minimum is
/// shifted to zero.
pub fn random_ranking(space: &WorldSpace, rng: &mut ChaCha8Rng, max_rank: u64) -> RankingCpm {
    let mut ranks: Vec<Rank> = (0..space.world_count())
        .map(|_| {
            if rng.gen_bool(0.25) {
                Rank::Infinite
            } else {
                Rank::Finite(rng.gen_range(0..=max_rank))
            }
        })
        .collect();
    let min = ranks.iter().filter_map(Rank::finite).min();
    match min {
        None => {
            let w = rng.gen_range(0..ranks.len());
            ranks[w] = Rank::Finite(0);
        }
        Some(m) => {
            for r in ranks.iter_mut() {
                if let Rank::Finite(v) = r {
                    *v -= m;
                }
            }
        }
    }
    RankingCpm::new(*space, ranks).expect("generated ranks are normalized")
}

/// Possibility values with denominator `granularity`; one world is
/// forced to full possibility.
pub fn random_possibility_values(
    space: &WorldSpace,
    rng: &mut ChaCha8Rng,
    granularity: u32,
) -> Vec<Rat> {
    assert!(granularity > 0);
    let mut values: Vec<Rat> = (0..space.world_count())
        .map(|_| {
            Rat::new(
                BigInt::from(rng.gen_range(0..=granularity)),
                BigInt::from(granularity),
            )
        })
        .collect();
    let w = rng.gen_range(0..values.len());
    values[w] = Rat::one();
    values
}

/// A family of `members` probability measures over one space. Each
/// member avoids being the all-on-one-world measure only by chance, so
/// degenerate members occur.
pub fn random_family(
    space: &WorldSpace,
    rng: &mut ChaCha8Rng,
    members: usize,
    granularity: u32,
) -> MeasureFamily {
    assert!(members > 0);
    let members = (0..members)
        .map(|_| random_weights(space, rng, granularity))
        .collect();
    MeasureFamily::new(*space, members).expect("generated members are valid")
}

/// Edges of a random dag on `vars` nodes: each forward pair of a hidden
/// total order is connected with probability `density`, and labels are
/// then shuffled so the topological order is not simply `0..n`.
pub fn random_dag_edges(vars: usize, rng: &mut ChaCha8Rng, density: f64) -> Vec<(usize, usize)> {
    let mut labels: Vec<usize> = (0..vars).collect();
    labels.shuffle(rng);
    let mut edges = Vec::new();
    for i in 0..vars {
        for j in i + 1..vars {
            if rng.gen_bool(density) {
                edges.push((labels[i], labels[j]));
            }
        }
    }
    edges.sort_unstable();
    edges
}

/// A structured event list for sampled law checking: the empty and full
/// events, every singleton, every one-variable cylinder, random events,
/// and one round of pairwise intersections and unions, capped at `cap`
/// distinct events.
pub fn sampled_events(
    space: &WorldSpace,
    rng: &mut ChaCha8Rng,
    random_count: usize,
    cap: usize,
) -> Vec<Event> {
    let mut events = vec![Event::empty(space), Event::full(space)];
    for w in 0..space.world_count() {
        events.push(Event::singleton(space, w));
    }
    for v in 0..space.variables() {
        events.push(space.variable_event(v, false));
        events.push(space.variable_event(v, true));
    }
    let world_bits = space.world_count() as u32;
    assert!(world_bits < 64, "sampled event lists are for small spaces");
    for _ in 0..random_count {
        let mask: u64 = rng.gen_range(0..(1u64 << world_bits));
        events.push(Event::from_mask(space, mask));
    }
    dedupe(&mut events);
    let base = events.clone();
    'closure: for (i, a) in base.iter().enumerate() {
        for b in &base[i + 1..] {
            if events.len() >= cap {
                break 'closure;
            }
            events.push(a.intersection(b));
            events.push(a.union(b));
        }
    }
    dedupe(&mut events);
    events.truncate(cap);
    events
}

fn dedupe(events: &mut Vec<Event>) {
    let mut seen = std::collections::HashSet::new();
    events.retain(|e| seen.insert(e.clone()));
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generation_is_deterministic_per_seed() {
        let space = WorldSpace::new(3).unwrap();
        let a = random_probability(&space, &mut seeded_rng(7), 12);
        let b = random_probability(&space, &mut seeded_rng(7), 12);
        let c = random_probability(&space, &mut seeded_rng(8), 12);
        assert_eq!(a.weights(), b.weights());
        assert_ne!(a.weights(), c.weights());
    }

    #[test]
    fn weights_use_the_requested_denominator() {
        let space = WorldSpace::new(2).unwrap();
        let mut rng = seeded_rng(DEFAULT_SEED);
        for _ in 0..20 {
            let m = random_probability(&space, &mut rng, 12);
            let total: Rat = m.weights().iter().cloned().sum();
            assert!(total.is_one());
            for w in m.weights() {
                assert!((w * Rat::from_integer(BigInt::from(12))).is_integer());
            }
        }
    }

    #[test]
    fn rankings_are_normalized_and_sometimes_infinite() {
        let space = WorldSpace::new(3).unwrap();
        let mut rng = seeded_rng(DEFAULT_SEED);
        let mut saw_infinite = false;
        for _ in 0..20 {
            let m = random_ranking(&space, &mut rng, 5);
            assert_eq!(
                m.ranks().iter().filter_map(Rank::finite).min(),
                Some(0)
            );
            saw_infinite |= m.ranks().contains(&Rank::Infinite);
        }
        assert!(saw_infinite);
    }

    #[test]
    fn dags_are_acyclic() {
        let mut rng = seeded_rng(DEFAULT_SEED);
        for _ in 0..50 {
            let edges = random_dag_edges(6, &mut rng, 0.4);
            // Kahn's algorithm must consume every node.
            let mut indeg = [0usize; 6];
            for &(_, t) in &edges {
                indeg[t] += 1;
            }
            let mut queue: Vec<usize> =
                (0..6).filter(|&v| indeg[v] == 0).collect();
            let mut seen = 0;
            while let Some(v) = queue.pop() {
                seen += 1;
                for &(s, t) in &edges {
                    if s == v {
                        indeg[t] -= 1;
                        if indeg[t] == 0 {
                            queue.push(t);
                        }
                    }
                }
            }
            assert_eq!(seen, 6);
        }
    }

    #[test]
    fn sampled_event_lists_cover_the_basics() {
        let space = WorldSpace::new(4).unwrap();
        let mut rng = seeded_rng(DEFAULT_SEED);
        let events = sampled_events(&space, &mut rng, 10, 48);
        assert!(events.contains(&Event::empty(&space)));
        assert!(events.contains(&Event::full(&space)));
        assert!(events.contains(&Event::singleton(&space, 5)));
        assert!(events.len() <= 48);
        let mut seen = std::collections::HashSet::new();
        assert!(events.iter().all(|e| seen.insert(e.clone())));
    }
}
