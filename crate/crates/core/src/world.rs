//! Finite world spaces generated by binary variables, and events over them.
//!
//! A space over `n` variables has `2^n` worlds. World index `w` encodes an
//! assignment: variable `i` is true in `w` exactly when bit `i` of `w` is
//! set, so the first variable is the least significant bit.

use crate::error::Error;

/// Default cap on the number of variables in a world space.
pub const DEFAULT_VARIABLE_CAP: usize = 10;

/// A finite set of possible worlds indexed `0..2^n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct WorldSpace {
    vars: usize,
}

impl WorldSpace {
    /// A space over `vars` binary variables, capped at [`DEFAULT_VARIABLE_CAP`].
    pub fn new(vars: usize) -> Result<Self, Error> {
        Self::with_cap(vars, DEFAULT_VARIABLE_CAP)
    }

    /// A space over `vars` binary variables with an explicit cap.
    pub fn with_cap(vars: usize, cap: usize) -> Result<Self, Error> {
        if vars == 0 {
            return Err(Error::InvalidMeasure(
                "world space needs at least one variable".into(),
            ));
        }
        if vars > cap || cap > 16 {
            return Err(Error::SpaceTooLarge { vars, cap });
        }
        Ok(WorldSpace { vars })
    }

    pub fn variables(&self) -> usize {
        self.vars
    }

    pub fn world_count(&self) -> usize {
        1usize << self.vars
    }

    pub fn worlds(&self) -> impl Iterator<Item = usize> {
        0..self.world_count()
    }

    /// The value of variable `var` in world `world`.
    pub fn world_bit(&self, world: usize, var: usize) -> bool {
        debug_assert!(var < self.vars && world < self.world_count());
        world >> var & 1 == 1
    }

    /// The event where variable `var` takes `value`.
    pub fn variable_event(&self, var: usize, value: bool) -> Event {
        assert!(var < self.vars, "variable {var} out of range");
        let mut e = Event::empty(self);
        for w in self.worlds() {
            if self.world_bit(w, var) == value {
                e.insert(w);
            }
        }
        e
    }

    /// The event where every listed variable takes its paired value.
    ///
    /// The empty assignment yields the full event.
    pub fn assignment_event(&self, assignment: &[(usize, bool)]) -> Event {
        let mut e = Event::full(self);
        for &(var, value) in assignment {
            e = e.intersection(&self.variable_event(var, value));
        }
        e
    }
}

const WORD_BITS: usize = 64;

/// A set of worlds from one [`WorldSpace`].
///
/// Set operations panic when the operands come from spaces of different
/// sizes; that is a usage bug, not a recoverable condition.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Event {
    universe: usize,
    words: Vec<u64>,
}

impl Event {
    fn blank(universe: usize) -> Event {
        Event {
            universe,
            words: vec![0; universe.div_ceil(WORD_BITS)],
        }
    }

    pub fn empty(space: &WorldSpace) -> Event {
        Event::blank(space.world_count())
    }

    pub fn full(space: &WorldSpace) -> Event {
        Event::blank(space.world_count()).complement()
    }

    pub fn singleton(space: &WorldSpace, world: usize) -> Event {
        let mut e = Event::empty(space);
        e.insert(world);
        e
    }

    pub fn from_worlds(space: &WorldSpace, worlds: impl IntoIterator<Item = usize>) -> Event {
        let mut e = Event::empty(space);
        for w in worlds {
            e.insert(w);
        }
        e
    }

    /// Event from the low `world_count` bits of a mask. Handy for spaces
    /// with at most 64 worlds.
    pub fn from_mask(space: &WorldSpace, mask: u64) -> Event {
        let count = space.world_count();
        assert!(count <= WORD_BITS, "space too large for a u64 mask");
        assert!(
            count == WORD_BITS || mask >> count == 0,
            "mask has bits outside the space"
        );
        Event {
            universe: count,
            words: vec![mask],
        }
    }

    /// The low-word mask of an event over at most 64 worlds.
    pub fn mask(&self) -> u64 {
        assert!(self.universe <= WORD_BITS, "event too wide for a u64 mask");
        self.words[0]
    }

    /// Number of worlds in the underlying space.
    pub fn universe(&self) -> usize {
        self.universe
    }

    pub fn insert(&mut self, world: usize) {
        assert!(world < self.universe, "world {world} out of range");
        self.words[world / WORD_BITS] |= 1 << (world % WORD_BITS);
    }

    pub fn contains(&self, world: usize) -> bool {
        debug_assert!(world < self.universe);
        self.words[world / WORD_BITS] >> (world % WORD_BITS) & 1 == 1
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn is_full(&self) -> bool {
        self.len() == self.universe
    }

    fn zip(&self, other: &Event, f: impl Fn(u64, u64) -> u64) -> Event {
        assert_eq!(
            self.universe, other.universe,
            "events come from different world spaces"
        );
        let words = self
            .words
            .iter()
            .zip(&other.words)
            .map(|(&a, &b)| f(a, b))
            .collect();
        Event {
            universe: self.universe,
            words,
        }
    }

    pub fn union(&self, other: &Event) -> Event {
        self.zip(other, |a, b| a | b)
    }

    pub fn intersection(&self, other: &Event) -> Event {
        self.zip(other, |a, b| a & b)
    }

    pub fn difference(&self, other: &Event) -> Event {
        self.zip(other, |a, b| a & !b)
    }

    /// Complement within the world space.
    pub fn complement(&self) -> Event {
        let mut words: Vec<u64> = self.words.iter().map(|&w| !w).collect();
        let tail = self.universe % WORD_BITS;
        if tail != 0 {
            *words.last_mut().unwrap() &= (1u64 << tail) - 1;
        }
        Event {
            universe: self.universe,
            words,
        }
    }

    pub fn is_subset_of(&self, other: &Event) -> bool {
        self.words
            .iter()
            .zip(&other.words)
            .all(|(&a, &b)| a & !b == 0)
    }

    pub fn is_disjoint_from(&self, other: &Event) -> bool {
        self.words
            .iter()
            .zip(&other.words)
            .all(|(&a, &b)| a & b == 0)
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.universe).filter(|&w| self.contains(w))
    }
}

impl std::fmt::Debug for Event {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Event{self}")
    }
}

impl std::fmt::Display for Event {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{{")?;
        for (i, w) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{w}")?;
        }
        write!(f, "}}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn space(n: usize) -> WorldSpace {
        WorldSpace::new(n).unwrap()
    }

    #[test]
    fn caps_are_enforced() {
        assert!(WorldSpace::new(10).is_ok());
        assert!(matches!(
            WorldSpace::new(11),
            Err(Error::SpaceTooLarge { vars: 11, cap: 10 })
        ));
        assert!(WorldSpace::with_cap(11, 12).is_ok());
        assert!(WorldSpace::new(0).is_err());
    }

    #[test]
    fn first_variable_is_least_significant_bit() {
        let s = space(3);
        assert!(s.world_bit(0b101, 0));
        assert!(!s.world_bit(0b101, 1));
        assert!(s.world_bit(0b101, 2));
        assert_eq!(s.variable_event(0, true).mask(), 0b10101010);
        assert_eq!(s.variable_event(2, false).mask(), 0b00001111);
    }

    #[test]
    fn assignment_events_intersect_cylinders() {
        let s = space(3);
        let e = s.assignment_event(&[(0, true), (2, false)]);
        assert_eq!(e.mask(), 0b00001010);
        assert!(s.assignment_event(&[]).is_full());
    }

    #[test]
    fn set_algebra_behaves() {
        let s = space(2);
        let a = Event::from_worlds(&s, [0, 3]);
        let b = Event::from_worlds(&s, [1, 3]);
        assert_eq!(a.union(&b).mask(), 0b1011);
        assert_eq!(a.intersection(&b).mask(), 0b1000);
        assert_eq!(a.difference(&b).mask(), 0b0001);
        assert_eq!(a.complement().mask(), 0b0110);
        assert!(a.intersection(&b).is_subset_of(&a));
        assert!(!a.is_disjoint_from(&b));
        assert!(a.difference(&b).is_disjoint_from(&b));
        assert_eq!(a.len(), 2);
        assert_eq!(format!("{a}"), "{0,3}");
    }

    #[test]
    fn complement_respects_word_tail() {
        let s = WorldSpace::with_cap(7, 10).unwrap();
        let e = Event::empty(&s).complement();
        assert_eq!(e.len(), 128);
        assert!(e.is_full());
    }

    #[test]
    fn wide_spaces_round_trip_membership() {
        let s = space(10);
        let e = Event::from_worlds(&s, [0, 63, 64, 1023]);
        assert_eq!(e.len(), 4);
        assert!(e.contains(64));
        assert!(!e.contains(65));
        assert_eq!(e.iter().collect::<Vec<_>>(), vec![0, 63, 64, 1023]);
        assert_eq!(e.complement().len(), 1020);
    }
}
