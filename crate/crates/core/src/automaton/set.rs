use std::fmt;

/// A subset of `0..64`, one bit per state.
///
/// Sets produced through a [`Dfa`](super::Dfa) never have bits at or above
/// the automaton's state count.
#[derive(Copy, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct StateSet(u64);

impl StateSet {
    pub const fn empty() -> Self {
        StateSet(0)
    }

    /// `{0, .., n-1}`.
    pub const fn full(n: usize) -> Self {
        if n >= 64 {
            StateSet(u64::MAX)
        } else {
            StateSet((1u64 << n) - 1)
        }
    }

    pub const fn singleton(q: usize) -> Self {
        StateSet(1u64 << q)
    }

    pub const fn from_bits(bits: u64) -> Self {
        StateSet(bits)
    }

    pub const fn bits(self) -> u64 {
        self.0
    }

    pub const fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub const fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub const fn is_singleton(self) -> bool {
        self.0 != 0 && self.0 & (self.0 - 1) == 0
    }

    pub const fn contains(self, q: usize) -> bool {
        q < 64 && self.0 >> q & 1 == 1
    }

    pub fn insert(&mut self, q: usize) {
        self.0 |= 1u64 << q;
    }

    pub fn remove(&mut self, q: usize) {
        self.0 &= !(1u64 << q);
    }

    pub const fn union(self, other: Self) -> Self {
        StateSet(self.0 | other.0)
    }

    pub const fn intersection(self, other: Self) -> Self {
        StateSet(self.0 & other.0)
    }

    pub const fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    /// Smallest member, if any.
    pub fn first(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    /// Members in increasing order.
    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                return None;
            }
            let q = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            Some(q)
        })
    }
}

impl FromIterator<usize> for StateSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut set = StateSet::empty();
        for q in iter {
            set.insert(q);
        }
        set
    }
}

impl fmt::Debug for StateSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basics() {
        let s: StateSet = [0, 3, 5].into_iter().collect();
        assert_eq!(s.len(), 3);
        assert!(s.contains(3) && !s.contains(4));
        assert_eq!(s.iter().collect::<Vec<_>>(), vec![0, 3, 5]);
        assert!(StateSet::singleton(7).is_singleton());
        assert!(!s.is_singleton());
        assert!(!StateSet::empty().is_singleton());
        assert_eq!(StateSet::full(3).bits(), 0b111);
        assert_eq!(StateSet::full(64).len(), 64);
        assert!(StateSet::singleton(3).is_subset(s));
        assert_eq!(s.first(), Some(0));
        assert_eq!(format!("{:?}", s), "{0, 3, 5}");
    }
}
