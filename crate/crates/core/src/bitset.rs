use std::cmp::Ordering;
use std::fmt;

/// Fixed-capacity set of state indices.
///
/// Two sets compare equal only when they were created with the same
/// capacity, which holds for every set produced inside one construction.
/// Ordering is lexicographic on the ascending element sequence, so the empty
/// set sorts first and `{0, 5}` sorts before `{1}`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct StateSet {
    words: Vec<u64>,
}

impl StateSet {
    pub fn new(capacity: usize) -> Self {
        StateSet { words: vec![0; capacity.div_ceil(64).max(1)] }
    }

    pub fn singleton(capacity: usize, state: usize) -> Self {
        let mut s = Self::new(capacity);
        s.insert(state);
        s
    }

    pub fn full(capacity: usize) -> Self {
        let mut s = Self::new(capacity);
        for q in 0..capacity {
            s.insert(q);
        }
        s
    }

    pub fn from_iter_with_capacity<I: IntoIterator<Item = usize>>(capacity: usize, iter: I) -> Self {
        let mut s = Self::new(capacity);
        for q in iter {
            s.insert(q);
        }
        s
    }

    #[inline]
    pub fn insert(&mut self, q: usize) -> bool {
        let (w, b) = (q / 64, q % 64);
        let was = self.words[w] >> b & 1 == 1;
        self.words[w] |= 1 << b;
        !was
    }

    #[inline]
    pub fn remove(&mut self, q: usize) {
        self.words[q / 64] &= !(1 << (q % 64));
    }

    #[inline]
    pub fn contains(&self, q: usize) -> bool {
        self.words.get(q / 64).is_some_and(|w| w >> (q % 64) & 1 == 1)
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn union_with(&mut self, other: &StateSet) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= *b;
        }
    }

    pub fn intersects(&self, other: &StateSet) -> bool {
        self.words.iter().zip(&other.words).any(|(a, b)| a & b != 0)
    }

    pub fn is_subset(&self, other: &StateSet) -> bool {
        self.words.iter().zip(&other.words).all(|(a, b)| a & !b == 0)
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(i, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let b = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(i * 64 + b)
            })
        })
    }
}

impl Ord for StateSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.iter().cmp(other.iter())
    }
}

impl PartialOrd for StateSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for StateSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}
