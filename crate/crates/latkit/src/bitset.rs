//! Fixed-universe bitsets for element subsets (filters, ideals, kernels).

/// Index of an element in a finite algebra's universe `{0..n-1}`.
pub type Elem = usize;

/// A subset of a fixed universe `{0..n-1}`, stored as packed 64-bit words.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ElemSet {
    universe: usize,
    words: Vec<u64>,
}

impl ElemSet {
    pub fn empty(universe: usize) -> Self {
        ElemSet {
            universe,
            words: vec![0; universe.div_ceil(64)],
        }
    }

    pub fn full(universe: usize) -> Self {
        let mut s = Self::empty(universe);
        for e in 0..universe {
            s.insert(e);
        }
        s
    }

    pub fn singleton(universe: usize, e: Elem) -> Self {
        let mut s = Self::empty(universe);
        s.insert(e);
        s
    }

    pub fn from_elems(universe: usize, elems: impl IntoIterator<Item = Elem>) -> Self {
        let mut s = Self::empty(universe);
        for e in elems {
            s.insert(e);
        }
        s
    }

    pub fn universe(&self) -> usize {
        self.universe
    }

    pub fn insert(&mut self, e: Elem) {
        debug_assert!(e < self.universe);
        self.words[e / 64] |= 1 << (e % 64);
    }

    pub fn remove(&mut self, e: Elem) {
        debug_assert!(e < self.universe);
        self.words[e / 64] &= !(1 << (e % 64));
    }

    pub fn contains(&self, e: Elem) -> bool {
        debug_assert!(e < self.universe);
        self.words[e / 64] >> (e % 64) & 1 == 1
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn is_subset(&self, other: &ElemSet) -> bool {
        debug_assert_eq!(self.universe, other.universe);
        self.words
            .iter()
            .zip(&other.words)
            .all(|(a, b)| a & !b == 0)
    }

    pub fn union_with(&mut self, other: &ElemSet) {
        debug_assert_eq!(self.universe, other.universe);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
    }

    pub fn intersect_with(&mut self, other: &ElemSet) {
        debug_assert_eq!(self.universe, other.universe);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= b;
        }
    }

    pub fn complement(&self) -> ElemSet {
        let mut out = Self::empty(self.universe);
        for e in 0..self.universe {
            if !self.contains(e) {
                out.insert(e);
            }
        }
        out
    }

    pub fn iter(&self) -> impl Iterator<Item = Elem> + '_ {
        (0..self.universe).filter(move |&e| self.contains(e))
    }
}

impl std::fmt::Debug for ElemSet {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

// Deterministic order: the set whose smallest distinguishing element is
// present sorts first. Used for tie-breaking in witness families.
impl Ord for ElemSet {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        debug_assert_eq!(self.universe, other.universe);
        for (a, b) in self.words.iter().zip(&other.words) {
            let diff = a ^ b;
            if diff != 0 {
                let bit = diff.trailing_zeros();
                return if a >> bit & 1 == 1 {
                    std::cmp::Ordering::Less
                } else {
                    std::cmp::Ordering::Greater
                };
            }
        }
        std::cmp::Ordering::Equal
    }
}

impl PartialOrd for ElemSet {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}
