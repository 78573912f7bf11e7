//! Fixed-universe bitsets used for adjacency masks and candidate sets.

/// A bitset over a fixed universe `0..len`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BitSet {
    words: Vec<u64>,
    len: usize,
}

impl BitSet {
    pub fn new(len: usize) -> Self {
        BitSet {
            words: vec![0u64; len.div_ceil(64)],
            len,
        }
    }

    pub fn full(len: usize) -> Self {
        let mut s = Self::new(len);
        for i in 0..len {
            s.insert(i);
        }
        s
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.len
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    #[inline]
    pub fn insert(&mut self, i: usize) {
        debug_assert!(i < self.len);
        self.words[i / 64] |= 1u64 << (i % 64);
    }

    #[inline]
    pub fn remove(&mut self, i: usize) {
        debug_assert!(i < self.len);
        self.words[i / 64] &= !(1u64 << (i % 64));
    }

    #[inline]
    pub fn contains(&self, i: usize) -> bool {
        debug_assert!(i < self.len);
        (self.words[i / 64] >> (i % 64)) & 1 == 1
    }

    pub fn count(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn and_assign(&mut self, other: &BitSet) {
        debug_assert_eq!(self.len, other.len);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= b;
        }
    }

    /// Intersection size without allocating.
    pub fn and_count(&self, other: &BitSet) -> usize {
        self.words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
    }

    /// Keeps only elements strictly below `bound`.
    pub fn truncate_below(&mut self, bound: usize) {
        for w in (bound.div_ceil(64))..self.words.len() {
            self.words[w] = 0;
        }
        if bound < self.len && bound % 64 != 0 {
            self.words[bound / 64] &= (1u64 << (bound % 64)) - 1;
        } else if bound == 0 {
            if let Some(w) = self.words.first_mut() {
                *w = 0;
            }
        }
    }

    pub fn first(&self) -> Option<usize> {
        for (wi, &w) in self.words.iter().enumerate() {
            if w != 0 {
                return Some(wi * 64 + w.trailing_zeros() as usize);
            }
        }
        None
    }

    pub fn iter(&self) -> BitIter<'_> {
        BitIter {
            set: self,
            word: 0,
            bits: self.words.first().copied().unwrap_or(0),
        }
    }
}

pub struct BitIter<'a> {
    set: &'a BitSet,
    word: usize,
    bits: u64,
}

impl Iterator for BitIter<'_> {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        loop {
            if self.bits != 0 {
                let b = self.bits.trailing_zeros() as usize;
                self.bits &= self.bits - 1;
                return Some(self.word * 64 + b);
            }
            self.word += 1;
            if self.word >= self.set.words.len() {
                return None;
            }
            self.bits = self.set.words[self.word];
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn insert_iter_roundtrip() {
        let mut s = BitSet::new(200);
        for i in [0usize, 63, 64, 65, 130, 199] {
            s.insert(i);
        }
        assert_eq!(s.iter().collect::<Vec<_>>(), vec![0, 63, 64, 65, 130, 199]);
        assert_eq!(s.count(), 6);
        s.remove(64);
        assert!(!s.contains(64));
        assert_eq!(s.count(), 5);
    }

    #[test]
    fn truncate_below_keeps_prefix() {
        let mut s = BitSet::full(150);
        s.truncate_below(70);
        assert_eq!(s.count(), 70);
        assert_eq!(s.iter().last(), Some(69));
        s.truncate_below(0);
        assert!(s.is_empty());
    }

    #[test]
    fn and_count_matches_materialized() {
        let mut a = BitSet::new(100);
        let mut b = BitSet::new(100);
        for i in (0..100).step_by(3) {
            a.insert(i);
        }
        for i in (0..100).step_by(5) {
            b.insert(i);
        }
        let mut c = a.clone();
        c.and_assign(&b);
        assert_eq!(a.and_count(&b), c.count());
        assert_eq!(c.iter().collect::<Vec<_>>(), (0..100).step_by(15).collect::<Vec<_>>());
    }
}
