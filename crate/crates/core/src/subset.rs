//! Subsets of a brace, stored as bitsets over the element indices.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

/// A set of element indices of a brace of a given order.
///
/// Iteration is always in increasing index order.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Subset {
    order: usize,
    words: Vec<u64>,
}

impl fmt::Debug for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl Subset {
    pub fn empty(order: usize) -> Self {
        Subset { order, words: vec![0; order.div_ceil(64)] }
    }

    /// `{0}`.
    pub fn zero(order: usize) -> Self {
        let mut s = Self::empty(order);
        s.insert(0);
        s
    }

    pub fn full(order: usize) -> Self {
        let mut s = Self::empty(order);
        for a in 0..order {
            s.insert(a);
        }
        s
    }

    pub fn from_elements(order: usize, elements: impl IntoIterator<Item = usize>) -> Self {
        let mut s = Self::empty(order);
        for a in elements {
            s.insert(a);
        }
        s
    }

    /// Order of the parent brace.
    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn contains(&self, a: usize) -> bool {
        a < self.order && self.words[a / 64] >> (a % 64) & 1 == 1
    }

    /// Inserts `a`, returning `true` if it was not present.
    #[inline]
    pub fn insert(&mut self, a: usize) -> bool {
        assert!(a < self.order, "element {a} out of range for order {}", self.order);
        let (w, bit) = (a / 64, 1u64 << (a % 64));
        let fresh = self.words[w] & bit == 0;
        self.words[w] |= bit;
        fresh
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn is_zero(&self) -> bool {
        self.len() == 1 && self.contains(0)
    }

    pub fn is_full(&self) -> bool {
        self.len() == self.order
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(w, &word)| {
            let mut word = word;
            core::iter::from_fn(move || {
                if word == 0 {
                    return None;
                }
                let bit = word.trailing_zeros() as usize;
                word &= word - 1;
                Some(w * 64 + bit)
            })
        })
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    pub fn is_subset(&self, other: &Subset) -> bool {
        self.words.iter().zip(&other.words).all(|(a, b)| a & !b == 0)
    }

    pub fn intersection(&self, other: &Subset) -> Subset {
        Subset { order: self.order, words: self.words.iter().zip(&other.words).map(|(a, b)| a & b).collect() }
    }

    pub fn union(&self, other: &Subset) -> Subset {
        Subset { order: self.order, words: self.words.iter().zip(&other.words).map(|(a, b)| a | b).collect() }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basic_set_operations() {
        let a = Subset::from_elements(130, [0, 5, 64, 129]);
        let b = Subset::from_elements(130, [0, 64]);
        assert_eq!(a.len(), 4);
        assert_eq!(a.to_vec(), vec![0, 5, 64, 129]);
        assert!(b.is_subset(&a));
        assert!(!a.is_subset(&b));
        assert_eq!(a.intersection(&b), b);
        assert_eq!(a.union(&b), a);
        assert!(Subset::zero(3).is_zero());
        assert!(Subset::full(3).is_full());
        assert!(!a.contains(200));
    }
}
