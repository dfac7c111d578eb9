//! Fixed-capacity vertex sets packed into 32-bit words.

use std::fmt;

use crate::error::{Error, Result};

/// Storage word. Clique searches intersect these in bulk.
pub type Word = u32;

pub const WORD_BITS: usize = Word::BITS as usize;

#[inline]
fn words_for(capacity: usize) -> usize {
    capacity.div_ceil(WORD_BITS)
}

/// A set of vertex IDs in `0..capacity`.
///
/// Bits at positions `>= capacity` are always zero, so the popcount of the
/// words is the cardinality of the set.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct VertexBitset {
    words: Vec<Word>,
    capacity: usize,
}

impl VertexBitset {
    /// Empty set able to hold `0..capacity`.
    pub fn new(capacity: usize) -> Self {
        VertexBitset {
            words: vec![0; words_for(capacity)],
            capacity,
        }
    }

    /// Set holding every vertex in `0..capacity`.
    pub fn full(capacity: usize) -> Self {
        let mut set = VertexBitset {
            words: vec![Word::MAX; words_for(capacity)],
            capacity,
        };
        set.mask_tail();
        set
    }

    pub fn capacity(&self) -> usize {
        self.capacity
    }

    pub fn words(&self) -> &[Word] {
        &self.words
    }

    fn mask_tail(&mut self) {
        let rem = self.capacity % WORD_BITS;
        if rem != 0 {
            if let Some(last) = self.words.last_mut() {
                *last &= (1 << rem) - 1;
            }
        }
    }

    #[inline]
    fn check_index(&self, v: usize) {
        assert!(
            v < self.capacity,
            "vertex {v} out of range for bitset of capacity {}",
            self.capacity
        );
    }

    /// Adds `v`; returns whether it was newly inserted.
    ///
    /// Panics if `v >= capacity`.
    #[inline]
    pub fn insert(&mut self, v: usize) -> bool {
        self.check_index(v);
        let (w, b) = (v / WORD_BITS, v % WORD_BITS);
        let was = self.words[w] >> b & 1 == 1;
        self.words[w] |= 1 << b;
        !was
    }

    /// Removes `v`; returns whether it was present.
    ///
    /// Panics if `v >= capacity`.
    #[inline]
    pub fn remove(&mut self, v: usize) -> bool {
        self.check_index(v);
        let (w, b) = (v / WORD_BITS, v % WORD_BITS);
        let was = self.words[w] >> b & 1 == 1;
        self.words[w] &= !(1 << b);
        was
    }

    #[inline]
    pub fn contains(&self, v: usize) -> bool {
        v < self.capacity && self.words[v / WORD_BITS] >> (v % WORD_BITS) & 1 == 1
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn clear(&mut self) {
        self.words.fill(0);
    }

    fn check_same_capacity(&self, other: &VertexBitset) -> Result<()> {
        if self.capacity != other.capacity {
            return Err(Error::usage(format!(
                "bitset capacity mismatch: {} vs {}",
                self.capacity, other.capacity
            )));
        }
        Ok(())
    }

    /// In-place `self ∩= other`.
    pub fn intersect_with(&mut self, other: &VertexBitset) -> Result<()> {
        self.check_same_capacity(other)?;
        self.intersect_unchecked(other);
        Ok(())
    }

    /// `|self ∩ other|` without materializing the intersection.
    pub fn intersection_count(&self, other: &VertexBitset) -> Result<usize> {
        self.check_same_capacity(other)?;
        Ok(self.intersection_count_unchecked(other))
    }

    #[inline]
    pub(crate) fn intersect_unchecked(&mut self, other: &VertexBitset) {
        debug_assert_eq!(self.capacity, other.capacity);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= *b;
        }
    }

    #[inline]
    pub(crate) fn intersection_count_unchecked(&self, other: &VertexBitset) -> usize {
        debug_assert_eq!(self.capacity, other.capacity);
        self.words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
    }

    /// Overwrites `self` with `a ∩ b`. All three share one capacity.
    #[inline]
    pub(crate) fn assign_intersection(&mut self, a: &VertexBitset, b: &VertexBitset) {
        debug_assert!(self.capacity == a.capacity && a.capacity == b.capacity);
        for ((dst, x), y) in self.words.iter_mut().zip(&a.words).zip(&b.words) {
            *dst = x & y;
        }
    }

    /// Removes and returns the smallest member.
    pub fn pop_first(&mut self) -> Option<usize> {
        for (i, w) in self.words.iter_mut().enumerate() {
            if *w != 0 {
                let b = w.trailing_zeros() as usize;
                *w &= *w - 1;
                return Some(i * WORD_BITS + b);
            }
        }
        None
    }

    /// Members in ascending order.
    pub fn iter(&self) -> Iter<'_> {
        Iter {
            words: &self.words,
            index: 0,
            current: self.words.first().copied().unwrap_or(0),
        }
    }
}

impl fmt::Debug for VertexBitset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

pub struct Iter<'a> {
    words: &'a [Word],
    index: usize,
    current: Word,
}

impl Iterator for Iter<'_> {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        loop {
            if self.current != 0 {
                let b = self.current.trailing_zeros() as usize;
                self.current &= self.current - 1;
                return Some(self.index * WORD_BITS + b);
            }
            self.index += 1;
            self.current = *self.words.get(self.index)?;
        }
    }
}

impl<'a> IntoIterator for &'a VertexBitset {
    type Item = usize;
    type IntoIter = Iter<'a>;

    fn into_iter(self) -> Iter<'a> {
        self.iter()
    }
}
