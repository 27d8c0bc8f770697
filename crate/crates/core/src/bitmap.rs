//! Fixed-length bit set backing the semigroup membership table.

use std::fmt;

const WORD_BITS: usize = u64::BITS as usize;

#[derive(Clone, PartialEq, Eq, Hash)]
pub(crate) struct Bitmap {
    len: usize,
    words: Box<[u64]>,
}

impl Bitmap {
    pub(crate) fn new(len: usize) -> Self {
        Bitmap {
            len,
            words: vec![0; len.div_ceil(WORD_BITS)].into_boxed_slice(),
        }
    }

    #[inline]
    pub(crate) fn len(&self) -> usize {
        self.len
    }

    #[inline]
    pub(crate) fn get(&self, i: usize) -> bool {
        debug_assert!(i < self.len);
        self.words[i / WORD_BITS] >> (i % WORD_BITS) & 1 == 1
    }

    #[inline]
    pub(crate) fn set(&mut self, i: usize) {
        debug_assert!(i < self.len);
        self.words[i / WORD_BITS] |= 1 << (i % WORD_BITS);
    }

    #[inline]
    pub(crate) fn clear(&mut self, i: usize) {
        debug_assert!(i < self.len);
        self.words[i / WORD_BITS] &= !(1 << (i % WORD_BITS));
    }

    pub(crate) fn count_ones(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Indices of set bits in ascending order.
    pub(crate) fn ones(&self) -> Ones<'_> {
        Ones {
            words: &self.words,
            index: 0,
            current: self.words.first().copied().unwrap_or(0),
        }
    }

    /// Smallest set index strictly greater than `from`, if any.
    pub(crate) fn next_one(&self, from: usize) -> Option<usize> {
        let start = from + 1;
        if start >= self.len {
            return None;
        }
        let mut w = start / WORD_BITS;
        let mut word = self.words[w] & (!0u64 << (start % WORD_BITS));
        loop {
            if word != 0 {
                let i = w * WORD_BITS + word.trailing_zeros() as usize;
                return (i < self.len).then_some(i);
            }
            w += 1;
            if w == self.words.len() {
                return None;
            }
            word = self.words[w];
        }
    }

    /// Bitwise AND of two maps of possibly different length. Positions past
    /// the end of a map read as set.
    pub(crate) fn and_extended(&self, other: &Bitmap, len: usize) -> Bitmap {
        let mut out = Bitmap::new(len);
        for i in 0..len {
            let a = if i < self.len { self.get(i) } else { true };
            let b = if i < other.len { other.get(i) } else { true };
            if a && b {
                out.set(i);
            }
        }
        out
    }
}

pub(crate) struct Ones<'a> {
    words: &'a [u64],
    index: usize,
    current: u64,
}

impl Iterator for Ones<'_> {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        while self.current == 0 {
            self.index += 1;
            if self.index >= self.words.len() {
                return None;
            }
            self.current = self.words[self.index];
        }
        let bit = self.current.trailing_zeros() as usize;
        self.current &= self.current - 1;
        Some(self.index * WORD_BITS + bit)
    }
}

impl fmt::Debug for Bitmap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.ones()).finish()
    }
}
