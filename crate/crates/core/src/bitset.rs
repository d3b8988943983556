//! Fixed-width 256-bit element sets.

use std::cmp::Ordering;
use std::fmt;

/// Largest group order the engine handles.
pub const MAX_ORDER: usize = 256;

const WORDS: usize = MAX_ORDER / 64;

/// A set of element indices below [`MAX_ORDER`], stored as four machine words.
///
/// Ordering is lexicographic on the ascending member sequence, so `{0, 5}`
/// sorts before `{0, 7}` and `{0}` before `{0, 1}`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct ElemSet([u64; WORDS]);

impl ElemSet {
    pub const fn empty() -> Self {
        ElemSet([0; WORDS])
    }

    pub fn singleton(x: usize) -> Self {
        let mut s = Self::empty();
        s.insert(x);
        s
    }

    /// The set `{0, 1, ..., n - 1}`.
    pub fn full(n: usize) -> Self {
        assert!(n <= MAX_ORDER);
        let mut s = Self::empty();
        for (w, word) in s.0.iter_mut().enumerate() {
            let lo = w * 64;
            if n >= lo + 64 {
                *word = u64::MAX;
            } else if n > lo {
                *word = (1u64 << (n - lo)) - 1;
            }
        }
        s
    }

    #[inline]
    pub fn insert(&mut self, x: usize) -> bool {
        let (w, b) = (x / 64, x % 64);
        let fresh = self.0[w] & (1 << b) == 0;
        self.0[w] |= 1 << b;
        fresh
    }

    #[inline]
    pub fn remove(&mut self, x: usize) {
        self.0[x / 64] &= !(1u64 << (x % 64));
    }

    #[inline]
    pub fn contains(&self, x: usize) -> bool {
        x < MAX_ORDER && self.0[x / 64] & (1 << (x % 64)) != 0
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.0.iter().map(|w| w.count_ones() as usize).sum()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.0.iter().all(|&w| w == 0)
    }

    #[inline]
    pub fn is_subset(&self, other: &ElemSet) -> bool {
        self.0.iter().zip(other.0.iter()).all(|(a, b)| a & !b == 0)
    }

    #[inline]
    pub fn union(&self, other: &ElemSet) -> ElemSet {
        let mut out = *self;
        for (a, b) in out.0.iter_mut().zip(other.0.iter()) {
            *a |= b;
        }
        out
    }

    #[inline]
    pub fn intersection(&self, other: &ElemSet) -> ElemSet {
        let mut out = *self;
        for (a, b) in out.0.iter_mut().zip(other.0.iter()) {
            *a &= b;
        }
        out
    }

    pub fn first(&self) -> Option<usize> {
        self.0
            .iter()
            .enumerate()
            .find(|(_, &w)| w != 0)
            .map(|(i, w)| i * 64 + w.trailing_zeros() as usize)
    }

    pub fn iter(&self) -> Iter {
        Iter { words: self.0, word: 0 }
    }

    /// Fixed-width (64 digit) lowercase hex, most significant word first.
    pub fn to_hex(&self) -> String {
        self.0.iter().rev().map(|w| format!("{w:016x}")).collect()
    }

    pub fn from_hex(s: &str) -> Option<ElemSet> {
        if s.len() != 16 * WORDS || !s.is_ascii() {
            return None;
        }
        let mut out = ElemSet::empty();
        for (i, chunk) in s.as_bytes().chunks(16).enumerate() {
            let text = std::str::from_utf8(chunk).ok()?;
            out.0[WORDS - 1 - i] = u64::from_str_radix(text, 16).ok()?;
        }
        Some(out)
    }
}

impl FromIterator<usize> for ElemSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = ElemSet::empty();
        for x in iter {
            s.insert(x);
        }
        s
    }
}

impl Ord for ElemSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.iter().cmp(other.iter())
    }
}

impl PartialOrd for ElemSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for ElemSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

pub struct Iter {
    words: [u64; WORDS],
    word: usize,
}

impl Iterator for Iter {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        while self.word < WORDS {
            let w = self.words[self.word];
            if w != 0 {
                self.words[self.word] = w & (w - 1);
                return Some(self.word * 64 + w.trailing_zeros() as usize);
            }
            self.word += 1;
        }
        None
    }
}
