//! Single-pattern matching automaton with a one-integer state.
//!
//! The automaton replaces a real-time constant-space matcher: each step is a
//! table lookup (plus a letter-to-column lookup), and the state can be saved and
//! restored as a single `u32`. The price is `O(P * d)` table space for a pattern
//! of length `P` with `d` distinct letters.

use std::marker::PhantomData;

use crate::error::{Error, Result};
use crate::text::Letter;

/// Maps a letter to its column in the transition table.
pub trait LetterIndex<T> {
    fn build(distinct: Vec<T>) -> Self;
    fn column(&self, c: &T) -> Option<usize>;
    fn len(&self) -> usize;
    fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

/// Linear scan over the pattern's distinct letters; needs only equality.
#[derive(Debug, Clone)]
pub struct ScanIndex<T>(Vec<T>);

impl<T: Letter> LetterIndex<T> for ScanIndex<T> {
    fn build(distinct: Vec<T>) -> Self {
        ScanIndex(distinct)
    }

    #[inline]
    fn column(&self, c: &T) -> Option<usize> {
        self.0.iter().position(|x| x == c)
    }

    fn len(&self) -> usize {
        self.0.len()
    }
}

/// Binary search over the sorted distinct letters.
#[derive(Debug, Clone)]
pub struct SortedIndex<T> {
    letters: Vec<T>,
    columns: Vec<usize>,
}

impl<T: Letter + Ord> LetterIndex<T> for SortedIndex<T> {
    fn build(distinct: Vec<T>) -> Self {
        let mut order: Vec<usize> = (0..distinct.len()).collect();
        order.sort_by(|&a, &b| distinct[a].cmp(&distinct[b]));
        SortedIndex {
            letters: order.iter().map(|&k| distinct[k]).collect(),
            columns: order,
        }
    }

    #[inline]
    fn column(&self, c: &T) -> Option<usize> {
        self.letters.binary_search(c).ok().map(|k| self.columns[k])
    }

    fn len(&self) -> usize {
        self.letters.len()
    }
}

/// Saved automaton state.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MatcherState(pub u32);

#[derive(Debug, Clone)]
pub struct MatcherAutomaton<T, I = ScanIndex<T>> {
    pattern_len: usize,
    index: I,
    // (pattern_len + 1) rows of `index.len()` columns
    delta: Vec<u32>,
    state: u32,
    _letter: PhantomData<T>,
}

impl<T: Letter, I: LetterIndex<T>> MatcherAutomaton<T, I> {
    pub fn new(pattern: &[T]) -> Result<Self> {
        if pattern.is_empty() {
            return Err(Error::EmptyPattern);
        }
        let mut distinct: Vec<T> = Vec::new();
        let mut codes = Vec::with_capacity(pattern.len());
        for c in pattern {
            let code = match distinct.iter().position(|x| x == c) {
                Some(k) => k,
                None => {
                    distinct.push(*c);
                    distinct.len() - 1
                }
            };
            codes.push(code);
        }
        let d = distinct.len();
        let p = pattern.len();
        let mut delta = vec![0u32; (p + 1) * d];
        delta[codes[0]] = 1;
        // `fallback` is the state reached on pattern[1..q], the KMP failure state.
        let mut fallback = 0usize;
        for q in 1..=p {
            let (done, row) = delta.split_at_mut(q * d);
            row[..d].copy_from_slice(&done[fallback * d..fallback * d + d]);
            if q < p {
                row[codes[q]] = (q + 1) as u32;
                fallback = done[fallback * d + codes[q]] as usize;
            }
        }
        Ok(MatcherAutomaton {
            pattern_len: p,
            index: I::build(distinct),
            delta,
            state: 0,
            _letter: PhantomData,
        })
    }

    pub fn pattern_len(&self) -> usize {
        self.pattern_len
    }

    pub fn distinct_letters(&self) -> usize {
        self.index.len()
    }

    /// Number of states, `pattern_len + 1`.
    pub fn states(&self) -> usize {
        self.pattern_len + 1
    }

    pub fn state(&self) -> usize {
        self.state as usize
    }

    /// Feeds one letter; true iff a full occurrence ends here.
    #[inline]
    pub fn step(&mut self, c: &T) -> bool {
        self.state = match self.index.column(c) {
            Some(col) => self.delta[self.state as usize * self.index.len() + col],
            None => 0,
        };
        self.state as usize == self.pattern_len
    }

    pub fn snapshot(&self) -> MatcherState {
        MatcherState(self.state)
    }

    pub fn restore(&mut self, s: MatcherState) {
        debug_assert!(s.0 as usize <= self.pattern_len, "foreign matcher state");
        self.state = s.0;
    }

    pub fn reset(&mut self) {
        self.state = 0;
    }
}
