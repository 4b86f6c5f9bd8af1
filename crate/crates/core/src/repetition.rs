use std::fmt;

use crate::exponent::Exponent;
use crate::text::{Letter, TextBuffer};

/// Witness of an e-repetition `text[start..=end]` with the given period.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RepetitionReport {
    pub start: usize,
    pub end: usize,
    pub period: usize,
}

impl RepetitionReport {
    pub fn len(&self) -> usize {
        self.end + 1 - self.start
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Checks both report invariants against the raw text.
    pub fn is_valid<T: Letter>(&self, text: &TextBuffer<T>, e: Exponent) -> bool {
        self.start >= 1
            && self.start <= self.end
            && self.end <= text.len()
            && self.period >= 1
            && e.reaches(self.len(), self.period)
            && is_period(text, self.start, self.end, self.period)
    }
}

impl fmt::Display for RepetitionReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "start={} end={} period={}",
            self.start, self.end, self.period
        )
    }
}

/// Result of an online step.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DetectorStatus {
    Free,
    /// The text prefix of length `prefix` ends with the reported repetition.
    Found {
        report: RepetitionReport,
        prefix: usize,
    },
}

impl DetectorStatus {
    pub fn is_found(&self) -> bool {
        matches!(self, DetectorStatus::Found { .. })
    }
}

/// True iff `p` is a period of `text[start..=end]`.
pub fn is_period<T: Letter>(text: &TextBuffer<T>, start: usize, end: usize, p: usize) -> bool {
    if start + p > end {
        return true;
    }
    (start..=end - p).all(|x| text[x] == text[x + p])
}

/// Smallest period `p` of `text[start..=end]` with `len >= e * p`.
pub fn find_witness_period<T: Letter>(
    text: &TextBuffer<T>,
    start: usize,
    end: usize,
    e: Exponent,
) -> Option<usize> {
    debug_assert!(1 <= start && start <= end && end <= text.len());
    let len = end + 1 - start;
    (1..=len)
        .take_while(|&p| e.reaches(len, p))
        .find(|&p| is_period(text, start, end, p))
}

/// Smallest period of `word` via the prefix function.
pub(crate) fn minimal_period<T: Letter>(word: &[T]) -> usize {
    let mut border = vec![0usize; word.len()];
    for q in 1..word.len() {
        let mut k = border[q - 1];
        while k > 0 && word[q] != word[k] {
            k = border[k - 1];
        }
        if word[q] == word[k] {
            k += 1;
        }
        border[q] = k;
    }
    word.len() - border.last().copied().unwrap_or(0)
}
