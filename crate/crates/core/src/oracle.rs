//! Brute-force reference answers. Slow on purpose; shares no code with the
//! detectors beyond [`find_witness_period`].

use crate::exponent::Exponent;
use crate::repetition::find_witness_period;
use crate::text::{Letter, TextBuffer};

/// Shortest prefix containing an e-repetition, and its leftmost witness.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleResult {
    pub prefix: usize,
    pub start: usize,
    pub period: usize,
}

pub fn oracle_first_repetition<T: Letter>(text: &[T], e: Exponent) -> Option<OracleResult> {
    let t = TextBuffer::from(text);
    for q in 2..=text.len() {
        for start in 1..q {
            if let Some(period) = find_witness_period(&t, start, q, e) {
                return Some(OracleResult {
                    prefix: q,
                    start,
                    period,
                });
            }
        }
    }
    None
}

pub fn oracle_is_free<T: Letter>(text: &[T], e: Exponent) -> bool {
    oracle_first_repetition(text, e).is_none()
}

/// For each `i`, the length of the shortest suffix of `text[1..=i]` that does
/// not occur in `text[1..i-1]`.
pub fn oracle_unioccurrent<T: Letter>(text: &[T]) -> Vec<usize> {
    (0..text.len())
        .map(|last| {
            let prior = &text[..last];
            (1..=last + 1)
                .find(|&t| {
                    let suffix = &text[last + 1 - t..=last];
                    !prior.windows(t).any(|w| w == suffix)
                })
                .expect("the whole prefix never occurs in a shorter text")
        })
        .collect()
}

/// True iff no substring of length at most `max_len` is an e-repetition.
///
/// Checks every start position and every period directly, `O(n * max_len^2)`.
pub fn oracle_windows_free<T: Letter>(text: &[T], e: Exponent, max_len: usize) -> bool {
    let n = text.len();
    for start in 0..n {
        let room = max_len.min(n - start);
        for p in 1..room {
            if !e.reaches(room, p) {
                break;
            }
            let mut len = p;
            while len < room && text[start + len] == text[start + len - p] {
                len += 1;
            }
            if e.reaches(len, p) {
                return false;
            }
        }
    }
    true
}
