//! Short-suffix scanning and exact witness finalization shared by both detectors.

use crate::exponent::Exponent;
use crate::repetition::{minimal_period, RepetitionReport};
use crate::text::{Letter, TextBuffer};

/// Leftmost e-repetition suffix of length at most `max_len`.
///
/// For each period `p` the longest suffix with period `p` (capped at `max_len`)
/// is measured by direct comparison.
pub(crate) fn short_suffix_scan<T: Letter>(
    text: &TextBuffer<T>,
    max_len: usize,
    e: Exponent,
    work: &mut u64,
) -> Option<RepetitionReport> {
    let n = text.len();
    let cap = max_len.min(n);
    let mut best: Option<RepetitionReport> = None;
    let mut p = 1;
    while p < cap && e.reaches(cap, p) {
        let mut len = p;
        while len < cap && text[n - len] == text[n - len + p] {
            len += 1;
        }
        *work += (len - p + 1) as u64;
        if e.reaches(len, p) && best.is_none_or(|b| n - len + 1 < b.start) {
            best = Some(RepetitionReport {
                start: n - len + 1,
                end: n,
                period: p,
            });
        }
        p += 1;
    }
    best
}

/// Turns the raw reports of one step into the leftmost witness.
///
/// Each report is extended maximally to the left with its own period; the
/// leftmost start wins and its period is replaced by the minimal period of the
/// whole witness.
pub(crate) fn finalize<T: Letter>(
    text: &TextBuffer<T>,
    reports: &[RepetitionReport],
    e: Exponent,
    work: &mut u64,
) -> Option<RepetitionReport> {
    let n = text.len();
    let start = reports
        .iter()
        .map(|r| {
            debug_assert_eq!(r.end, n);
            let p = r.period;
            let mut left = r.start - 1;
            while left > 0 && text[left] == text[left + p] {
                left -= 1;
            }
            *work += (r.start - left) as u64;
            left + 1
        })
        .min()?;
    let word = text.slice(start, n);
    *work += word.len() as u64;
    let period = minimal_period(word);
    let report = RepetitionReport {
        start,
        end: n,
        period,
    };
    debug_assert!(report.is_valid(text, e));
    Some(report)
}
