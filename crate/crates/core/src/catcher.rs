//! The catcher: detects e-repetition suffixes whose start falls in the segment
//! determined by its defining positions `i < j`.
//!
//! A catcher searches for `v = text[i..i + ceil(h) - 1]` with `h = (j - i + 1) / 2`.
//! Every occurrence of `v` ending at `n` yields a candidate period
//! `p = (n - ceil(h) + 1) - i`, which is then extended to the right one letter
//! per read and to the left by at most `ceil((e - 1) p / floor(h))` letters per
//! read. With history enabled every read pushes the pre-read state, so
//! [`Catcher::backtrack`] restores the exact previous state.

use crate::error::{Error, Result};
use crate::exponent::Exponent;
use crate::matcher::{LetterIndex, MatcherAutomaton, MatcherState, ScanIndex};
use crate::repetition::RepetitionReport;
use crate::text::{Letter, TextBuffer};

/// `p` is a period of `text[left + 1..=n]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PeriodCandidate {
    pub period: usize,
    pub left: usize,
}

/// Everything a catcher needs to resume at a given text length.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CatcherState {
    pub matcher: MatcherState,
    pub candidates: Vec<PeriodCandidate>,
}

/// Flat log of pre-read states: one matcher state and one candidate-list slice
/// per read.
#[derive(Debug, Clone, Default)]
struct History {
    matcher: Vec<u32>,
    ends: Vec<u32>,
    candidates: Vec<PeriodCandidate>,
}

impl History {
    fn push(&mut self, matcher: MatcherState, candidates: &[PeriodCandidate]) {
        self.matcher.push(matcher.0);
        self.candidates.extend_from_slice(candidates);
        self.ends.push(self.candidates.len() as u32);
    }

    fn pop(&mut self, candidates: &mut Vec<PeriodCandidate>) -> Option<MatcherState> {
        let m = self.matcher.pop()?;
        self.ends.pop();
        let from = self.ends.last().copied().unwrap_or(0) as usize;
        candidates.clear();
        candidates.extend_from_slice(&self.candidates[from..]);
        self.candidates.truncate(from);
        Some(MatcherState(m))
    }

    fn len(&self) -> usize {
        self.matcher.len()
    }
}

#[derive(Debug, Clone)]
pub struct Catcher<T, I = ScanIndex<T>> {
    i: usize,
    j: usize,
    h_ceil: usize,
    h_floor: usize,
    e: Exponent,
    matcher: MatcherAutomaton<T, I>,
    candidates: Vec<PeriodCandidate>,
    history: Option<History>,
    fired: Vec<RepetitionReport>,
    synced: usize,
    work: u64,
}

impl<T: Letter, I: LetterIndex<T>> Catcher<T, I> {
    /// Builds the catcher defined by `i` and `j` and replays `text[i + 1..=n]`.
    ///
    /// Reports produced by the final replayed read are available through
    /// [`Catcher::fired`] and [`Catcher::last_report`].
    pub fn new(
        text: &TextBuffer<T>,
        i: usize,
        j: usize,
        e: Exponent,
        keep_history: bool,
    ) -> Result<Self> {
        let n = text.len();
        if i < 1 || j <= i || j > n {
            return Err(Error::CatcherBounds { i, j, n });
        }
        let width = j - i + 1;
        let h_ceil = width.div_ceil(2);
        let h_floor = width / 2;
        let matcher = MatcherAutomaton::new(text.slice(i, i + h_ceil - 1))?;
        let work = (matcher.states() * matcher.distinct_letters()) as u64;
        let mut catcher = Catcher {
            i,
            j,
            h_ceil,
            h_floor,
            e,
            matcher,
            candidates: Vec::new(),
            history: keep_history.then(History::default),
            fired: Vec::new(),
            synced: i,
            work,
        };
        if let Some(h) = catcher.history.as_mut() {
            let len = n - i;
            h.matcher.reserve(len);
            h.ends.reserve(len);
        }
        for m in i + 1..=n {
            catcher.step(text, m);
        }
        Ok(catcher)
    }

    pub fn i(&self) -> usize {
        self.i
    }

    pub fn j(&self) -> usize {
        self.j
    }

    pub fn h_ceil(&self) -> usize {
        self.h_ceil
    }

    pub fn h_floor(&self) -> usize {
        self.h_floor
    }

    /// Text length this catcher has processed.
    pub fn synced_len(&self) -> usize {
        self.synced
    }

    pub fn candidates(&self) -> &[PeriodCandidate] {
        &self.candidates
    }

    pub fn has_history(&self) -> bool {
        self.history.is_some()
    }

    pub fn history_len(&self) -> usize {
        self.history.as_ref().map_or(0, History::len)
    }

    /// All candidates that reached the exponent on the most recent read.
    pub fn fired(&self) -> &[RepetitionReport] {
        &self.fired
    }

    /// The fired report with the smallest start, if any.
    pub fn last_report(&self) -> Option<RepetitionReport> {
        self.fired.iter().min_by_key(|r| r.start).copied()
    }

    pub fn state(&self) -> CatcherState {
        CatcherState {
            matcher: self.matcher.snapshot(),
            candidates: self.candidates.clone(),
        }
    }

    /// Basic steps performed since the last call.
    pub fn take_work(&mut self) -> u64 {
        std::mem::take(&mut self.work)
    }

    /// Processes `text[n]`, where `text` has grown by exactly one letter.
    pub fn read(&mut self, text: &TextBuffer<T>) -> Option<RepetitionReport> {
        let n = text.len();
        assert_eq!(n, self.synced + 1, "catcher read out of sync");
        self.step(text, n);
        self.last_report()
    }

    fn step(&mut self, text: &TextBuffer<T>, n: usize) {
        if let Some(h) = self.history.as_mut() {
            h.push(self.matcher.snapshot(), &self.candidates);
        }
        self.synced = n;
        self.fired.clear();
        let c = text[n];
        self.work += 1;
        if self.matcher.step(&c) {
            let p = (n - self.h_ceil + 1) - self.i;
            self.candidates.push(PeriodCandidate {
                period: p,
                left: self.i - 1,
            });
        }
        let e = self.e;
        let h_floor = self.h_floor as u128;
        let mut work = 0u64;
        let fired = &mut self.fired;
        self.candidates.retain_mut(|cand| {
            work += 1;
            let p = cand.period;
            if text[n] != text[n - p] {
                return false;
            }
            let mut budget = crate::exponent::ceil_div(
                (e.num() - e.den()) as u128 * p as u128,
                e.den() as u128 * h_floor,
            );
            while cand.left > 0 && budget > 0 && text[cand.left] == text[cand.left + p] {
                cand.left -= 1;
                budget -= 1;
                work += 1;
            }
            if e.reaches(n - cand.left, p) {
                fired.push(RepetitionReport {
                    start: cand.left + 1,
                    end: n,
                    period: p,
                });
            }
            true
        });
        self.work += work;
    }

    /// Restores the state from before the most recent read.
    pub fn backtrack(&mut self) -> Result<()> {
        let h = self.history.as_mut().ok_or(Error::HistoryDisabled)?;
        let m = h.pop(&mut self.candidates).ok_or(Error::EmptyText)?;
        self.matcher.restore(m);
        self.synced -= 1;
        self.fired.clear();
        self.work += 1 + self.candidates.len() as u64;
        Ok(())
    }

    /// Whether this catcher covers `[l..=r]` at text length `n`.
    pub fn covers(&self, n: usize, l: usize, r: usize) -> bool {
        catcher_covers(self.i, self.j, n, l, r, self.e)
    }

    /// The largest segment of start positions covered at text length `n`.
    pub fn coverage(&self, n: usize) -> Option<(usize, usize)> {
        coverage(self.i, self.j, n, self.e)
    }

    /// The `|P| <= 2 e (n - i) / (j - i + 1) + 1` bound, valid while
    /// `text[1..n-1]` is e-repetition-free.
    pub fn candidate_bound_holds(&self) -> bool {
        let width = (self.j - self.i + 1) as u128;
        let lhs = self.candidates.len() as u128 * self.e.den() as u128 * width;
        let rhs = 2 * self.e.num() as u128 * (self.synced - self.i) as u128
            + self.e.den() as u128 * width;
        lhs <= rhs
    }
}

/// `n - i < n - r + 1 <= n - l + 1 <= e (n - j)`, evaluated exactly.
pub fn catcher_covers(i: usize, j: usize, n: usize, l: usize, r: usize, e: Exponent) -> bool {
    let (i, j, n, l, r) = (i as i128, j as i128, n as i128, l as i128, r as i128);
    n - i < n - r + 1
        && n - r < n - l + 1
        && e.den() as i128 * (n - l + 1) <= e.num() as i128 * (n - j)
}

/// Covered start positions `[max(1, n + 1 - floor(e (n - j)))..=i]` at length `n`.
pub fn coverage(i: usize, j: usize, n: usize, e: Exponent) -> Option<(usize, usize)> {
    if j >= n {
        return None;
    }
    let reach = ((n - j) as u128 * e.num() as u128 / e.den() as u128) as usize;
    let l = (n + 1).saturating_sub(reach).max(1);
    (l <= i).then_some((l, i))
}
