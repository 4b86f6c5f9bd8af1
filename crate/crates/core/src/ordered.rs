//! Online detector for ordered alphabets, without backtracking.
//!
//! With `t_n` the shortest unioccurrent suffix length, an e-repetition suffix
//! of a text whose proper prefix is free has length in `[t_n, e/(e-1) t_n)`.
//! The detector therefore only needs to cover starts in `(l_n..r_n]`; it keeps
//! a wider window `(l..r]` covered by a constant number of catchers and rebuilds
//! them only when the window stops containing `(l_n..r_n]` or becomes too
//! narrow relative to its distance from `n`.

use num_bigint::BigUint;
use num_rational::Ratio;

use crate::catcher::Catcher;
use crate::error::{Error, Result};
use crate::exponent::{ceil_div, Exponent};
use crate::matcher::SortedIndex;
use crate::repetition::{DetectorStatus, RepetitionReport};
use crate::scan::{finalize, short_suffix_scan};
use crate::suffix_tracker::SuffixTracker;
use crate::text::{Letter, TextBuffer};
use crate::OnlineDetector;

/// A constant-size system of catchers covering a window that ends `span`
/// letters before `n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoverPlan {
    /// `(e + 1) / 2e`
    pub alpha: Ratio<u64>,
    /// `e * alpha = (e + 1) / 2`
    pub growth: Ratio<u64>,
    /// Cover factor `c = 4e / (e - 1) + 1`.
    pub factor: Ratio<u64>,
    /// Smallest `m` with `growth^(m + 1) >= factor`.
    pub m: usize,
    /// Defining positions `(i_k, j_k)`, nearest to `n` first.
    pub params: Vec<(usize, usize)>,
}

/// `alpha`, `growth`, `factor` and `m` for `e`.
pub fn cover_constants(e: Exponent) -> (Ratio<u64>, Ratio<u64>, Ratio<u64>, usize) {
    let (num, den) = (e.num(), e.den());
    let alpha = Ratio::new(num + den, 2 * num);
    let growth = Ratio::new(num + den, 2 * den);
    let factor = Ratio::new(5 * num - den, num - den);
    // growth^(m+1) >= factor  <=>  (num+den)^(m+1) (num-den) >= (2 den)^(m+1) (5 num - den)
    let up = BigUint::from(num + den);
    let down = BigUint::from(2 * den);
    let lhs_tail = BigUint::from(num - den);
    let rhs_tail = BigUint::from(5 * num - den);
    let mut power_up = up.clone();
    let mut power_down = down.clone();
    let mut m = 0;
    while &power_up * &lhs_tail < &power_down * &rhs_tail {
        power_up *= &up;
        power_down *= &down;
        m += 1;
    }
    (alpha, growth, factor, m)
}

/// Catchers covering `(max(0, n - ceil(c * span))..n - span]` at length `n`.
///
/// The distances `D_k = n - i_k` grow by `ceil(growth * D_k)` and each
/// `j_k` is placed so that `e (n - j_k) >= D_{k+1}`, which makes consecutive
/// covered segments meet exactly.
pub fn cover_build(n: usize, span: usize, e: Exponent) -> Result<CoverPlan> {
    let (num, den) = (e.num() as u128, e.den() as u128);
    if span == 0 || span >= n || (num - den) * (span as u128) < 4 * num {
        return Err(Error::SpanTooSmall { span });
    }
    let (alpha, growth, factor, m) = cover_constants(e);
    let reach = ceil_div((5 * num - den) * span as u128, num - den);
    let target = n.saturating_sub(reach);
    let mut params = Vec::new();
    let mut dist = span;
    loop {
        let next = ceil_div((num + den) * dist as u128, 2 * den);
        let i = n - dist;
        let j = n - e.ceil_div(next);
        if j < i + 1 {
            return Err(Error::SpanTooSmall { span });
        }
        params.push((i, j));
        // Covered down to position `target + 1` (or 1)?
        if num * (n - j) as u128 >= den * (n - target) as u128 {
            break;
        }
        dist = next;
    }
    debug_assert!(params.len() <= m + 1);
    Ok(CoverPlan {
        alpha,
        growth,
        factor,
        m,
        params,
    })
}

#[derive(Debug, Clone)]
pub struct OrderedDetector<T> {
    e: Exponent,
    text: TextBuffer<T>,
    tracker: SuffixTracker<T>,
    window: Option<(usize, usize)>,
    catchers: Vec<Catcher<T, SortedIndex<T>>>,
    t0: usize,
    naive_len: usize,
    max_catchers: usize,
    last_t: usize,
    found: Option<(RepetitionReport, usize)>,
    skipped: usize,
    rebuilds: u64,
    ops: u64,
    reports: Vec<RepetitionReport>,
}

impl<T: Letter + Ord> OrderedDetector<T> {
    pub fn new(e: Exponent) -> Self {
        let (num, den) = (e.num() as u128, e.den() as u128);
        // smallest t with (e-1)/(2e) * ceil(t/2) >= 2
        let half = ceil_div(4 * num, num - den);
        let t0 = 2 * half - 1;
        let (_, _, _, m) = cover_constants(e);
        OrderedDetector {
            e,
            text: TextBuffer::new(),
            tracker: SuffixTracker::new(),
            window: None,
            catchers: Vec::new(),
            t0,
            naive_len: e.ceil_mul_ratio(t0) - 1,
            max_catchers: m + 1,
            last_t: 0,
            found: None,
            skipped: 0,
            rebuilds: 0,
            ops: 0,
            reports: Vec::new(),
        }
    }

    pub fn exponent(&self) -> Exponent {
        self.e
    }

    /// Below this `t_n` only short suffixes are scanned.
    pub fn t0(&self) -> usize {
        self.t0
    }

    pub fn naive_len(&self) -> usize {
        self.naive_len
    }

    pub fn max_catchers(&self) -> usize {
        self.max_catchers
    }

    pub fn catcher_count(&self) -> usize {
        self.catchers.len()
    }

    pub fn window(&self) -> Option<(usize, usize)> {
        self.window
    }

    /// `t_n` of the last processed letter.
    pub fn last_t(&self) -> usize {
        self.last_t
    }

    pub fn rebuilds(&self) -> u64 {
        self.rebuilds
    }

    pub fn text(&self) -> &TextBuffer<T> {
        &self.text
    }

    pub fn len(&self) -> usize {
        self.text.len() + self.skipped
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn ops(&self) -> u64 {
        self.ops
    }

    pub fn status(&self) -> DetectorStatus {
        match self.found {
            Some((report, prefix)) => DetectorStatus::Found { report, prefix },
            None => DetectorStatus::Free,
        }
    }

    /// `(l_n, r_n)` for the current length and `t_n`.
    pub fn target_segment(&self) -> (usize, usize) {
        let n = self.text.len();
        let t = self.last_t;
        (n.saturating_sub(self.e.ceil_mul_ratio(t)), n + 1 - t)
    }

    pub fn read(&mut self, c: T) -> DetectorStatus {
        if self.found.is_some() {
            self.skipped += 1;
            return self.status();
        }
        self.text.push(c);
        let n = self.text.len();
        let t = self.tracker.push(c);
        self.ops += self.tracker.take_work();
        self.last_t = t;
        self.reports.clear();
        if t < self.t0 {
            // A new letter (t = 1) ends no repetition; otherwise every
            // repetition is shorter than e/(e-1) * t0.
            self.catchers.clear();
            self.window = None;
            if t > 1 {
                let mut work = 0;
                if let Some(r) = short_suffix_scan(&self.text, self.naive_len, self.e, &mut work) {
                    self.reports.push(r);
                }
                self.ops += work;
            }
        } else {
            for catcher in &mut self.catchers {
                catcher.read(&self.text);
                self.reports.extend_from_slice(catcher.fired());
                self.ops += 1 + catcher.take_work();
            }
            let (ln, rn) = self.target_segment();
            let stale = match self.window {
                None => true,
                Some((l, r)) => ln < l || rn > r || n - r > 2 * (r - l),
            };
            if stale {
                self.rebuild(n, t);
            }
        }
        if !self.reports.is_empty() {
            let mut work = 0;
            let report = finalize(&self.text, &self.reports, self.e, &mut work)
                .expect("reports are non-empty");
            self.ops += work;
            self.found = Some((report, n));
        }
        self.status()
    }

    fn rebuild(&mut self, n: usize, t: usize) {
        let (num, den) = (self.e.num() as u128, self.e.den() as u128);
        let l = n.saturating_sub(ceil_div(2 * num * t as u128, num - den));
        let r = n - t.div_ceil(2);
        self.window = Some((l, r));
        let plan = cover_build(n, n - r, self.e).expect("t >= t0 gives a wide enough span");
        self.catchers.clear();
        for (i, j) in plan.params {
            let mut catcher = Catcher::new(&self.text, i, j, self.e, false)
                .expect("cover catchers are well formed");
            self.reports.extend_from_slice(catcher.fired());
            self.ops += catcher.take_work();
            self.catchers.push(catcher);
        }
        self.rebuilds += 1;
    }

    /// `l <= l_n <= r_n <= r` and `n - r <= 2 (r - l)`, when a window is active.
    pub fn window_holds(&self) -> bool {
        match self.window {
            None => self.last_t < self.t0,
            Some((l, r)) => {
                let n = self.text.len();
                let (ln, rn) = self.target_segment();
                l <= ln && ln <= rn && rn <= r && n - r <= 2 * (r - l)
            }
        }
    }
}

impl<T: Letter + Ord> OnlineDetector<T> for OrderedDetector<T> {
    fn read(&mut self, c: T) -> DetectorStatus {
        OrderedDetector::read(self, c)
    }

    fn status(&self) -> DetectorStatus {
        OrderedDetector::status(self)
    }

    fn len(&self) -> usize {
        OrderedDetector::len(self)
    }

    fn ops(&self) -> u64 {
        self.ops
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catcher::{catcher_covers, coverage};
    use crate::oracle::oracle_first_repetition;

    fn e(n: u64, d: u64) -> Exponent {
        Exponent::new(n, d).unwrap()
    }

    #[test]
    fn constants() {
        let (alpha, growth, _, _) = cover_constants(e(3, 2));
        assert_eq!(alpha, Ratio::new(5, 6));
        assert_eq!(growth, Ratio::new(5, 4));
        let (_, growth, factor, m) = cover_constants(e(2, 1));
        assert_eq!(growth, Ratio::new(3, 2));
        assert_eq!(factor, Ratio::from_integer(9));
        assert_eq!(m + 1, 6);
        let d = OrderedDetector::<u8>::new(e(2, 1));
        assert_eq!((d.t0(), d.naive_len(), d.max_catchers()), (15, 29, 6));
        let d = OrderedDetector::<u8>::new(e(3, 2));
        assert_eq!(d.t0(), 23);
    }

    #[test]
    fn cover_example() {
        let plan = cover_build(100, 10, e(2, 1)).unwrap();
        assert_eq!(plan.params[0], (90, 92));
        assert!(catcher_covers(90, 92, 100, 86, 90, e(2, 1)));
        assert!(matches!(
            cover_build(100, 3, e(2, 1)),
            Err(Error::SpanTooSmall { .. })
        ));
    }

    // Brute-force check that the covered segments together contain the target window.
    #[test]
    fn covers_target_window() {
        for ex in [e(3, 2), e(7, 4), e(2, 1), e(5, 2), e(3, 1), e(11, 10)] {
            let (num, den) = (ex.num() as u128, ex.den() as u128);
            let min_span = ceil_div(4 * num, num - den);
            for n in [50usize, 97, 400, 1000, 5000] {
                for span in (min_span..n).step_by(7) {
                    let plan = cover_build(n, span, ex).unwrap();
                    assert!(plan.params.len() <= plan.m + 1);
                    let target =
                        n.saturating_sub(ceil_div((5 * num - den) * span as u128, num - den));
                    let mut covered = vec![false; n + 1];
                    for &(i, j) in &plan.params {
                        assert!(j > i && j < n && i >= 1);
                        // width bound (e - 1)/(2e) * span, up to one letter of rounding
                        assert!(2 * num * (j - i + 2) as u128 >= (num - den) * span as u128);
                        if let Some((l, r)) = coverage(i, j, n, ex) {
                            covered[l..=r].iter_mut().for_each(|x| *x = true);
                        }
                    }
                    if let Some(x) = (target + 1..=n - span).find(|&x| !covered[x]) {
                        panic!("e={ex} n={n} span={span} gap at {x}");
                    }
                }
            }
        }
    }

    fn feed(d: &mut OrderedDetector<u8>, s: &[u8]) -> Vec<DetectorStatus> {
        s.iter().map(|&c| d.read(c)).collect()
    }

    #[test]
    fn read_examples() {
        let mut d = OrderedDetector::new(e(2, 1));
        let st = feed(&mut d, b"abab");
        assert_eq!(st[..3], [DetectorStatus::Free; 3]);
        assert_eq!(
            st[3],
            DetectorStatus::Found {
                report: RepetitionReport {
                    start: 1,
                    end: 4,
                    period: 2
                },
                prefix: 4
            }
        );
        let mut d = OrderedDetector::new(e(3, 2));
        assert!(feed(&mut d, b"xx")[1].is_found());
    }

    #[test]
    fn thue_morse_prefix() {
        let tm = crate::words::thue_morse(64);
        let want = oracle_first_repetition(&tm, e(2, 1)).unwrap();
        let mut d = OrderedDetector::new(e(2, 1));
        let first = feed(&mut d, &tm)
            .into_iter()
            .find(|s| s.is_found())
            .unwrap();
        let DetectorStatus::Found { report, prefix } = first else {
            unreachable!()
        };
        assert_eq!(
            (prefix, report.start, report.period),
            (want.prefix, want.start, want.period)
        );
    }

    #[test]
    fn square_free_stays_free() {
        let w = crate::words::ternary_square_free(1000);
        let mut d = OrderedDetector::new(e(2, 1));
        for &c in &w {
            assert_eq!(d.read(c), DetectorStatus::Free);
            assert!(d.window_holds());
            assert!(d.catcher_count() <= d.max_catchers());
        }
        assert!(d.rebuilds() > 0);
    }
}
