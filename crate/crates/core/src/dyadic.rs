//! Online detector with backtracking over an unordered alphabet.
//!
//! For every level `k >= k_min` the detector keeps catchers covering adjacent
//! segments of length `2^k`; together they cover every start position up to
//! `n - naive_len`, and short suffixes are checked directly. Catchers that the
//! segment system no longer needs are only *marked* and keep working for a
//! bounded number of operations, so alternating reads and backtracks near a
//! level boundary do not rebuild large catchers over and over.

use std::collections::BTreeMap;

use crate::catcher::Catcher;
use crate::error::{Error, Result};
use crate::exponent::Exponent;
use crate::repetition::{DetectorStatus, RepetitionReport};
use crate::scan::{finalize, short_suffix_scan};
use crate::text::{Letter, TextBuffer};
use crate::OnlineDetector;

/// Identity of a catcher in the segment system: level and defining positions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SlotKey {
    pub level: u32,
    pub i: usize,
    pub j: usize,
}

#[derive(Debug, Clone)]
pub struct CatcherSlot<T> {
    pub catcher: Catcher<T>,
    pub marked: bool,
    /// Remaining operations once marked.
    pub ttl: usize,
    marked_at: u64,
}

/// Smallest `k` for which `(s - 1) 2^k - ceil(s 2^k / e) + 1 >= 2`.
pub fn smallest_level(s: usize, e: Exponent) -> u32 {
    (0u32..)
        .find(|&k| {
            let size = 1usize << k;
            ((s - 1) * size + 1).saturating_sub(e.ceil_div(s * size)) >= 2
        })
        .expect("some level is wide enough")
}

/// Defining positions `(i, j)` of the level-`k` catcher created at length `n`.
pub fn level_params(n: usize, k: u32, s: usize, e: Exponent) -> Result<(usize, usize)> {
    let k_min = smallest_level(s, e);
    if k < k_min {
        return Err(Error::LevelTooSmall { k, k_min });
    }
    let size = 1usize << k;
    if s * size > n || !n.is_multiple_of(size) {
        return Err(Error::LevelGeometry { k, n });
    }
    let i = n - (s - 1) * size;
    let j = (n - e.ceil_div(s * size)).max(i);
    Ok((i, j))
}

/// `t_r = max(0, n - ((s - 1) 2^r + n mod 2^r))`.
pub fn level_boundary(n: usize, r: u32, s: usize) -> usize {
    let size = 1usize << r;
    n.saturating_sub((s - 1) * size + n % size)
}

#[derive(Debug, Clone)]
pub struct DyadicDetector<T> {
    e: Exponent,
    s: usize,
    k_min: u32,
    naive_len: usize,
    text: TextBuffer<T>,
    slots: BTreeMap<SlotKey, CatcherSlot<T>>,
    found: Option<(RepetitionReport, usize)>,
    skipped: usize,
    ops: u64,
    op_seq: u64,
    reports: Vec<RepetitionReport>,
}

impl<T: Letter> DyadicDetector<T> {
    pub fn new(e: Exponent) -> Self {
        let s = e.level_constant();
        let k_min = smallest_level(s, e);
        DyadicDetector {
            e,
            s,
            k_min,
            naive_len: s << k_min,
            text: TextBuffer::new(),
            slots: BTreeMap::new(),
            found: None,
            skipped: 0,
            ops: 0,
            op_seq: 0,
            reports: Vec::new(),
        }
    }

    pub fn exponent(&self) -> Exponent {
        self.e
    }

    pub fn level_constant(&self) -> usize {
        self.s
    }

    pub fn k_min(&self) -> u32 {
        self.k_min
    }

    /// Suffixes up to this length are checked by direct comparison.
    pub fn naive_len(&self) -> usize {
        self.naive_len
    }

    /// The processed text; skipped reads are not part of it.
    pub fn text(&self) -> &TextBuffer<T> {
        &self.text
    }

    pub fn skipped_reads(&self) -> usize {
        self.skipped
    }

    /// Text length plus skipped reads.
    pub fn len(&self) -> usize {
        self.text.len() + self.skipped
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn ops(&self) -> u64 {
        self.ops
    }

    pub fn slots(&self) -> impl Iterator<Item = (&SlotKey, &CatcherSlot<T>)> {
        self.slots.iter()
    }

    pub fn slot_count(&self) -> usize {
        self.slots.len()
    }

    pub fn status(&self) -> DetectorStatus {
        match self.found {
            Some((report, prefix)) => DetectorStatus::Found { report, prefix },
            None => DetectorStatus::Free,
        }
    }

    fn key_for(&self, created_at: usize, level: u32) -> SlotKey {
        let size = 1usize << level;
        let i = created_at - (self.s - 1) * size;
        let j = (created_at - self.e.ceil_div(self.s * size)).max(i);
        SlotKey { level, i, j }
    }

    /// Levels whose catcher is created when the text reaches length `n`.
    fn levels_at(&self, n: usize) -> impl Iterator<Item = u32> {
        let s = self.s;
        (self.k_min..usize::BITS).take_while(move |&k| {
            let size = 1usize << k;
            s.checked_mul(size).is_some_and(|w| w <= n) && n.is_multiple_of(size)
        })
    }

    fn ensure(&mut self, key: SlotKey, collect: bool) {
        self.ops += 1;
        if let Some(slot) = self.slots.get_mut(&key) {
            slot.marked = false;
            return;
        }
        let mut catcher = Catcher::new(&self.text, key.i, key.j, self.e, true)
            .expect("segment catchers are well formed");
        self.ops += catcher.take_work();
        if collect {
            self.reports.extend_from_slice(catcher.fired());
        } else {
            debug_assert!(catcher.fired().is_empty());
        }
        self.slots.insert(
            key,
            CatcherSlot {
                catcher,
                marked: false,
                ttl: 0,
                marked_at: 0,
            },
        );
    }

    fn mark(&mut self, key: SlotKey, ttl: usize) {
        self.ops += 1;
        if let Some(slot) = self.slots.get_mut(&key) {
            slot.marked = true;
            slot.ttl = ttl;
            slot.marked_at = self.op_seq;
        }
    }

    fn expire(&mut self) {
        let now = self.op_seq;
        self.slots.retain(|_, slot| {
            if slot.marked && slot.marked_at < now {
                slot.ttl = slot.ttl.saturating_sub(1);
                slot.ttl > 0
            } else {
                true
            }
        });
    }

    pub fn read(&mut self, c: T) -> DetectorStatus {
        if self.found.is_some() {
            self.skipped += 1;
            return self.status();
        }
        self.op_seq += 1;
        self.text.push(c);
        let n = self.text.len();
        self.reports.clear();
        let mut work = 0;
        if let Some(r) = short_suffix_scan(&self.text, self.naive_len, self.e, &mut work) {
            self.reports.push(r);
        }
        for slot in self.slots.values_mut() {
            slot.catcher.read(&self.text);
            self.reports.extend_from_slice(slot.catcher.fired());
            work += 1 + slot.catcher.take_work();
        }
        self.ops += work;
        let levels: Vec<u32> = self.levels_at(n).collect();
        for k in levels {
            let size = 1usize << k;
            self.ensure(self.key_for(n, k), true);
            if n.is_multiple_of(2 * size) && n >= 2 * self.s * size {
                self.mark(self.key_for(n - self.s * size, k), size);
                self.mark(self.key_for(n - (self.s - 1) * size, k), size);
            }
        }
        self.expire();
        if !self.reports.is_empty() {
            let mut work = 0;
            let report = finalize(&self.text, &self.reports, self.e, &mut work)
                .expect("reports are non-empty");
            self.ops += work;
            self.found = Some((report, n));
        }
        self.status()
    }

    pub fn backtrack(&mut self) -> Result<DetectorStatus> {
        if self.skipped > 0 {
            self.skipped -= 1;
            return Ok(self.status());
        }
        if self.text.is_empty() {
            return Err(Error::EmptyText);
        }
        self.op_seq += 1;
        let prev = self.text.len();
        for slot in self.slots.values_mut() {
            slot.catcher
                .backtrack()
                .expect("live catchers have history back to their j");
            self.ops += 1 + slot.catcher.take_work();
        }
        self.text.pop();
        let n = prev - 1;
        if self.found.is_some_and(|(_, at)| n < at) {
            self.found = None;
        }
        self.slots.retain(|key, _| key.j <= n);
        let levels: Vec<u32> = self.levels_at(prev).collect();
        for k in levels {
            let size = 1usize << k;
            let ttl = size.min(self.e.ceil_div(self.s * size));
            self.mark(self.key_for(prev, k), ttl);
            if prev.is_multiple_of(2 * size) && prev >= 2 * self.s * size {
                self.ensure(self.key_for(prev - self.s * size, k), false);
                self.ensure(self.key_for(prev - (self.s - 1) * size, k), false);
            }
        }
        self.expire();
        Ok(self.status())
    }

    /// True iff the unmarked catchers cover every start in `[1..=n - naive_len]`.
    pub fn coverage_holds(&self) -> bool {
        let n = self.text.len();
        let Some(target) = n.checked_sub(self.naive_len).filter(|&t| t > 0) else {
            return true;
        };
        let mut segments: Vec<(usize, usize)> = self
            .slots
            .iter()
            .filter(|(_, s)| !s.marked)
            .filter_map(|(k, _)| crate::catcher::coverage(k.i, k.j, n, self.e))
            .collect();
        segments.sort_unstable();
        let mut reach = 0;
        for (l, r) in segments {
            if l > reach + 1 {
                break;
            }
            reach = reach.max(r);
        }
        reach >= target
    }

    /// Largest number of slots sharing a level.
    pub fn max_slots_per_level(&self) -> usize {
        let mut counts: BTreeMap<u32, usize> = BTreeMap::new();
        for k in self.slots.keys() {
            *counts.entry(k.level).or_default() += 1;
        }
        counts.into_values().max().unwrap_or(0)
    }
}

impl<T: Letter> OnlineDetector<T> for DyadicDetector<T> {
    fn read(&mut self, c: T) -> DetectorStatus {
        DyadicDetector::read(self, c)
    }

    fn status(&self) -> DetectorStatus {
        DyadicDetector::status(self)
    }

    fn len(&self) -> usize {
        DyadicDetector::len(self)
    }

    fn ops(&self) -> u64 {
        self.ops
    }
}
