//! Online detection of e-repetitions (substrings of length at least `e` times
//! a period) for any rational exponent `e > 1`.
//!
//! Two detectors are provided. [`DyadicDetector`] works over any alphabet with
//! equality only and supports backtracking (deleting the last letter).
//! [`OrderedDetector`] needs ordered letters and only supports reads, but its
//! cost per letter does not grow with the text length.

pub mod bench;
pub mod catcher;
pub mod detect;
pub mod dyadic;
pub mod error;
pub mod exponent;
pub mod generator;
pub mod matcher;
pub mod oracle;
pub mod ordered;
pub mod repetition;
mod scan;
pub mod script;
pub mod suffix_tracker;
pub mod text;
pub mod words;

pub use catcher::{catcher_covers, Catcher, PeriodCandidate};
pub use dyadic::DyadicDetector;
pub use error::{Error, Result};
pub use exponent::Exponent;
pub use generator::{generate, GeneratorConfig, GeneratorOutcome, GeneratorPolicy};
pub use matcher::{MatcherAutomaton, ScanIndex, SortedIndex};
pub use oracle::{oracle_first_repetition, oracle_is_free, oracle_unioccurrent, OracleResult};
pub use ordered::{cover_build, CoverPlan, OrderedDetector};
pub use repetition::{DetectorStatus, RepetitionReport};
pub use suffix_tracker::SuffixTracker;
pub use text::{Letter, TextBuffer};

/// Common read-only interface of the two detectors.
pub trait OnlineDetector<T> {
    fn read(&mut self, c: T) -> DetectorStatus;
    fn status(&self) -> DetectorStatus;
    /// Number of letters read, including reads ignored after a find.
    fn len(&self) -> usize;
    fn is_empty(&self) -> bool {
        self.len() == 0
    }
    /// Basic-operation counter.
    fn ops(&self) -> u64;
}
