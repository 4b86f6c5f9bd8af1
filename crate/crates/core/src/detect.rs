//! Streaming detection over byte input.

use std::fmt;
use std::io::{self, Read};

use crate::dyadic::DyadicDetector;
use crate::error::Error;
use crate::exponent::Exponent;
use crate::ordered::OrderedDetector;
use crate::repetition::DetectorStatus;
use crate::OnlineDetector;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum DetectMode {
    #[default]
    Dyadic,
    Ordered,
    /// Run both and fail if they disagree.
    Both,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DetectOutcome {
    Found {
        prefix: usize,
        start: usize,
        period: usize,
    },
    Free {
        length: usize,
    },
}

impl DetectOutcome {
    pub fn is_found(&self) -> bool {
        matches!(self, DetectOutcome::Found { .. })
    }
}

impl fmt::Display for DetectOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DetectOutcome::Found {
                prefix,
                start,
                period,
            } => write!(f, "FOUND prefix={prefix} start={start} period={period}"),
            DetectOutcome::Free { length } => write!(f, "FREE length={length}"),
        }
    }
}

#[derive(Debug, thiserror::Error)]
pub enum DetectError {
    #[error(transparent)]
    Io(#[from] io::Error),
    #[error(transparent)]
    Detector(#[from] Error),
}

fn feed<D: OnlineDetector<u8>>(det: &mut D, chunk: &[u8]) -> bool {
    for &c in chunk {
        if det.read(c).is_found() {
            return true;
        }
    }
    false
}

fn outcome(status: DetectorStatus, len: usize) -> DetectOutcome {
    match status {
        DetectorStatus::Found { report, prefix } => DetectOutcome::Found {
            prefix,
            start: report.start,
            period: report.period,
        },
        DetectorStatus::Free => DetectOutcome::Free { length: len },
    }
}

/// Reads `input` until the first repetition or end of input.
pub fn run_detect<R: Read>(
    mut input: R,
    e: Exponent,
    mode: DetectMode,
) -> Result<DetectOutcome, DetectError> {
    let mut dyadic =
        matches!(mode, DetectMode::Dyadic | DetectMode::Both).then(|| DyadicDetector::new(e));
    let mut ordered =
        matches!(mode, DetectMode::Ordered | DetectMode::Both).then(|| OrderedDetector::new(e));
    let mut buf = vec![0u8; 1 << 16];
    let mut done_d = dyadic.is_none();
    let mut done_o = ordered.is_none();
    while !(done_d && done_o) {
        let got = match input.read(&mut buf) {
            Ok(0) => break,
            Ok(k) => k,
            Err(err) if err.kind() == io::ErrorKind::Interrupted => continue,
            Err(err) => return Err(err.into()),
        };
        if let (Some(d), false) = (dyadic.as_mut(), done_d) {
            done_d = feed(d, &buf[..got]);
        }
        if let (Some(d), false) = (ordered.as_mut(), done_o) {
            done_o = feed(d, &buf[..got]);
        }
    }
    let a = dyadic.map(|d| outcome(d.status(), d.len()));
    let b = ordered.map(|d| outcome(d.status(), d.len()));
    match (a, b) {
        (Some(a), Some(b)) if a != b => Err(Error::Disagreement {
            dyadic: a.to_string(),
            ordered: b.to_string(),
        }
        .into()),
        (Some(a), _) => Ok(a),
        (None, Some(b)) => Ok(b),
        (None, None) => unreachable!("at least one detector runs"),
    }
}

pub fn detect_bytes(text: &[u8], e: Exponent, mode: DetectMode) -> Result<DetectOutcome, Error> {
    match run_detect(text, e, mode) {
        Ok(out) => Ok(out),
        Err(DetectError::Detector(err)) => Err(err),
        Err(DetectError::Io(_)) => unreachable!("slices do not fail"),
    }
}
