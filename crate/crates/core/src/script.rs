//! Read/backtrack op scripts driving a [`DyadicDetector`].
//!
//! Tokens are separated by whitespace: `+X` reads the byte `X`, `+0xNN` reads
//! a raw byte, `-` backtracks. `#` starts a comment running to end of line.

use std::fmt;

use crate::dyadic::DyadicDetector;
use crate::error::{Error, Result};
use crate::exponent::Exponent;
use crate::repetition::DetectorStatus;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Op {
    Read(u8),
    Backtrack,
}

/// An op together with the 1-based line it came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ScriptOp {
    pub op: Op,
    pub line: usize,
}

pub fn parse_script(src: &str) -> Result<Vec<ScriptOp>> {
    let mut ops = Vec::new();
    for (idx, raw) in src.lines().enumerate() {
        let line = idx + 1;
        let body = raw.split('#').next().unwrap_or("");
        for token in body.split_whitespace() {
            let op = parse_token(token).ok_or_else(|| Error::Script {
                line,
                message: format!("bad token `{token}`"),
            })?;
            ops.push(ScriptOp { op, line });
        }
    }
    Ok(ops)
}

fn parse_token(token: &str) -> Option<Op> {
    if token == "-" {
        return Some(Op::Backtrack);
    }
    let rest = token.strip_prefix('+')?;
    match rest.as_bytes() {
        [c] => Some(Op::Read(*c)),
        _ => {
            let hex = rest
                .strip_prefix("0x")
                .or_else(|| rest.strip_prefix("0X"))?;
            if hex.len() != 2 {
                return None;
            }
            u8::from_str_radix(hex, 16).ok().map(Op::Read)
        }
    }
}

/// Status after one op: logical length and detector status.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct StepStatus {
    pub len: usize,
    pub status: DetectorStatus,
}

impl fmt::Display for StepStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.status {
            DetectorStatus::Free => write!(f, "n={} FREE", self.len),
            DetectorStatus::Found { report, .. } => write!(
                f,
                "n={} FOUND start={} period={}",
                self.len, report.start, report.period
            ),
        }
    }
}

/// Runs every op, failing on the first backtrack of an empty text.
pub fn run_script(ops: &[ScriptOp], e: Exponent) -> Result<Vec<StepStatus>> {
    let mut det = DyadicDetector::new(e);
    let mut out = Vec::with_capacity(ops.len());
    for op in ops {
        let status = match op.op {
            Op::Read(c) => det.read(c),
            Op::Backtrack => det
                .backtrack()
                .map_err(|_| Error::ScriptUnderflow { line: op.line })?,
        };
        out.push(StepStatus {
            len: det.len(),
            status,
        });
    }
    Ok(out)
}
