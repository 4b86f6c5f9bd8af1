//! Cost measurements on square-free ternary input.

use std::time::Instant;

use crate::dyadic::DyadicDetector;
use crate::exponent::Exponent;
use crate::ordered::OrderedDetector;
use crate::words::{ternary_square_free, thue_morse};
use crate::OnlineDetector;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BenchRow {
    pub n: usize,
    pub basic_ops: u64,
    pub ns_per_letter: f64,
}

impl BenchRow {
    pub fn ops_per_letter(&self) -> f64 {
        self.basic_ops as f64 / self.n as f64
    }
}

/// A repetition-free input for `e`: square-free ternary for `e <= 2`,
/// Thue-Morse otherwise.
pub fn bench_input(e: Exponent, n: usize) -> Vec<u8> {
    if e.num() > 2 * e.den() {
        thue_morse(n)
    } else {
        ternary_square_free(n)
    }
}

fn measure<D: OnlineDetector<u8>>(mut det: D, text: &[u8]) -> BenchRow {
    let t = Instant::now();
    for &c in text {
        det.read(c);
    }
    let elapsed = t.elapsed();
    BenchRow {
        n: text.len(),
        basic_ops: det.ops(),
        ns_per_letter: elapsed.as_nanos() as f64 / text.len().max(1) as f64,
    }
}

pub fn bench_dyadic(e: Exponent, n: usize) -> BenchRow {
    measure(DyadicDetector::new(e), &bench_input(e, n))
}

pub fn bench_ordered(e: Exponent, n: usize) -> BenchRow {
    measure(OrderedDetector::new(e), &bench_input(e, n))
}

pub fn tsv_header() -> &'static str {
    "n\tbasic_ops\tns_per_letter"
}

pub fn tsv_row(row: &BenchRow) -> String {
    format!("{}\t{}\t{:.1}", row.n, row.basic_ops, row.ns_per_letter)
}
