//! Acceptance gate. Prints one `criterion N: PASS|FAIL` line per criterion and
//! exits non-zero if any fails. Runs without the libtest harness so the lines
//! are always shown.

use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use repfree::bench::tsv_header;
use repfree::oracle::oracle_windows_free;
use repfree::ordered::cover_constants;
use repfree::words::ternary_square_free;
use repfree::{
    generate, oracle_first_repetition, oracle_unioccurrent, Catcher, DetectorStatus,
    DyadicDetector, Exponent, GeneratorConfig, OnlineDetector, OrderedDetector, RepetitionReport,
    SuffixTracker, TextBuffer,
};

fn ex(num: u64, den: u64) -> Exponent {
    Exponent::new(num, den).unwrap()
}

fn report(n: u32, pass: bool, detail: &str) {
    println!(
        "criterion {n}: {} - {detail}",
        if pass { "PASS" } else { "FAIL" }
    );
    assert!(pass, "criterion {n} failed: {detail}");
}

fn first_found<D: OnlineDetector<u8>>(mut det: D, text: &[u8]) -> Option<(usize, usize, usize)> {
    for &c in text {
        if let DetectorStatus::Found { report, prefix } = det.read(c) {
            return Some((prefix, report.start, report.period));
        }
    }
    None
}

fn all_words(sigma: u8, len: usize) -> impl Iterator<Item = Vec<u8>> {
    let total = (sigma as usize).pow(len as u32);
    (0..total).map(move |mut code| {
        (0..len)
            .map(|_| {
                let c = b'a' + (code % sigma as usize) as u8;
                code /= sigma as usize;
                c
            })
            .collect()
    })
}

const EXPONENTS: [(u64, u64); 5] = [(3, 2), (7, 4), (2, 1), (5, 2), (3, 1)];

fn criterion_1_exhaustive_oracle_equivalence() {
    let t = Instant::now();
    let mut checked = 0u64;
    let mut mismatches = Vec::new();
    for (sigma, max_len) in [(2u8, 14usize), (3, 9)] {
        for len in 1..=max_len {
            for w in all_words(sigma, len) {
                for &(num, den) in &EXPONENTS {
                    let e = ex(num, den);
                    let want =
                        oracle_first_repetition(&w, e).map(|r| (r.prefix, r.start, r.period));
                    let dyadic = first_found(DyadicDetector::new(e), &w);
                    let ordered = first_found(OrderedDetector::new(e), &w);
                    checked += 1;
                    if dyadic != want || ordered != want {
                        mismatches.push((w.clone(), e, want, dyadic, ordered));
                    }
                }
            }
        }
    }
    for m in mismatches.iter().take(5) {
        eprintln!("mismatch: {m:?}");
    }
    report(
        1,
        mismatches.is_empty(),
        &format!(
            "{checked} (word, exponent) pairs, {} mismatches, {:.1}s",
            mismatches.len(),
            t.elapsed().as_secs_f64()
        ),
    );
}

#[derive(Clone, Copy)]
enum Op {
    Read(u8),
    Back,
}

/// Exactly 30% backtracks, grouped into runs so the text can shrink back past
/// a repetition. Reads mostly follow a repetition-free base word with random
/// letters mixed in, so the detector reaches deep free states.
fn fuzz_script(rng: &mut ChaCha8Rng, ops: usize, sigma: u8, base: &[u8]) -> Vec<Op> {
    let backs = ops * 3 / 10;
    let mut kinds: Vec<bool> = Vec::with_capacity(ops);
    let (mut left_reads, mut left_backs) = (ops - backs, backs);
    while left_reads + left_backs > 0 {
        let run = rng.gen_range(1..=45).min(left_reads);
        kinds.extend(std::iter::repeat_n(false, run));
        left_reads -= run;
        let run = rng.gen_range(1..=19).min(left_backs);
        kinds.extend(std::iter::repeat_n(true, run));
        left_backs -= run;
        if left_reads == 0 {
            kinds.extend(std::iter::repeat_n(true, left_backs));
            left_backs = 0;
        }
    }
    let mut len = 0usize;
    let mut script = Vec::with_capacity(ops);
    for back in kinds {
        if back && len > 0 {
            script.push(Op::Back);
            len -= 1;
        } else {
            let c = if rng.gen_bool(0.995) && len < base.len() {
                base[len]
            } else {
                b'a' + rng.gen_range(0..sigma)
            };
            script.push(Op::Read(c));
            len += 1;
        }
    }
    script
}

fn criterion_2_backtracking_fuzz() {
    let t = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    let mut bases = std::collections::HashMap::new();
    let (mut checks, mut mismatches, mut backs, mut total, mut deepest_free) =
        (0u64, 0u64, 0u64, 0u64, 0usize);
    for script_no in 0..100 {
        let e = if script_no % 2 == 0 {
            ex(3, 2)
        } else {
            ex(2, 1)
        };
        let sigma = 2 + (script_no / 2 % 3) as u8;
        // Longest e-free word the generator reaches over this alphabet.
        let base = bases.entry((script_no % 2, sigma)).or_insert_with(|| {
            let alphabet: Vec<u8> = (b'a'..b'a' + sigma).collect();
            let mut cfg = GeneratorConfig::new(e, &alphabet, 10_000, 7);
            cfg.max_steps = 2_000_000;
            generate(&cfg).unwrap().word().to_vec()
        });
        let script = fuzz_script(&mut rng, 10_000, sigma, base);
        let mut det = DyadicDetector::new(e);
        let mut text: Vec<u8> = Vec::new();
        for (k, op) in script.iter().enumerate() {
            total += 1;
            let status = match *op {
                Op::Read(c) => {
                    text.push(c);
                    det.read(c)
                }
                Op::Back => {
                    backs += 1;
                    text.pop();
                    det.backtrack().expect("script never underflows")
                }
            };
            if status == DetectorStatus::Free {
                deepest_free = deepest_free.max(text.len());
            }
            if text.len() <= 50 || k % 100 == 0 {
                let mut fresh = DyadicDetector::new(e);
                let mut want = DetectorStatus::Free;
                for &c in &text {
                    want = fresh.read(c);
                }
                checks += 1;
                if want != status || fresh.len() != det.len() {
                    mismatches += 1;
                    if mismatches <= 5 {
                        eprintln!("script {script_no} op {k}: got {status:?}, fresh {want:?}");
                    }
                }
            }
        }
    }
    report(
        2,
        mismatches == 0,
        &format!(
            "100 scripts x 10^4 ops, {:.1}% backtracks, {checks} comparisons, {mismatches} mismatches, deepest free text {deepest_free}, {:.1}s",
            100.0 * backs as f64 / total as f64,
            t.elapsed().as_secs_f64()
        ),
    );
}

fn criterion_3_example_catcher() {
    let mut text = TextBuffer::from(&b"xxxxaceorsuv"[..]);
    let mut catcher: Catcher<u8> = Catcher::new(&text, 6, 7, ex(3, 2), true).unwrap();
    let mut reports = Vec::new();
    for &c in b"aceo" {
        text.push(c);
        reports.push(catcher.read(&text));
    }
    let want = RepetitionReport {
        start: 5,
        end: 16,
        period: 8,
    };
    let pass = reports[..3].iter().all(Option::is_none) && reports[3] == Some(want);
    report(3, pass, &format!("reads a,c,e,o -> {reports:?}"));
}

fn verified_free(word: &[u8], e: Exponent) -> bool {
    let mut det = OrderedDetector::new(e);
    word.iter().all(|&c| det.read(c) == DetectorStatus::Free) && oracle_windows_free(word, e, 60)
}

fn criterion_4_generation() {
    let mut lines = Vec::new();
    let mut pass = true;
    for (num, den, alphabet) in [(2, 1, &b"abc"[..]), (3, 1, b"ab")] {
        let e = ex(num, den);
        for seed in 1..=10 {
            let mut cfg = GeneratorConfig::new(e, alphabet, 1000, seed);
            cfg.max_steps = 1_000_000;
            let out = generate(&cfg).unwrap();
            let ok = out.is_complete() && out.word().len() == 1000 && verified_free(out.word(), e);
            pass &= ok;
            if !ok {
                lines.push(format!("e={e} seed={seed} failed"));
            }
        }
        lines.push(format!(
            "e={e} over {:?}: 10 seeds ok",
            String::from_utf8_lossy(alphabet)
        ));
    }
    let mut longest = 0;
    for seed in 1..=10 {
        let mut cfg = GeneratorConfig::new(ex(2, 1), b"ab", 1000, seed);
        cfg.max_steps = 1_000_000;
        let out = generate(&cfg).unwrap();
        longest = longest.max(out.word().len());
    }
    pass &= longest <= 3;
    lines.push(format!("binary squares: longest {longest}"));
    report(4, pass, &lines.join("; "));
}

fn criterion_5_suffix_tracker() {
    let mut mismatches = 0;
    let mut count = 0;
    for len in 0..=12 {
        for w in all_words(2, len) {
            let mut tracker = SuffixTracker::new();
            let got: Vec<usize> = w.iter().map(|&c| tracker.push(c)).collect();
            count += 1;
            mismatches += usize::from(got != oracle_unioccurrent(&w));
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for _ in 0..500 {
        let sigma = rng.gen_range(1..=64u16);
        let len = rng.gen_range(0..=200);
        let w: Vec<u16> = (0..len).map(|_| rng.gen_range(0..sigma)).collect();
        let mut tracker = SuffixTracker::new();
        let got: Vec<usize> = w.iter().map(|&c| tracker.push(c)).collect();
        count += 1;
        mismatches += usize::from(got != oracle_unioccurrent(&w));
    }
    report(
        5,
        mismatches == 0,
        &format!("{count} strings, {mismatches} mismatches"),
    );
}

fn floor_log2(n: usize) -> usize {
    (usize::BITS - 1 - n.max(1).leading_zeros()) as usize
}

/// Dyadic structural bounds after every step of a random depth-first
/// read/backtrack walk (letters refused at a position are not redrawn there)
/// that reaches `len` free letters. Returns the word and the step count.
fn dyadic_walk(e: Exponent, alphabet: &[u8], len: usize, seed: u64) -> (Vec<u8>, u64) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut det = DyadicDetector::new(e);
    let s = det.level_constant();
    let bounds_hold = |det: &DyadicDetector<u8>| {
        let n = det.text().len();
        let free = det.status() == DetectorStatus::Free;
        det.slot_count() <= (s + 2) * (floor_log2(n) + 1) && (!free || det.coverage_holds())
    };
    let full = (1u32 << alphabet.len()) - 1;
    let mut rejected: Vec<u32> = vec![0];
    let (mut steps, mut violations) = (0u64, 0u64);
    while det.len() < len {
        let n = det.len();
        if rejected[n] == full {
            rejected.pop();
            let k = alphabet.iter().position(|&c| c == det.text()[n]).unwrap();
            det.backtrack().unwrap();
            rejected[n - 1] |= 1 << k;
        } else {
            let k = loop {
                let k = rng.gen_range(0..alphabet.len());
                if rejected[n] & (1 << k) == 0 {
                    break k;
                }
            };
            if det.read(alphabet[k]).is_found() {
                steps += 1;
                violations += u64::from(!bounds_hold(&det));
                det.backtrack().unwrap();
                rejected[n] |= 1 << k;
            } else {
                rejected.push(0);
            }
        }
        steps += 1;
        violations += u64::from(!bounds_hold(&det));
    }
    assert_eq!(violations, 0, "dyadic bounds violated on e={e} walk");
    (det.text().as_slice().to_vec(), steps)
}

fn ordered_check(e: Exponent, word: &[u8]) -> u64 {
    let mut det = OrderedDetector::new(e);
    let (_, _, _, m) = cover_constants(e);
    let mut violations = 0;
    for &c in word {
        assert_eq!(det.read(c), DetectorStatus::Free);
        let ok = det.catcher_count() <= m + 1 && (det.last_t() < det.t0() || det.window_holds());
        violations += u64::from(!ok);
    }
    violations
}

fn dyadic_check(e: Exponent, word: &[u8]) -> u64 {
    let mut det = DyadicDetector::new(e);
    let s = det.level_constant();
    let mut violations = 0;
    for &c in word {
        assert_eq!(det.read(c), DetectorStatus::Free);
        let n = det.text().len();
        let ok = det.slot_count() <= (s + 2) * (floor_log2(n) + 1) && det.coverage_holds();
        violations += u64::from(!ok);
    }
    violations
}

fn criterion_6_structural_bounds() {
    let t = Instant::now();
    const N: usize = 1_000_000;
    let mut lines = Vec::new();
    let mut violations = 0;
    for (e, alphabet, seed) in [(ex(2, 1), &b"abc"[..], 61), (ex(3, 1), b"ab", 62)] {
        let (word, steps) = dyadic_walk(e, alphabet, N, seed);
        let v = ordered_check(e, &word);
        violations += v;
        lines.push(format!(
            "random walk e={e} ({steps} dyadic steps): {v} violations, {:.1}s",
            t.elapsed().as_secs_f64()
        ));
    }
    // Exponent 2.5 overall, so the text stays 3-free while t_n grows past 6 * 10^5.
    let block = ternary_square_free(400_000);
    let periodic: Vec<u8> = block.iter().copied().cycle().take(N).collect();
    let e = ex(3, 1);
    let v = dyadic_check(e, &periodic) + ordered_check(e, &periodic);
    violations += v;
    lines.push(format!("periodic (period 400000) e={e}: {v} violations"));
    lines.push(format!("{:.1}s", t.elapsed().as_secs_f64()));
    report(6, violations == 0, &lines.join("; "));
}

fn criterion_7_cost_scaling() {
    const MAX_LOG: u32 = 20;
    let e = ex(2, 1);
    let word = ternary_square_free(1 << MAX_LOG);
    let mut dyadic = DyadicDetector::new(e);
    let mut ordered = OrderedDetector::new(e);
    let mut rows = Vec::new();
    let t = Instant::now();
    let (mut d_elapsed, mut o_elapsed) = (0u128, 0u128);
    let mut next = 1usize << 10;
    for (k, &c) in word.iter().enumerate() {
        let a = Instant::now();
        dyadic.read(c);
        let b = Instant::now();
        ordered.read(c);
        d_elapsed += (b - a).as_nanos();
        o_elapsed += b.elapsed().as_nanos();
        if k + 1 == next {
            rows.push((next, dyadic.ops(), d_elapsed, ordered.ops(), o_elapsed));
            next *= 2;
        }
    }
    assert!(dyadic.status() == DetectorStatus::Free && ordered.status() == DetectorStatus::Free);

    let mut tsv = String::new();
    for (name, col) in [("dyadic", 0usize), ("ordered", 1)] {
        tsv += &format!("# {name}\n{}\n", tsv_header());
        for &(n, d_ops, d_ns, o_ops, o_ns) in &rows {
            let (ops, ns) = if col == 0 {
                (d_ops, d_ns)
            } else {
                (o_ops, o_ns)
            };
            tsv += &format!("{n}\t{ops}\t{:.1}\n", ns as f64 / n as f64);
        }
    }
    print!("{tsv}");
    let path = std::path::Path::new(env!("CARGO_TARGET_TMPDIR")).join("cost_scaling.tsv");
    std::fs::write(&path, &tsv).unwrap();

    let per = |ops: u64, n: usize| ops as f64 / n as f64;
    let mut worst_growth: f64 = 0.0;
    for w in rows.windows(2) {
        if w[0].0 >= 1 << 14 {
            worst_growth = worst_growth.max(per(w[1].1, w[1].0) / per(w[0].1, w[0].0));
        }
    }
    let ordered_per: Vec<f64> = rows.iter().map(|r| per(r.3, r.0)).collect();
    let spread = ordered_per.iter().cloned().fold(0.0, f64::max)
        / ordered_per.iter().cloned().fold(f64::INFINITY, f64::min);
    report(
        7,
        worst_growth <= 1.35 && spread <= 2.0,
        &format!(
            "dyadic ops/letter worst growth per doubling beyond 2^14 = {worst_growth:.3} (<= 1.35); ordered ops/letter max/min = {spread:.3} (<= 2); TSV at {}; {:.1}s",
            path.display(),
            t.elapsed().as_secs_f64()
        ),
    );
}

fn main() {
    let criteria: [(&str, fn()); 7] = [
        (
            "criterion_1_exhaustive_oracle_equivalence",
            criterion_1_exhaustive_oracle_equivalence,
        ),
        (
            "criterion_2_backtracking_fuzz",
            criterion_2_backtracking_fuzz,
        ),
        ("criterion_3_example_catcher", criterion_3_example_catcher),
        ("criterion_4_generation", criterion_4_generation),
        ("criterion_5_suffix_tracker", criterion_5_suffix_tracker),
        (
            "criterion_6_structural_bounds",
            criterion_6_structural_bounds,
        ),
        ("criterion_7_cost_scaling", criterion_7_cost_scaling),
    ];
    let mut failed = Vec::new();
    for (name, run) in criteria {
        if std::panic::catch_unwind(run).is_err() {
            failed.push(name);
        }
    }
    if !failed.is_empty() {
        eprintln!("failed: {failed:?}");
        std::process::exit(1);
    }
}
