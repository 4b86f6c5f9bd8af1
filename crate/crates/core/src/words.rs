//! Classical infinite words used as stress and benchmark inputs.

/// Prefix of the Thue-Morse word over `{a, b}`; free of every e-repetition
/// with `e > 2`.
pub fn thue_morse(len: usize) -> Vec<u8> {
    (0..len as u64)
        .map(|i| if i.count_ones() % 2 == 0 { b'a' } else { b'b' })
        .collect()
}

/// Prefix of the square-free ternary word counting the `b`s between
/// consecutive `a`s of the Thue-Morse word.
pub fn ternary_square_free(len: usize) -> Vec<u8> {
    let mut out = Vec::with_capacity(len);
    let mut ones = 0u8;
    let mut i = 1u64;
    while out.len() < len {
        if i.count_ones().is_multiple_of(2) {
            out.push(b'a' + ones);
            ones = 0;
        } else {
            ones += 1;
        }
        i += 1;
    }
    out
}
