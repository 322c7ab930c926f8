//! Word-level bit primitives shared by the structures: prefix popcounts over
//! byte slices and in-word select. All bit order is least-significant-first.

/// Number of 64-bit words needed to hold `n` bits.
#[inline]
pub fn words_for_bits(n: u64) -> usize {
    (n as usize).div_ceil(64)
}

/// Count set bits among the first `bits` bits of `bytes`.
///
/// Bytes are read LSB-first, eight at a time where possible.
#[inline]
pub fn popcount_prefix(bytes: &[u8], bits: usize) -> u64 {
    debug_assert!(bits <= bytes.len() * 8);
    let full_bytes = bits / 8;
    let words = full_bytes / 8;
    let mut total = 0u64;
    for w in bytes[..words * 8].chunks_exact(8) {
        total += u64::from_le_bytes(w.try_into().unwrap()).count_ones() as u64;
    }
    for &b in &bytes[words * 8..full_bytes] {
        total += b.count_ones() as u64;
    }
    let rem = bits % 8;
    if rem > 0 {
        total += (bytes[full_bytes] & ((1u8 << rem) - 1)).count_ones() as u64;
    }
    total
}

/// Count all set bits in `bytes`.
#[inline]
pub fn popcount_bytes(bytes: &[u8]) -> u64 {
    popcount_prefix(bytes, bytes.len() * 8)
}

/// Position of the `r`-th set bit of `w` (1-based `r`).
///
/// Steps over bytes before resolving the final byte bit by bit, which is
/// cheap next to the cache misses the callers are really paying for.
#[inline]
pub fn select_in_word(w: u64, r: u32) -> u32 {
    debug_assert!(r >= 1 && r <= w.count_ones(), "select_in_word precondition");
    let mut remaining = r;
    let mut base = 0u32;
    let mut cur = w;
    loop {
        let byte_pop = (cur & 0xFF).count_ones();
        if remaining <= byte_pop {
            break;
        }
        remaining -= byte_pop;
        base += 8;
        cur >>= 8;
    }
    let mut byte = (cur & 0xFF) as u64;
    for _ in 1..remaining {
        byte &= byte - 1;
    }
    base + byte.trailing_zeros()
}

/// Position of the `r`-th set bit within the first `bits` bits of `bytes`
/// (1-based `r`), or `None` if fewer than `r` ones are present.
pub fn select_in_bytes(bytes: &[u8], bits: usize, r: u64) -> Option<u64> {
    debug_assert!(bits <= bytes.len() * 8);
    let mut remaining = r;
    let mut pos = 0usize;
    while pos < bits {
        let take = (bits - pos).min(64);
        let word = load_word(bytes, pos / 8, take);
        let pop = word.count_ones() as u64;
        if remaining <= pop {
            return Some(pos as u64 + select_in_word(word, remaining as u32) as u64);
        }
        remaining -= pop;
        pos += take;
    }
    None
}

/// Load up to 64 bits starting at `byte_start`, masked down to `bits` bits.
/// Bytes past the end of the slice read as zero.
#[inline]
fn load_word(bytes: &[u8], byte_start: usize, bits: usize) -> u64 {
    debug_assert!(bits <= 64);
    let mut buf = [0u8; 8];
    let avail = bytes.len().saturating_sub(byte_start).min(8);
    buf[..avail].copy_from_slice(&bytes[byte_start..byte_start + avail]);
    let word = u64::from_le_bytes(buf);
    if bits == 64 {
        word
    } else {
        word & ((1u64 << bits) - 1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn naive_popcount_prefix(bytes: &[u8], bits: usize) -> u64 {
        (0..bits)
            .filter(|&i| bytes[i / 8] >> (i % 8) & 1 == 1)
            .count() as u64
    }

    #[test]
    fn prefix_popcount_matches_bit_loop() {
        let bytes: Vec<u8> = (0..37u32).map(|i| (i * 0x9E) as u8).collect();
        for bits in 0..=bytes.len() * 8 {
            assert_eq!(popcount_prefix(&bytes, bits), naive_popcount_prefix(&bytes, bits));
        }
    }

    #[test]
    fn select_in_word_all_positions() {
        let w = 0xF0F0_0F0F_AAAA_5555u64;
        let mut seen = 0;
        for p in 0..64 {
            if w >> p & 1 == 1 {
                seen += 1;
                assert_eq!(select_in_word(w, seen), p);
            }
        }
        assert_eq!(seen, w.count_ones());
    }

    #[test]
    fn select_in_bytes_spans_words() {
        // ones at bit 3, 64, 100
        let mut bytes = vec![0u8; 16];
        bytes[0] = 0b1000;
        bytes[8] = 1;
        bytes[12] = 1 << 4;
        assert_eq!(select_in_bytes(&bytes, 128, 1), Some(3));
        assert_eq!(select_in_bytes(&bytes, 128, 2), Some(64));
        assert_eq!(select_in_bytes(&bytes, 128, 3), Some(100));
        assert_eq!(select_in_bytes(&bytes, 128, 4), None);
        assert_eq!(select_in_bytes(&bytes, 100, 3), None);
    }
}
