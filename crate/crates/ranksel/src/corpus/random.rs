//! Seeded random bitvectors with a fixed PRNG so generated test data is
//! portable across implementations and runs.

use crate::bitvec::BitVector;
use crate::error::{Error, Result};
use crate::words::words_for_bits;

/// The splitmix64 generator, bit-exact per Vigna's reference code.
///
/// Chosen as the corpus PRNG because it is trivial to re-implement
/// anywhere, which keeps golden vectors portable.
#[derive(Clone, Debug)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        Self { state: seed }
    }

    #[inline]
    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    /// Uniform value in `[0, bound)` by modulo reduction.
    ///
    /// The small modulo bias is irrelevant for workload generation and
    /// keeps regeneration trivially portable.
    #[inline]
    pub fn next_below(&mut self, bound: u64) -> u64 {
        debug_assert!(bound > 0);
        self.next_u64() % bound
    }
}

/// A random bitvector of `n` bits where each bit is set with probability
/// `density`, driven by splitmix64 from `seed`.
///
/// Bit `i` is set iff the `i`-th PRNG draw is below `density * 2^64`, so
/// identical `(n, density, seed)` triples always produce the identical
/// vector.
pub fn random_bitvector(n: u64, density: f64, seed: u64) -> Result<BitVector> {
    if !(0.0..=1.0).contains(&density) {
        return Err(Error::InvalidParams(format!(
            "density {density} outside [0, 1]"
        )));
    }
    let threshold = (density * 18_446_744_073_709_551_616.0) as u128;
    let mut rng = SplitMix64::new(seed);
    let mut words = vec![0u64; words_for_bits(n)];
    for i in 0..n {
        if (rng.next_u64() as u128) < threshold {
            words[(i / 64) as usize] |= 1u64 << (i % 64);
        }
    }
    Ok(BitVector::from_words(words, n))
}
