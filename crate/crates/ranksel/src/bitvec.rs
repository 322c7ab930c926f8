//! Word-packed bitvector storage with reference rank/select queries.
//!
//! [`BitVector`] is the raw bit sequence every structure in this crate is
//! built over. Bit `i` lives in word `i / 64` at position `i % 64`
//! (least-significant-first); trailing bits of the last word are always
//! zero so whole-word popcounts never overcount.
//!
//! The rank/select queries here scan linearly. They are the reference
//! answers the compressed structures are verified against, not the fast
//! path.

use crate::error::{Error, Result};
use crate::words::{popcount_prefix, select_in_word, words_for_bits};

const MAGIC: &[u8; 4] = b"RSBV";

/// An immutable bit sequence of `n` bits packed into 64-bit words.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BitVector {
    words: Vec<u64>,
    n_bits: u64,
    ones: u64,
}

/// Incremental constructor for [`BitVector`].
#[derive(Default, Clone, Debug)]
pub struct BitVectorBuilder {
    words: Vec<u64>,
    n_bits: u64,
}

impl BitVectorBuilder {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with_capacity(bits: u64) -> Self {
        Self {
            words: Vec::with_capacity(words_for_bits(bits)),
            n_bits: 0,
        }
    }

    #[inline]
    pub fn push(&mut self, bit: bool) {
        let word = (self.n_bits / 64) as usize;
        if word == self.words.len() {
            self.words.push(0);
        }
        if bit {
            self.words[word] |= 1u64 << (self.n_bits % 64);
        }
        self.n_bits += 1;
    }

    pub fn finish(self) -> BitVector {
        let ones = self.words.iter().map(|w| w.count_ones() as u64).sum();
        BitVector {
            words: self.words,
            n_bits: self.n_bits,
            ones,
        }
    }
}

impl BitVector {
    /// Build from an ordered sequence of bits.
    pub fn from_bits<I>(bits: I) -> Self
    where
        I: IntoIterator<Item = bool>,
    {
        let mut b = BitVectorBuilder::new();
        for bit in bits {
            b.push(bit);
        }
        b.finish()
    }

    /// Build from raw words; bits at positions `>= n_bits` are cleared.
    ///
    /// # Panics
    ///
    /// Panics if `n_bits` exceeds the capacity of `words`.
    pub fn from_words(mut words: Vec<u64>, n_bits: u64) -> Self {
        assert!(
            n_bits as usize <= words.len() * 64,
            "n_bits {} exceeds capacity {}",
            n_bits,
            words.len() * 64
        );
        words.truncate(words_for_bits(n_bits));
        let tail = n_bits % 64;
        if tail > 0 {
            let last = words.len() - 1;
            words[last] &= (1u64 << tail) - 1;
        }
        let ones = words.iter().map(|w| w.count_ones() as u64).sum();
        Self { words, n_bits, ones }
    }

    /// Number of bits.
    #[inline]
    pub fn len(&self) -> u64 {
        self.n_bits
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.n_bits == 0
    }

    /// Total number of set bits, cached at construction.
    #[inline]
    pub fn count_ones(&self) -> u64 {
        self.ones
    }

    /// Backing words, least-significant bit first.
    #[inline]
    pub fn words(&self) -> &[u64] {
        &self.words
    }

    /// The bit at position `i`.
    #[inline]
    pub fn get(&self, i: u64) -> Result<bool> {
        if i >= self.n_bits {
            return Err(Error::IndexOutOfRange {
                index: i,
                limit: self.n_bits,
            });
        }
        Ok(self.words[(i / 64) as usize] >> (i % 64) & 1 == 1)
    }

    /// Number of set bits in the half-open range `[start, end)`.
    ///
    /// Whole-word popcounts plus masked partial words at both ends.
    pub fn ones_in_range(&self, start: u64, end: u64) -> Result<u64> {
        if start > end || end > self.n_bits {
            return Err(Error::RangeOutOfBounds {
                start,
                end,
                len: self.n_bits,
            });
        }
        Ok(self.ones_in_range_unchecked(start, end))
    }

    #[inline]
    fn ones_in_range_unchecked(&self, start: u64, end: u64) -> u64 {
        if start == end {
            return 0;
        }
        let first = (start / 64) as usize;
        let last = ((end - 1) / 64) as usize;
        let lo = start % 64;
        let hi = end - 64 * last as u64; // bits used in the last word, 1..=64
        if first == last {
            let mask = if hi == 64 { u64::MAX } else { (1u64 << hi) - 1 };
            return ((self.words[first] & mask) >> lo).count_ones() as u64;
        }
        let mut total = (self.words[first] >> lo).count_ones() as u64;
        for w in &self.words[first + 1..last] {
            total += w.count_ones() as u64;
        }
        let mask = if hi == 64 { u64::MAX } else { (1u64 << hi) - 1 };
        total + (self.words[last] & mask).count_ones() as u64
    }

    /// Number of set bits among the first `i` bits (the half-open prefix).
    ///
    /// Linear reference implementation; `rank1(0) = 0`,
    /// `rank1(len) = count_ones()`.
    pub fn rank1(&self, i: u64) -> Result<u64> {
        if i > self.n_bits {
            return Err(Error::IndexOutOfRange {
                index: i,
                limit: self.n_bits,
            });
        }
        Ok(self.ones_in_range_unchecked(0, i))
    }

    /// Number of zero bits among the first `i` bits: `i - rank1(i)`.
    pub fn rank0(&self, i: u64) -> Result<u64> {
        Ok(i - self.rank1(i)?)
    }

    /// Position of the `j`-th set bit (1-based ordinal).
    ///
    /// Linear reference implementation.
    pub fn select1(&self, j: u64) -> Result<u64> {
        if j == 0 || j > self.ones {
            return Err(Error::OrdinalOutOfRange {
                ordinal: j,
                ones: self.ones,
            });
        }
        let mut remaining = j;
        for (idx, &w) in self.words.iter().enumerate() {
            let pop = w.count_ones() as u64;
            if remaining <= pop {
                return Ok(idx as u64 * 64 + select_in_word(w, remaining as u32) as u64);
            }
            remaining -= pop;
        }
        unreachable!("ones count is consistent with the words");
    }

    /// Copy `out.len()` bytes starting at byte `byte_start` of the packed
    /// representation. Bytes past the end of the data read as zero.
    pub(crate) fn copy_bytes(&self, byte_start: usize, out: &mut [u8]) {
        for (t, slot) in out.iter_mut().enumerate() {
            let g = byte_start + t;
            let w = g / 8;
            *slot = if w < self.words.len() {
                (self.words[w] >> (8 * (g % 8))) as u8
            } else {
                0
            };
        }
    }

    /// Extract `len` bits starting at bit `start` into freshly packed bytes
    /// (LSB-first). Bits past the end of the vector read as zero.
    pub(crate) fn extract_bits(&self, start: u64, len: u64) -> Vec<u8> {
        let n_bytes = (len as usize).div_ceil(8);
        let mut out = vec![0u8; n_bytes];
        for (ob, slot) in out.iter_mut().enumerate() {
            let pos = start + 8 * ob as u64;
            let n = (len - 8 * ob as u64).min(8);
            *slot = self.read_bits_u8(pos, n);
        }
        out
    }

    /// Up to 8 bits starting at bit `pos`; out-of-range bits read as zero.
    #[inline]
    fn read_bits_u8(&self, pos: u64, n: u64) -> u8 {
        debug_assert!(n >= 1 && n <= 8);
        let w = (pos / 64) as usize;
        let shift = pos % 64;
        let mut chunk = if w < self.words.len() {
            self.words[w] >> shift
        } else {
            0
        };
        if shift + n > 64 && w + 1 < self.words.len() {
            chunk |= self.words[w + 1] << (64 - shift);
        }
        (chunk & ((1u64 << n) - 1)) as u8
    }

    /// Serialize as `magic | n_bits (u64 LE) | words (u64 LE each)`.
    pub fn serialize(&self) -> Vec<u8> {
        let mut out = Vec::with_capacity(12 + 8 * self.words.len());
        out.extend_from_slice(MAGIC);
        out.extend_from_slice(&self.n_bits.to_le_bytes());
        for w in &self.words {
            out.extend_from_slice(&w.to_le_bytes());
        }
        out
    }

    /// Inverse of [`serialize`](Self::serialize); validates magic, length
    /// and tail padding.
    pub fn deserialize(bytes: &[u8]) -> Result<Self> {
        if bytes.len() < 12 {
            return Err(Error::InvalidFormat("truncated bitvector header".into()));
        }
        if &bytes[..4] != MAGIC {
            return Err(Error::InvalidFormat("bad bitvector magic".into()));
        }
        let n_bits = u64::from_le_bytes(bytes[4..12].try_into().unwrap());
        let n_words = words_for_bits(n_bits);
        let expect = 12 + 8 * n_words;
        if bytes.len() != expect {
            return Err(Error::InvalidFormat(format!(
                "bitvector stream is {} bytes, expected {}",
                bytes.len(),
                expect
            )));
        }
        let words: Vec<u64> = bytes[12..]
            .chunks_exact(8)
            .map(|c| u64::from_le_bytes(c.try_into().unwrap()))
            .collect();
        let tail = n_bits % 64;
        if tail > 0 && words[n_words - 1] & !((1u64 << tail) - 1) != 0 {
            return Err(Error::InvalidFormat(
                "nonzero padding bits in last word".into(),
            ));
        }
        let ones = words.iter().map(|w| w.count_ones() as u64).sum();
        Ok(Self { words, n_bits, ones })
    }
}
