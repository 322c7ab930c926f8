//! Canonical Huffman codes over byte alphabets.

use std::cmp::Reverse;
use std::collections::BinaryHeap;
use std::fmt;

use crate::error::{Error, Result};

/// A prefix-free code word. Bit `t` (from [`Code::bit`]) is the routing
/// decision at depth `t` of the code tree: `false` = left, `true` = right.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Code {
    /// Routing bits packed LSB-first: bit `t` of the code is `bits >> t & 1`.
    bits: u128,
    len: u32,
}

impl Code {
    /// Build from a number whose `len` low bits are the code MSB-first,
    /// as produced by canonical code assignment.
    pub(crate) fn from_msb_value(value: u128, len: u32) -> Self {
        debug_assert!(len <= 128);
        let mut bits = 0u128;
        for t in 0..len {
            if value >> (len - 1 - t) & 1 == 1 {
                bits |= 1 << t;
            }
        }
        Self { bits, len }
    }

    #[inline]
    pub fn len(&self) -> u32 {
        self.len
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    /// Routing bit at depth `t` (0-based from the root).
    #[inline]
    pub fn bit(&self, t: u32) -> bool {
        debug_assert!(t < self.len);
        self.bits >> t & 1 == 1
    }

    /// The first `depth` routing bits, packed LSB-first.
    #[inline]
    pub(crate) fn prefix(&self, depth: u32) -> u128 {
        debug_assert!(depth <= self.len);
        if depth == 0 {
            0
        } else {
            self.bits & ((1u128 << depth) - 1)
        }
    }
}

impl fmt::Display for Code {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for t in 0..self.len {
            write!(f, "{}", if self.bit(t) { '1' } else { '0' })?;
        }
        Ok(())
    }
}

/// Canonical Huffman codes for the symbols with nonzero frequency.
///
/// Returned sorted by symbol. Lengths come from a standard Huffman build
/// with deterministic `(weight, creation order)` tie-breaking; code words
/// are then reassigned canonically, sorted by `(length, symbol)`. A
/// single-symbol alphabet gets the one-bit code `0`.
pub fn huffman_codes(freqs: &[u64; 256]) -> Result<Vec<(u8, Code)>> {
    let symbols: Vec<u8> = (0..=255u8).filter(|&s| freqs[s as usize] > 0).collect();
    if symbols.is_empty() {
        return Err(Error::EmptyInput("huffman_codes needs a nonzero frequency"));
    }
    if symbols.len() == 1 {
        return Ok(vec![(symbols[0], Code::from_msb_value(0, 1))]);
    }

    // Huffman tree over (weight, creation id); ids make ties deterministic.
    #[derive(Clone, Copy)]
    struct Node {
        children: Option<(usize, usize)>,
    }
    let mut nodes: Vec<Node> = symbols.iter().map(|_| Node { children: None }).collect();
    let mut heap: BinaryHeap<Reverse<(u64, usize)>> = symbols
        .iter()
        .enumerate()
        .map(|(id, &s)| Reverse((freqs[s as usize], id)))
        .collect();
    while heap.len() > 1 {
        let Reverse((w1, a)) = heap.pop().unwrap();
        let Reverse((w2, b)) = heap.pop().unwrap();
        let id = nodes.len();
        nodes.push(Node {
            children: Some((a, b)),
        });
        heap.push(Reverse((w1 + w2, id)));
    }
    let root = heap.pop().unwrap().0 .1;

    // depth of each leaf = code length
    let mut lengths = vec![0u32; symbols.len()];
    let mut stack = vec![(root, 0u32)];
    while let Some((idx, depth)) = stack.pop() {
        match nodes[idx].children {
            Some((a, b)) => {
                stack.push((a, depth + 1));
                stack.push((b, depth + 1));
            }
            None => lengths[idx] = depth,
        }
    }

    // canonical assignment sorted by (length, symbol)
    let mut order: Vec<usize> = (0..symbols.len()).collect();
    order.sort_by_key(|&i| (lengths[i], symbols[i]));
    let mut out = Vec::with_capacity(symbols.len());
    let mut code: u128 = 0;
    let mut prev_len = lengths[order[0]];
    for (pos, &i) in order.iter().enumerate() {
        let len = lengths[i];
        if pos > 0 {
            code = (code + 1) << (len - prev_len);
        }
        out.push((symbols[i], Code::from_msb_value(code, len)));
        prev_len = len;
    }
    out.sort_by_key(|&(s, _)| s);
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn freq_map(pairs: &[(u8, u64)]) -> [u64; 256] {
        let mut f = [0u64; 256];
        for &(s, c) in pairs {
            f[s as usize] = c;
        }
        f
    }

    #[test]
    fn symmetric_pair() {
        let codes = huffman_codes(&freq_map(&[(b'a', 1), (b'b', 1)])).unwrap();
        assert_eq!(codes.len(), 2);
        assert_eq!(codes[0].1.to_string(), "0");
        assert_eq!(codes[1].1.to_string(), "1");
    }

    #[test]
    fn skewed_triple_lengths() {
        let codes = huffman_codes(&freq_map(&[(b'a', 5), (b'b', 1), (b'c', 1)])).unwrap();
        let by_sym: std::collections::HashMap<u8, Code> = codes.into_iter().collect();
        assert_eq!(by_sym[&b'a'].len(), 1);
        assert_eq!(by_sym[&b'b'].len(), 2);
        assert_eq!(by_sym[&b'c'].len(), 2);
    }

    #[test]
    fn single_symbol_gets_one_bit() {
        let codes = huffman_codes(&freq_map(&[(b'a', 1)])).unwrap();
        assert_eq!(codes, vec![(b'a', Code::from_msb_value(0, 1))]);
        assert_eq!(codes[0].1.to_string(), "0");
    }

    #[test]
    fn empty_frequencies_rejected() {
        assert!(huffman_codes(&[0u64; 256]).is_err());
    }

    #[test]
    fn codes_are_prefix_free() {
        let mut f = [0u64; 256];
        for s in 0..=255u16 {
            f[s as usize] = (s as u64 * s as u64) % 97 + 1;
        }
        let codes = huffman_codes(&f).unwrap();
        for (i, (_, a)) in codes.iter().enumerate() {
            for (_, b) in codes.iter().skip(i + 1) {
                let d = a.len().min(b.len());
                assert!(
                    a.prefix(d) != b.prefix(d),
                    "codes {a} and {b} share a prefix"
                );
            }
        }
    }

    #[test]
    fn code_bit_order_round_trips() {
        let c = Code::from_msb_value(0b1011, 4);
        assert_eq!(c.to_string(), "1011");
        assert_eq!(c.bit(0), true);
        assert_eq!(c.bit(1), false);
        assert_eq!(c.bit(2), true);
        assert_eq!(c.bit(3), true);
    }
}
