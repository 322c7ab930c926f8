//! Concatenated wavelet-tree bitvectors over byte texts.
//!
//! A binary wavelet tree routes every text symbol from the root towards
//! its leaf, one code bit per level (0 = left, 1 = right). Each internal
//! node records the routing bits of the symbols passing through it, in
//! text order. We concatenate the per-node bitvectors in breadth-first
//! node order (children visited left then right), which fixes a canonical
//! layout; any fixed order yields equivalent query workloads.

use std::collections::{HashMap, VecDeque};

use crate::bitvec::{BitVector, BitVectorBuilder};
use crate::error::{Error, Result};

use super::huffman::{huffman_codes, Code};

/// Which code assignment shapes the tree.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum WtShape {
    /// Fixed-width codes: the alphabet rank of each distinct byte,
    /// `ceil(log2(sigma))` bits.
    Balanced,
    /// Canonical Huffman codes of the byte frequencies.
    HuffmanShaped,
}

/// Per-symbol code table for `text` under the given shape.
///
/// Entry `s` is `None` when byte `s` does not occur in the text.
pub fn wt_code_table(text: &[u8], shape: WtShape) -> Result<Vec<Option<Code>>> {
    if text.is_empty() {
        return Err(Error::EmptyInput("wavelet tree construction needs text"));
    }
    let mut freqs = [0u64; 256];
    for &b in text {
        freqs[b as usize] += 1;
    }
    let mut table: Vec<Option<Code>> = vec![None; 256];
    match shape {
        WtShape::Balanced => {
            let symbols: Vec<u8> = (0..=255u8).filter(|&s| freqs[s as usize] > 0).collect();
            let sigma = symbols.len() as u32;
            let width = if sigma <= 1 { 0 } else { sigma.next_power_of_two().trailing_zeros() + u32::from(!sigma.is_power_of_two()) * 0 };
            // ceil(log2(sigma)) without float: bits needed for sigma - 1
            let width = if sigma <= 1 {
                0
            } else {
                32 - (sigma - 1).leading_zeros()
            };
            let _ = width; // shadowed above on purpose
            for (rank, &s) in symbols.iter().enumerate() {
                table[s as usize] = Some(Code::from_msb_value(rank as u128, width));
            }
        }
        WtShape::HuffmanShaped => {
            for (s, code) in huffman_codes(&freqs)? {
                table[s as usize] = Some(code);
            }
        }
    }
    Ok(table)
}

/// Concatenated wavelet-tree bits of `text`.
///
/// For each internal node in breadth-first order, one bit per symbol
/// routed through the node, in text order: the symbol's next code bit.
pub fn wt_concat_bits(text: &[u8], shape: WtShape) -> Result<BitVector> {
    let table = wt_code_table(text, shape)?;
    let mut out = BitVectorBuilder::new();
    // queue of (depth, symbols routed to this node)
    let mut queue: VecDeque<(u32, Vec<u8>)> = VecDeque::new();
    queue.push_back((0, text.to_vec()));
    while let Some((depth, syms)) = queue.pop_front() {
        let code0 = table[syms[0] as usize].as_ref().unwrap();
        if code0.len() == depth {
            // a code terminates here; prefix-freeness makes this a leaf
            continue;
        }
        let mut left = Vec::new();
        let mut right = Vec::new();
        for s in syms {
            let code = table[s as usize].as_ref().unwrap();
            debug_assert!(code.len() > depth, "prefix-free codes cannot mix here");
            let bit = code.bit(depth);
            out.push(bit);
            if bit {
                right.push(s);
            } else {
                left.push(s);
            }
        }
        if !left.is_empty() {
            queue.push_back((depth + 1, left));
        }
        if !right.is_empty() {
            queue.push_back((depth + 1, right));
        }
    }
    Ok(out.finish())
}

/// Reconstruct the text from [`wt_concat_bits`] output, the code table
/// and the text length. Inverse of the emission; used to check that the
/// concatenated bits preserve the whole text.
pub fn wt_decode(bits: &BitVector, table: &[Option<Code>], text_len: usize) -> Result<Vec<u8>> {
    if text_len == 0 {
        return Err(Error::EmptyInput("cannot decode an empty text"));
    }
    let leaf: HashMap<(u32, u128), u8> = table
        .iter()
        .enumerate()
        .filter_map(|(s, c)| c.as_ref().map(|c| ((c.len(), c.prefix(c.len())), s as u8)))
        .collect();

    let mut text = vec![0u8; text_len];
    let mut cursor: u64 = 0;
    // queue of (depth, path packed LSB-first, text indices at this node)
    let mut queue: VecDeque<(u32, u128, Vec<u32>)> = VecDeque::new();
    queue.push_back((0, 0, (0..text_len as u32).collect()));
    while let Some((depth, path, idxs)) = queue.pop_front() {
        if let Some(&sym) = leaf.get(&(depth, path)) {
            for i in idxs {
                text[i as usize] = sym;
            }
            continue;
        }
        let mut left = Vec::new();
        let mut right = Vec::new();
        for i in idxs {
            if cursor >= bits.len() {
                return Err(Error::InvalidFormat(
                    "wavelet bits exhausted before decoding finished".into(),
                ));
            }
            let bit = bits.get(cursor)?;
            cursor += 1;
            if bit {
                right.push(i);
            } else {
                left.push(i);
            }
        }
        if !left.is_empty() {
            queue.push_back((depth + 1, path, left));
        }
        if !right.is_empty() {
            queue.push_back((depth + 1, path | 1u128 << depth, right));
        }
    }
    if cursor != bits.len() {
        return Err(Error::InvalidFormat(format!(
            "decoded {} of {} wavelet bits",
            cursor,
            bits.len()
        )));
    }
    Ok(text)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::SplitMix64;

    fn bits_string(b: &BitVector) -> String {
        (0..b.len())
            .map(|i| if b.get(i).unwrap() { '1' } else { '0' })
            .collect()
    }

    #[test]
    fn two_symbol_balanced() {
        let b = wt_concat_bits(b"ab", WtShape::Balanced).unwrap();
        assert_eq!(bits_string(&b), "01");
    }

    #[test]
    fn abca_balanced_matches_per_node_filter() {
        // sigma = 3, 2-bit codes a=00 b=01 c=10; root 0,0,1,0;
        // left node (a,b,a) second bits 0,1,0; right node (c) second bit 0
        let b = wt_concat_bits(b"abca", WtShape::Balanced).unwrap();
        assert_eq!(bits_string(&b), "00100100");

        // independent construction: filter the text per node prefix
        let table = wt_code_table(b"abca", WtShape::Balanced).unwrap();
        let mut expect = String::new();
        let mut nodes: VecDeque<(u32, u128)> = VecDeque::new();
        nodes.push_back((0, 0));
        while let Some((depth, path)) = nodes.pop_front() {
            let mut any = false;
            let mut internal = false;
            let mut node_bits = String::new();
            for &s in b"abca" {
                let code = table[s as usize].as_ref().unwrap();
                if code.len() >= depth && code.prefix(depth) == path {
                    any = true;
                    if code.len() > depth {
                        internal = true;
                        node_bits.push(if code.bit(depth) { '1' } else { '0' });
                    }
                }
            }
            if any && internal {
                expect.push_str(&node_bits);
                nodes.push_back((depth + 1, path));
                nodes.push_back((depth + 1, path | 1u128 << depth));
            }
        }
        assert_eq!(bits_string(&b), expect);
    }

    #[test]
    fn emitted_bits_conserve_code_lengths() {
        for shape in [WtShape::Balanced, WtShape::HuffmanShaped] {
            let text = b"the quick brown fox jumps over the lazy dog";
            let bits = wt_concat_bits(text, shape).unwrap();
            let table = wt_code_table(text, shape).unwrap();
            let total: u64 = text
                .iter()
                .map(|&s| table[s as usize].as_ref().unwrap().len() as u64)
                .sum();
            assert_eq!(bits.len(), total);
        }
    }

    #[test]
    fn empty_text_rejected() {
        assert!(wt_concat_bits(b"", WtShape::Balanced).is_err());
    }

    #[test]
    fn single_symbol_texts() {
        // balanced: zero-width codes, no bits
        let b = wt_concat_bits(b"aaaa", WtShape::Balanced).unwrap();
        assert_eq!(b.len(), 0);
        let table = wt_code_table(b"aaaa", WtShape::Balanced).unwrap();
        assert_eq!(wt_decode(&b, &table, 4).unwrap(), b"aaaa");

        // huffman: one-bit code "0", one node of zeros
        let b = wt_concat_bits(b"aaaa", WtShape::HuffmanShaped).unwrap();
        assert_eq!(bits_string(&b), "0000");
        let table = wt_code_table(b"aaaa", WtShape::HuffmanShaped).unwrap();
        assert_eq!(wt_decode(&b, &table, 4).unwrap(), b"aaaa");
    }

    #[test]
    fn round_trip_randomized_texts() {
        let mut rng = SplitMix64::new(0xC0FFEE);
        for trial in 0..40 {
            let len = 1 + rng.next_below(500) as usize;
            let sigma = 1 + rng.next_below(50) as u8;
            let text: Vec<u8> = (0..len)
                .map(|_| b'0' + (rng.next_below(sigma as u64) as u8))
                .collect();
            for shape in [WtShape::Balanced, WtShape::HuffmanShaped] {
                let bits = wt_concat_bits(&text, shape).unwrap();
                let table = wt_code_table(&text, shape).unwrap();
                let back = wt_decode(&bits, &table, text.len()).unwrap();
                assert_eq!(back, text, "trial {trial} shape {shape:?}");
            }
        }
    }
}
