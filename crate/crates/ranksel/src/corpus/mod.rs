//! Deterministic dataset generation: seeded random bitvectors and
//! concatenated wavelet-tree bitvectors over byte texts.
//!
//! Everything here is a pure function of its inputs; the same arguments
//! always produce bit-identical output, so generated corpora can be
//! reproduced from a one-line description.

mod huffman;
mod random;
mod wavelet;

pub use huffman::{huffman_codes, Code};
pub use random::{random_bitvector, SplitMix64};
pub use wavelet::{wt_code_table, wt_concat_bits, wt_decode, WtShape};
