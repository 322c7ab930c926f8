use thiserror::Error;

/// Errors shared by all modules of the crate.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// A bit index or prefix length lies outside the vector.
    #[error("index {index} out of range (limit {limit})")]
    IndexOutOfRange { index: u64, limit: u64 },

    /// A half-open bit range is malformed or runs past the vector.
    #[error("range [{start}, {end}) out of bounds for {len} bits")]
    RangeOutOfBounds { start: u64, end: u64, len: u64 },

    /// A select ordinal is zero or exceeds the number of set bits.
    #[error("ordinal {ordinal} out of range (vector has {ones} ones)")]
    OrdinalOutOfRange { ordinal: u64, ones: u64 },

    /// A structure parameter violates one of its constraints.
    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    /// A differential offset does not fit its field.
    #[error("superblock {superblock}: offset diff {diff} exceeds budget {max}")]
    OffsetOverflow { superblock: usize, diff: u64, max: u64 },

    /// A serialized stream is malformed.
    #[error("invalid format: {0}")]
    InvalidFormat(String),

    /// Internal layout references do not resolve; the structure is damaged.
    #[error("corrupt structure: {0}")]
    Corrupt(String),

    /// An operation requires non-empty input.
    #[error("empty input: {0}")]
    EmptyInput(&'static str),

    /// A workload kind does not match the structure it is applied to.
    #[error("kind mismatch: expected {expected}, found {found}")]
    KindMismatch {
        expected: &'static str,
        found: &'static str,
    },
}

pub type Result<T> = std::result::Result<T, Error>;
