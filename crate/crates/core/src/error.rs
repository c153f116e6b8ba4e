use thiserror::Error;

/// Errors produced by the function algebra and the bounded search machinery.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("arity mismatch: expected {expected}, got {got}")]
    ArityMismatch { expected: usize, got: usize },
    #[error("arity {0} out of range (must be 1..={max})", max = crate::MAX_ARITY)]
    ArityOutOfRange(usize),
    #[error("argument index {index} out of range for arity {arity}")]
    IndexOutOfRange { index: usize, arity: usize },
    #[error("subset {mask:#x} is not a subset of {{1..{arity}}}")]
    SubsetOutOfRange { mask: u32, arity: usize },
    #[error("minor map image {image} outside target arity {target}")]
    BadMinorMap { image: usize, target: usize },
    #[error("support size {got} does not match required {expected}")]
    BadSupport { expected: usize, got: usize },
    #[error("arity cap exceeded: {requested} > {cap}")]
    CapExceeded { requested: usize, cap: usize },
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("{0} is not a supported prime (2, 3, 5, or 7)")]
    NotPrime(u32),
    #[error("mixed primes: {0} vs {1}")]
    MixedPrime(u32, u32),
    #[error("table size bound exceeded: p^n = {size} > {bound}")]
    SizeBound { size: u64, bound: u64 },
}

pub type Result<T> = std::result::Result<T, Error>;
