use thiserror::Error;

/// Usage errors raised by table lookups, constructors and the partition oracle.
///
/// None of these indicate a mathematical failure except
/// [`Error::ReductionFailed`], which would mean a shift polynomial did not
/// collapse to two terms modulo `p`.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("index {index} exceeds table depth {depth}")]
    TableTooShallow { index: usize, depth: usize },

    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("prime {0} is too large for word-sized residue arithmetic")]
    PrimeTooLarge(u64),

    #[error("exponent must be at least 1")]
    ZeroExponent,

    #[error("{p}^{m} does not fit in a machine word")]
    PowerOverflow { p: u64, m: u32 },

    #[error("shift polynomial has j = {actual}, expected j = {expected}")]
    ShiftMismatch { expected: usize, actual: usize },

    #[error("ground set size must be at least 1")]
    EmptyGroundSet,

    #[error("partitions of a {size}-element set exceed the enumeration cap of {cap}")]
    CapExceeded { size: usize, cap: usize },

    #[error("partition of a {size}-element set cannot be translated modulo {modulus}")]
    ModulusMismatch { size: usize, modulus: usize },

    #[error("shift {shift} is not a residue modulo {modulus}")]
    ShiftOutOfRange { shift: usize, modulus: usize },

    #[error("level {level} is out of range 0..={max}")]
    LevelOutOfRange { level: u32, max: u32 },

    #[error("expected {expected} seed residues, got {actual}")]
    SeedLength { expected: usize, actual: usize },

    #[error("seed residue {value} is not reduced modulo {p}")]
    SeedOutOfRange { value: u64, p: u64 },

    #[error("invalid range: {lo} > {hi}")]
    EmptyRange { lo: usize, hi: usize },

    #[error("coefficient of x^{degree} in P_{shift} is {residue} mod {p}, expected 0")]
    ReductionFailed {
        shift: usize,
        degree: usize,
        residue: u64,
        p: u64,
    },
}

pub type Result<T> = std::result::Result<T, Error>;
