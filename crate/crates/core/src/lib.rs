//! Exact and modular computation of Bell numbers, Stirling numbers of the
//! second kind and the shift polynomials `P_j`, plus a brute-force
//! set-partition oracle for checking them.
//!
//! * [`exact`]: binomial, Stirling and Bell tables over arbitrary precision.
//! * [`shift_poly`]: `P_j` by closed form and by recurrence, and the shifted
//!   Bell identity `B_{n+j} = Σ_k P_j(k)·S(n, k)`.
//! * [`modular`]: reduction modulo a prime, Touchard's congruence and a
//!   word-sized Bell residue stream.
//! * [`partition`]: restricted growth strings, the translation action of
//!   `Z/qZ` and its orbits.

pub mod error;
pub mod exact;
pub mod modular;
pub mod partition;
pub mod shift_poly;

pub use error::{Error, Result};
pub use exact::{binomial_row, BellTable, BinomialTable, StirlingTriangle};
pub use modular::{
    bell_mod_p_stream, bell_seeds, binomial_vanishing_check, is_prime, lemma_residue,
    reduce_shift_poly, touchard_check, CongruenceReport, Counterexample, PrimePower,
    ReducedShiftPoly, ReductionCase,
};
pub use partition::{
    congruence_class_partition, is_fixed_by_all_shifts, OrbitSummary, PartitionOracle, Partitions,
    SetPartition, TranslationAction, DEFAULT_ENUMERATION_CAP,
};
pub use shift_poly::{bell_shift, ShiftPolynomial};
