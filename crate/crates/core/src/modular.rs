//! Congruences modulo a prime `p`.
//!
//! Covers the collapse of `P_{p^m}` to `B_{p^m} + x` modulo `p`, the residue
//! `B_{p^m} ≡ m + 1`, Touchard's congruence
//! `B_{n+p^m} ≡ m·B_n + B_{n+1} (mod p)`, and the word-sized Bell stream that
//! the `m = 1` case yields.

use std::fmt;

use num_bigint::BigUint;

use crate::error::{Error, Result};
use crate::exact::{binomial_row, reduce, BellTable, BinomialTable};

/// Largest prime accepted: `p²` must fit in a `u64`.
pub const MAX_PRIME: u64 = u32::MAX as u64;

/// Trial-division primality test.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3u64;
    while d.saturating_mul(d) <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// A validated prime power `p^m` with `m >= 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PrimePower {
    p: u64,
    m: u32,
    value: u64,
}

impl PrimePower {
    pub fn new(p: u64, m: u32) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if p > MAX_PRIME {
            return Err(Error::PrimeTooLarge(p));
        }
        if m == 0 {
            return Err(Error::ZeroExponent);
        }
        let value = p
            .checked_pow(m)
            .filter(|v| usize::try_from(*v).is_ok())
            .ok_or(Error::PowerOverflow { p, m })?;
        Ok(PrimePower { p, m, value })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn value(&self) -> u64 {
        self.value
    }

    /// `p^m` as a table index.
    pub fn index(&self) -> usize {
        self.value as usize
    }

    /// `p^e` for `e <= m`.
    pub fn power(&self, e: u32) -> Result<u64> {
        if e > self.m {
            return Err(Error::LevelOutOfRange {
                level: e,
                max: self.m,
            });
        }
        Ok(self.p.pow(e))
    }

    /// Every prime power not exceeding `limit`, ordered by value.
    pub fn all_up_to(limit: u64) -> Vec<PrimePower> {
        let mut out = Vec::new();
        for p in (2..=limit.min(MAX_PRIME)).filter(|&p| is_prime(p)) {
            let mut m = 1;
            while let Some(v) = p.checked_pow(m).filter(|&v| v <= limit) {
                out.push(PrimePower { p, m, value: v });
                m += 1;
            }
        }
        out.sort_by_key(|pp| pp.value);
        out
    }
}

impl fmt::Display for PrimePower {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}^{}", self.p, self.m)
    }
}

/// Which branch of the interior-binomial argument applies to `p^m`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ReductionCase {
    OddPrime,
    /// `p = 2, m = 1`: the single interior binomial `C(2, 1) = 2` is even.
    EvenLinear,
    /// `p = 2, m = 2`: handled separately in the original argument.
    EvenSquare,
    /// `p = 2, m > 2`.
    EvenHigher,
}

impl ReductionCase {
    pub fn of(pp: PrimePower) -> Self {
        match (pp.p, pp.m) {
            (2, 1) => ReductionCase::EvenLinear,
            (2, 2) => ReductionCase::EvenSquare,
            (2, _) => ReductionCase::EvenHigher,
            _ => ReductionCase::OddPrime,
        }
    }
}

/// `P_{p^m}(x) mod p` after interior terms vanish and `x^{p^m} ≡ x`:
/// the linear polynomial `constant + x`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ReducedShiftPoly {
    pub pp: PrimePower,
    /// `B_{p^m} mod p`.
    pub constant: u64,
    pub case: ReductionCase,
}

impl ReducedShiftPoly {
    /// Coefficient of `x`, always 1 (it is `B_0`).
    pub fn linear(&self) -> u64 {
        1
    }

    /// `(constant + k) mod p`.
    pub fn eval(&self, k: u64) -> u64 {
        (self.constant + k % self.pp.p) % self.pp.p
    }
}

/// Reduces `P_{p^m}` modulo `p`.
///
/// Every exact coefficient `B_{p^m−r}·C(p^m, r)` is computed and reduced;
/// an interior coefficient that fails to vanish is reported as
/// [`Error::ReductionFailed`].
pub fn reduce_shift_poly(pp: PrimePower, bell: &BellTable) -> Result<ReducedShiftPoly> {
    let q = pp.index();
    bell.get(q)?;
    let modulus = BigUint::from(pp.p);
    let row = binomial_row(q);
    for (r, c) in row.iter().enumerate().take(q).skip(1) {
        let residue = reduce(&(bell.get(q - r)? * c), &modulus);
        if residue != 0 {
            return Err(Error::ReductionFailed {
                shift: q,
                degree: r,
                residue,
                p: pp.p,
            });
        }
    }
    Ok(ReducedShiftPoly {
        pp,
        constant: reduce(bell.get(q)?, &modulus),
        case: ReductionCase::of(pp),
    })
}

/// Whether `C(p^m, r) ≡ 0 (mod p)` for every `0 < r < p^m`.
pub fn binomial_vanishing_check(pp: PrimePower, binom: &BinomialTable) -> Result<bool> {
    let row = binom.row(pp.index())?;
    let modulus = BigUint::from(pp.p);
    Ok(row[1..row.len() - 1]
        .iter()
        .all(|c| reduce(c, &modulus) == 0))
}

/// The residue `(m + 1) mod p` predicted for `B_{p^m}`.
pub fn lemma_residue(pp: PrimePower) -> u64 {
    (u64::from(pp.m) + 1) % pp.p
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Counterexample {
    pub n: usize,
    /// `B_{n+p^m} mod p`.
    pub lhs: u64,
    /// `(m·B_n + B_{n+1}) mod p`.
    pub rhs: u64,
}

/// Outcome of sweeping Touchard's congruence over `n_lo..=n_hi`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CongruenceReport {
    pub pp: PrimePower,
    pub n_lo: usize,
    pub n_hi: usize,
    pub checked: usize,
    pub counterexamples: Vec<Counterexample>,
}

impl CongruenceReport {
    pub fn holds(&self) -> bool {
        self.counterexamples.is_empty()
    }

    /// Combines reports for adjacent or overlapping-free ranges of the same
    /// prime power.
    pub fn merge(mut self, other: CongruenceReport) -> CongruenceReport {
        debug_assert_eq!(self.pp, other.pp);
        self.n_lo = self.n_lo.min(other.n_lo);
        self.n_hi = self.n_hi.max(other.n_hi);
        self.checked += other.checked;
        self.counterexamples.extend(other.counterexamples);
        self.counterexamples.sort_by_key(|c| c.n);
        self
    }
}

pub fn touchard_check(
    pp: PrimePower,
    n_lo: usize,
    n_hi: usize,
    bell: &BellTable,
) -> Result<CongruenceReport> {
    if n_lo > n_hi {
        return Err(Error::EmptyRange { lo: n_lo, hi: n_hi });
    }
    let q = pp.index();
    let top = n_hi.checked_add(q).ok_or(Error::TableTooShallow {
        index: usize::MAX,
        depth: bell.max_index(),
    })?;
    bell.get(top)?;

    let p = pp.p;
    let residues: Vec<u64> = {
        let modulus = BigUint::from(p);
        bell.values()[..=top]
            .iter()
            .map(|b| reduce(b, &modulus))
            .collect()
    };
    let m = u64::from(pp.m) % p;
    let counterexamples = (n_lo..=n_hi)
        .filter_map(|n| {
            let lhs = residues[n + q];
            let rhs = (m * residues[n] + residues[n + 1]) % p;
            (lhs != rhs).then_some(Counterexample { n, lhs, rhs })
        })
        .collect();
    Ok(CongruenceReport {
        pp,
        n_lo,
        n_hi,
        checked: n_hi - n_lo + 1,
        counterexamples,
    })
}

/// `B_0..B_{p−1} mod p`, read from an exact table.
pub fn bell_seeds(p: u64, bell: &BellTable) -> Result<Vec<u64>> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let top = (p - 1) as usize;
    bell.get(top)?;
    let modulus = BigUint::from(p);
    Ok(bell.values()[..=top]
        .iter()
        .map(|b| reduce(b, &modulus))
        .collect())
}

/// Extends `B_0..B_{p−1} mod p` to `B_0..B_N mod p` with
/// `B_{n+p} ≡ B_n + B_{n+1}`.
pub fn bell_mod_p_stream(p: u64, n_max: usize, seeds: &[u64]) -> Result<Vec<u64>> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if p > MAX_PRIME {
        return Err(Error::PrimeTooLarge(p));
    }
    let window = p as usize;
    if seeds.len() != window {
        return Err(Error::SeedLength {
            expected: window,
            actual: seeds.len(),
        });
    }
    if let Some(&value) = seeds.iter().find(|&&s| s >= p) {
        return Err(Error::SeedOutOfRange { value, p });
    }
    let mut out = Vec::with_capacity(n_max + 1);
    out.extend_from_slice(&seeds[..window.min(n_max + 1)]);
    while out.len() <= n_max {
        let n = out.len() - window;
        out.push((out[n] + out[n + 1]) % p);
    }
    Ok(out)
}
