//! The `touchard` command line.
//!
//! Exit status: 0 when every check passes, 1 when a computation disagrees
//! with an identity or congruence it should satisfy, 2 for usage errors.

use std::io::{self, Write};

use clap::{Args, Parser, Subcommand};
use num_bigint::BigUint;
use thiserror::Error;
use touchard_core::{
    bell_mod_p_stream, bell_seeds, congruence_class_partition, lemma_residue, reduce_shift_poly,
    touchard_check, BellTable, BinomialTable, PartitionOracle, PrimePower, ShiftPolynomial,
    StirlingTriangle, DEFAULT_ENUMERATION_CAP,
};

pub mod output;

use output::{Emitter, Format, Record};

pub const DEFAULT_TABLE_DEPTH: usize = 200;
pub const DEPTH_ENV: &str = "TOUCHARD_DEPTH";
pub const CAP_ENV: &str = "TOUCHARD_CAP";

#[derive(Debug, Parser)]
#[command(
    name = "touchard",
    version,
    about = "Exact and modular Bell number toolkit"
)]
pub struct Cli {
    #[command(flatten)]
    pub config: RunConfig,

    #[command(subcommand)]
    pub command: Command,
}

/// Options shared by every subcommand. Flags override the environment,
/// which overrides the defaults.
#[derive(Debug, Clone, Args)]
pub struct RunConfig {
    /// Output format: tsv or json-lines
    #[arg(long, global = true, default_value_t = Format::Tsv)]
    pub format: Format,

    /// Largest index any exact table may be built to
    #[arg(long = "depth", global = true, env = DEPTH_ENV, default_value_t = DEFAULT_TABLE_DEPTH)]
    pub table_depth: usize,

    /// Largest ground set the partition enumerator will accept
    #[arg(
        long = "cap",
        global = true,
        env = CAP_ENV,
        default_value_t = DEFAULT_ENUMERATION_CAP,
        value_parser = parse_cap,
    )]
    pub enumeration_cap: usize,
}

fn parse_cap(s: &str) -> Result<usize, String> {
    let cap: usize = s.parse().map_err(|e| format!("{e}"))?;
    if (1..=touchard_core::partition::MAX_GROUND_SET).contains(&cap) {
        Ok(cap)
    } else {
        Err(format!(
            "cap must be between 1 and {}",
            touchard_core::partition::MAX_GROUND_SET
        ))
    }
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            format: Format::Tsv,
            table_depth: DEFAULT_TABLE_DEPTH,
            enumeration_cap: DEFAULT_ENUMERATION_CAP,
        }
    }
}

#[derive(Debug, Clone, Subcommand)]
pub enum Command {
    /// Bell numbers B_0..B_N
    Bell {
        n: usize,
        /// Also compute Stirling row sums and compare
        #[arg(long)]
        cross_check: bool,
    },
    /// Stirling numbers of the second kind, rows 0..N
    Stirling { n: usize },
    /// Coefficients of the shift polynomial P_j, ascending
    ShiftPoly {
        j: usize,
        /// Also build P_j by recurrence and compare
        #[arg(long)]
        check: bool,
    },
    /// Touchard's congruence for p^m over n in [N_LO, N_HI]
    Verify {
        p: u64,
        m: u32,
        n_lo: usize,
        n_hi: usize,
    },
    /// Orbits of Z/p^mZ translating the partitions of Z/p^mZ
    Orbits { p: u64, m: u32 },
    /// B_0..B_N mod p from the m = 1 congruence
    BellMod {
        p: u64,
        n: usize,
        /// Skip comparison with exact residues
        #[arg(long)]
        no_cross_check: bool,
    },
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Core(#[from] touchard_core::Error),
    #[error("write failed: {0}")]
    Io(#[from] io::Error),
}

/// Result of a command that ran to completion.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Outcome {
    Passed,
    /// A check failed; the message says which.
    Counterexample(String),
}

impl Outcome {
    fn from_check(ok: bool, message: impl FnOnce() -> String) -> Self {
        if ok {
            Outcome::Passed
        } else {
            Outcome::Counterexample(message())
        }
    }
}

pub fn exit_code(result: &Result<Outcome, CliError>) -> u8 {
    match result {
        Ok(Outcome::Passed) => 0,
        Ok(Outcome::Counterexample(_)) => 1,
        Err(_) => 2,
    }
}

fn check_depth(config: &RunConfig, needed: usize, what: &str) -> Result<(), CliError> {
    if needed > config.table_depth {
        return Err(CliError::Usage(format!(
            "{what} needs tables to index {needed}, but the depth limit is {} (raise --depth or {DEPTH_ENV})",
            config.table_depth
        )));
    }
    Ok(())
}

pub fn run<W: Write>(cli: &Cli, out: W) -> Result<Outcome, CliError> {
    let config = &cli.config;
    let mut em = Emitter::new(out, config.format);
    let outcome = match &cli.command {
        Command::Bell { n, cross_check } => cmd_bell(config, *n, *cross_check, &mut em),
        Command::Stirling { n } => cmd_stirling(config, *n, &mut em),
        Command::ShiftPoly { j, check } => cmd_shift_poly(config, *j, *check, &mut em),
        Command::Verify { p, m, n_lo, n_hi } => cmd_verify(config, *p, *m, *n_lo, *n_hi, &mut em),
        Command::Orbits { p, m } => cmd_orbits(config, *p, *m, &mut em),
        Command::BellMod {
            p,
            n,
            no_cross_check,
        } => cmd_bell_mod(config, *p, *n, !no_cross_check, &mut em),
    }?;
    em.flush()?;
    Ok(outcome)
}

fn cmd_bell<W: Write>(
    config: &RunConfig,
    n: usize,
    cross_check: bool,
    em: &mut Emitter<W>,
) -> Result<Outcome, CliError> {
    check_depth(config, n, "bell")?;
    let bell = BellTable::build(n);
    if cross_check {
        let tri = StirlingTriangle::build(n);
        for (i, b) in bell.values().iter().enumerate() {
            let other = tri.bell(i)?;
            if *b != other {
                return Ok(Outcome::Counterexample(format!(
                    "B_{i}: binomial recurrence gives {b}, Stirling row sum gives {other}"
                )));
            }
        }
    }
    for (i, b) in bell.values().iter().enumerate() {
        em.emit(&Record::new().with("index", i).with("value", b))?;
    }
    Ok(Outcome::Passed)
}

fn cmd_stirling<W: Write>(
    config: &RunConfig,
    n: usize,
    em: &mut Emitter<W>,
) -> Result<Outcome, CliError> {
    check_depth(config, n, "stirling")?;
    let tri = StirlingTriangle::build(n);
    for (row_n, row) in tri.rows().enumerate() {
        for (k, v) in row.iter().enumerate() {
            em.emit(&Record::new().with("n", row_n).with("k", k).with("value", v))?;
        }
    }
    Ok(Outcome::Passed)
}

fn cmd_shift_poly<W: Write>(
    config: &RunConfig,
    j: usize,
    check: bool,
    em: &mut Emitter<W>,
) -> Result<Outcome, CliError> {
    check_depth(config, j, "shift-poly")?;
    let closed = ShiftPolynomial::closed_form(j, &BellTable::build(j), &BinomialTable::build(j))?;
    if !check {
        for (r, c) in closed.coeffs().iter().enumerate() {
            em.emit(&Record::new().with("r", r).with("coefficient", c))?;
        }
        return Ok(Outcome::Passed);
    }
    let recursive = ShiftPolynomial::recursive(j);
    for (r, (a, b)) in closed.coeffs().iter().zip(recursive.coeffs()).enumerate() {
        em.emit(
            &Record::new()
                .with("r", r)
                .with("coefficient", a)
                .with("recursive", b)
                .with("agree", a == b),
        )?;
    }
    Ok(Outcome::from_check(closed == recursive, || {
        format!("closed form and recurrence disagree for P_{j}")
    }))
}

fn prime_power(p: u64, m: u32) -> Result<PrimePower, CliError> {
    PrimePower::new(p, m).map_err(|e| CliError::Usage(e.to_string()))
}

fn cmd_verify<W: Write>(
    config: &RunConfig,
    p: u64,
    m: u32,
    n_lo: usize,
    n_hi: usize,
    em: &mut Emitter<W>,
) -> Result<Outcome, CliError> {
    let pp = prime_power(p, m)?;
    if n_lo > n_hi {
        return Err(CliError::Usage(format!("empty range: {n_lo} > {n_hi}")));
    }
    let top = n_hi
        .checked_add(pp.index())
        .ok_or_else(|| CliError::Usage("range end overflows".into()))?;
    check_depth(config, top, "verify")?;
    let bell = BellTable::build(top);

    let mut failures = Vec::new();

    let predicted = lemma_residue(pp);
    let actual = bell.residues(p)[pp.index()];
    em.emit(
        &Record::kind("lemma")
            .with("p", p)
            .with("m", m)
            .with("q", pp.value())
            .with("residue", actual)
            .with("predicted", predicted)
            .with("holds", actual == predicted),
    )?;
    if actual != predicted {
        failures.push(format!(
            "B_{} = {actual} mod {p}, expected {predicted}",
            pp.value()
        ));
    }

    match reduce_shift_poly(pp, &bell) {
        Ok(reduced) => em.emit(
            &Record::kind("reduction")
                .with("p", p)
                .with("m", m)
                .with("constant", reduced.constant)
                .with("linear", reduced.linear())
                .with("case", format!("{:?}", reduced.case)),
        )?,
        Err(e @ touchard_core::Error::ReductionFailed { .. }) => failures.push(e.to_string()),
        Err(e) => return Err(e.into()),
    }

    let report = touchard_check(pp, n_lo, n_hi, &bell)?;
    for c in &report.counterexamples {
        em.emit(
            &Record::kind("counterexample")
                .with("n", c.n)
                .with("lhs", c.lhs)
                .with("rhs", c.rhs),
        )?;
    }
    em.emit(
        &Record::kind("summary")
            .with("p", p)
            .with("m", m)
            .with("n_lo", n_lo)
            .with("n_hi", n_hi)
            .with("checked", report.checked)
            .with("counterexamples", report.counterexamples.len()),
    )?;
    if !report.holds() {
        failures.push(format!(
            "{} counterexamples to the congruence for {pp}",
            report.counterexamples.len()
        ));
    }
    Ok(Outcome::from_check(failures.is_empty(), || {
        failures.join("; ")
    }))
}

fn cmd_orbits<W: Write>(
    config: &RunConfig,
    p: u64,
    m: u32,
    em: &mut Emitter<W>,
) -> Result<Outcome, CliError> {
    let pp = prime_power(p, m)?;
    let q = pp.index();
    check_depth(config, q, "orbits")?;
    let oracle = PartitionOracle::new(config.enumeration_cap);
    let orbits = oracle.orbit_decomposition(q)?;

    let total: usize = orbits.iter().map(|o| o.size).sum();
    let fixed: Vec<_> = orbits
        .iter()
        .filter(|o| o.is_fixed())
        .map(|o| &o.representative)
        .collect();
    let bell = BellTable::build(q);
    let bell_residue = bell.residues(p)[q];
    let count_residue = fixed.len() as u64 % p;
    em.emit(
        &Record::kind("summary")
            .with("p", p)
            .with("m", m)
            .with("q", q)
            .with("total", total)
            .with("orbits", orbits.len())
            .with("fixed", fixed.len())
            .with("bell_residue", bell_residue),
    )?;

    let mut histogram = std::collections::BTreeMap::new();
    for o in &orbits {
        *histogram.entry(o.size).or_insert(0usize) += 1;
    }
    for (size, count) in &histogram {
        em.emit(
            &Record::kind("histogram")
                .with("size", *size)
                .with("count", *count),
        )?;
    }

    let classes: Vec<_> = (0..=m)
        .map(|j| congruence_class_partition(pp, j))
        .collect::<Result<_, _>>()?;
    let mut unmatched = 0;
    for part in &fixed {
        let level = classes.iter().position(|c| c == *part);
        if level.is_none() {
            unmatched += 1;
        }
        let sizes = part.block_sizes();
        em.emit(
            &Record::kind("fixed")
                .with("partition", part.to_string())
                .with("blocks", sizes.len())
                .with("block_size", sizes[0])
                .with(
                    "level",
                    level.map_or_else(|| "none".to_owned(), |l| l.to_string()),
                ),
        )?;
    }

    let powers_of_p = histogram.keys().all(|&s| {
        let mut s = s as u64;
        while s.is_multiple_of(p) {
            s /= p;
        }
        s == 1
    });
    let ok = fixed.len() == m as usize + 1
        && count_residue == bell_residue
        && unmatched == 0
        && powers_of_p
        && BigUint::from(total) == *bell.get(q)?;
    Ok(Outcome::from_check(ok, || {
        format!(
            "{pp}: {} fixed partitions ({unmatched} not congruence classes), B_{q} = {bell_residue} mod {p}",
            fixed.len()
        )
    }))
}

fn cmd_bell_mod<W: Write>(
    config: &RunConfig,
    p: u64,
    n: usize,
    cross_check: bool,
    em: &mut Emitter<W>,
) -> Result<Outcome, CliError> {
    let pp = prime_power(p, 1)?;
    let seed_top = pp.index() - 1;
    check_depth(config, seed_top, "bell-mod seeds")?;
    let seeds = bell_seeds(p, &BellTable::build(seed_top))?;
    let stream = bell_mod_p_stream(p, n, &seeds)?;

    if cross_check && n <= config.table_depth {
        let exact = BellTable::build(n).residues(p);
        if let Some(i) = (0..=n).find(|&i| exact[i] != stream[i]) {
            return Ok(Outcome::Counterexample(format!(
                "B_{i} mod {p}: stream gives {}, exact reduction gives {}",
                stream[i], exact[i]
            )));
        }
    }
    for (i, r) in stream.iter().enumerate() {
        em.emit(&Record::new().with("n", i).with("residue", *r))?;
    }
    Ok(Outcome::Passed)
}
